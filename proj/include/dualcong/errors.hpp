#pragma once

#include <stdexcept>
#include <string>

namespace dualcong {

// Base of every library error. `kind()` is the stable name used in reports.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define DUALCONG_DEFINE_ERROR(Name)                                  \
  class Name : public Error {                                        \
   public:                                                           \
    explicit Name(const std::string& what) : Error(#Name, what) {}   \
  }

DUALCONG_DEFINE_ERROR(NotPIntegral);
DUALCONG_DEFINE_ERROR(ModulusMismatch);
DUALCONG_DEFINE_ERROR(NotInvertible);
DUALCONG_DEFINE_ERROR(InvalidPrime);
DUALCONG_DEFINE_ERROR(InternalFormMismatch);
DUALCONG_DEFINE_ERROR(DomainViolation);
DUALCONG_DEFINE_ERROR(CaseOutOfRange);
DUALCONG_DEFINE_ERROR(ExcludedPoint);
DUALCONG_DEFINE_ERROR(CacheMismatch);
DUALCONG_DEFINE_ERROR(UsageError);
DUALCONG_DEFINE_ERROR(IOError);

#undef DUALCONG_DEFINE_ERROR

}  // namespace dualcong
