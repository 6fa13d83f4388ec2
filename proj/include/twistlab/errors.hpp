// Error taxonomy shared by all modules. Every domain failure carries a stable
// machine-readable code so the CLI can map it to an exit status and a JSON
// envelope.
#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace twistlab {

class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

#define TWISTLAB_SIMPLE_ERROR(Name)                      \
  class Name : public Error {                            \
   public:                                               \
    explicit Name(const std::string& message)            \
        : Error(#Name, message) {}                       \
  }

TWISTLAB_SIMPLE_ERROR(EmptyInput);
TWISTLAB_SIMPLE_ERROR(IncompatibleGrids);
TWISTLAB_SIMPLE_ERROR(PrincipalNotExceptional);
TWISTLAB_SIMPLE_ERROR(NonSymplecticSample);
TWISTLAB_SIMPLE_ERROR(EndpointMismatch);
TWISTLAB_SIMPLE_ERROR(NotALoop);
TWISTLAB_SIMPLE_ERROR(UnresolvedCrossingCluster);
TWISTLAB_SIMPLE_ERROR(InfiniteSupport);
TWISTLAB_SIMPLE_ERROR(ZeroDenominator);
TWISTLAB_SIMPLE_ERROR(ParityViolation);
TWISTLAB_SIMPLE_ERROR(NonIntegerCombination);
TWISTLAB_SIMPLE_ERROR(UnsupportedK);
TWISTLAB_SIMPLE_ERROR(IncompletePeriod);
TWISTLAB_SIMPLE_ERROR(InvalidDimension);
TWISTLAB_SIMPLE_ERROR(NonPositiveRho);
TWISTLAB_SIMPLE_ERROR(NonPositiveShift);
TWISTLAB_SIMPLE_ERROR(ScanFailure);
TWISTLAB_SIMPLE_ERROR(ParseError);

#undef TWISTLAB_SIMPLE_ERROR

// Raised when a crossing form restricted to ker(psi(t)-Id) has an eigenvalue
// inside the rank threshold. Carries the crossing time and the kernel
// spectrum so callers can decide how to perturb or refine.
class DegenerateCrossing : public Error {
 public:
  DegenerateCrossing(double time, std::vector<double> kernel_spectrum,
                     const std::string& message)
      : Error("DegenerateCrossing", message),
        time_(time),
        kernel_spectrum_(std::move(kernel_spectrum)) {}
  double time() const { return time_; }
  const std::vector<double>& kernel_spectrum() const {
    return kernel_spectrum_;
  }

 private:
  double time_;
  std::vector<double> kernel_spectrum_;
};

// Raised by the binding interpolation verifier; identifies the first failing
// interpolation parameter, radius and condition.
class ConditionViolated : public Error {
 public:
  ConditionViolated(double s, double r, std::string condition,
                    const std::string& message)
      : Error("ConditionViolated", message),
        s_(s),
        r_(r),
        condition_(std::move(condition)) {}
  double s() const { return s_; }
  double r() const { return r_; }
  const std::string& condition() const { return condition_; }

 private:
  double s_;
  double r_;
  std::string condition_;
};

}  // namespace twistlab
