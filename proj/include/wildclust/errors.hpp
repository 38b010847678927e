#pragma once

#include <stdexcept>
#include <string>

namespace wildclust {

enum class Errc {
  ReduciblePresentation,
  UnsupportedDegree,
  PrecisionExhausted,
  NegativeValuation,
  ResidueFieldTooSmall,
  ValueGroupGap,
  NotSimpleRoot,
  ZeroPolynomial,
  NotImprovable,
  IterationCapExceeded,
  InconsistentSlope,
  IndistinctRoots,
  EvenDegreeUnsupported,
  UnsupportedLeadingCoefficient,
  NeverReachesCeiling,
  IndeterminateEll,
  InternalInvariantViolation,
  SchemaError,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc c, const std::string& msg) { throw Error(c, msg); }

// Internal consistency check; throws InternalInvariantViolation.
inline void check(bool ok, const std::string& msg) {
  if (!ok) fail(Errc::InternalInvariantViolation, msg);
}

}  // namespace wildclust
