#include "wildclust/errors.hpp"

namespace wildclust {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::ReduciblePresentation: return "ReduciblePresentation";
    case Errc::UnsupportedDegree: return "UnsupportedDegree";
    case Errc::PrecisionExhausted: return "PrecisionExhausted";
    case Errc::NegativeValuation: return "NegativeValuation";
    case Errc::ResidueFieldTooSmall: return "ResidueFieldTooSmall";
    case Errc::ValueGroupGap: return "ValueGroupGap";
    case Errc::NotSimpleRoot: return "NotSimpleRoot";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::NotImprovable: return "NotImprovable";
    case Errc::IterationCapExceeded: return "IterationCapExceeded";
    case Errc::InconsistentSlope: return "InconsistentSlope";
    case Errc::IndistinctRoots: return "IndistinctRoots";
    case Errc::EvenDegreeUnsupported: return "EvenDegreeUnsupported";
    case Errc::UnsupportedLeadingCoefficient: return "UnsupportedLeadingCoefficient";
    case Errc::NeverReachesCeiling: return "NeverReachesCeiling";
    case Errc::IndeterminateEll: return "IndeterminateEll";
    case Errc::InternalInvariantViolation: return "InternalInvariantViolation";
    case Errc::SchemaError: return "SchemaError";
  }
  return "Unknown";
}

}  // namespace wildclust
