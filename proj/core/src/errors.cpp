#include "gnorm/errors.hpp"

namespace gnorm {

const char* errc_name(errc c) {
  switch (c) {
    case errc::invalid_prime: return "InvalidPrime";
    case errc::invalid_exponent: return "InvalidExponent";
    case errc::parse_error: return "ParseError";
    case errc::validation_error: return "ValidationError";
    case errc::reducible: return "Reducible";
    case errc::not_absolutely_irreducible: return "NotAbsolutelyIrreducible";
    case errc::not_homogeneous: return "NotHomogeneous";
    case errc::not_a_curve: return "NotACurve";
    case errc::counit_violation: return "CounitViolation";
    case errc::coassociativity_violation: return "CoassociativityViolation";
    case errc::relation_not_preserved: return "RelationNotPreserved";
    case errc::illegal_t_degree: return "IllegalTDegree";
    case errc::not_restricted: return "NotRestricted";
    case errc::dependent_coefficients: return "DependentCoefficients";
    case errc::not_in_pth_powers: return "NotInPthPowers";
    case errc::not_zero_dimensional: return "NotZeroDimensional";
    case errc::point_not_on_support: return "PointNotOnSupport";
    case errc::zero_derivation: return "ZeroDerivation";
    case errc::not_g_stable: return "NotGStable";
    case errc::hypothesis_failure: return "HypothesisFailure";
    case errc::no_invariant_reduction: return "NoInvariantReduction";
    case errc::step_limit_exceeded: return "StepLimitExceeded";
    case errc::limit_exceeded: return "LimitExceeded";
  }
  return "UnknownError";
}

bool errc_is_validation(errc c) {
  switch (c) {
    case errc::no_invariant_reduction:
    case errc::step_limit_exceeded:
    case errc::limit_exceeded:
      return false;
    default:
      return true;
  }
}

}  // namespace gnorm
