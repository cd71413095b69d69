#ifndef GNORM_ERRORS_HPP
#define GNORM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gnorm {

// Error taxonomy. Validation errors reject bad inputs, computation errors
// report a well-formed problem the algorithms could not finish, limit errors
// come from internal safety caps (e.g. the S-pair budget).
enum class errc {
  // validation
  invalid_prime,
  invalid_exponent,
  parse_error,
  validation_error,
  reducible,
  not_absolutely_irreducible,
  not_homogeneous,
  not_a_curve,
  counit_violation,
  coassociativity_violation,
  relation_not_preserved,
  illegal_t_degree,
  not_restricted,
  dependent_coefficients,
  not_in_pth_powers,
  not_zero_dimensional,
  point_not_on_support,
  zero_derivation,
  not_g_stable,
  hypothesis_failure,
  // computation
  no_invariant_reduction,
  step_limit_exceeded,
  // limits
  limit_exceeded,
};

const char* errc_name(errc c);

// True for errors that mean "the input is malformed", as opposed to
// "the computation could not be completed".
bool errc_is_validation(errc c);

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace gnorm

#endif
