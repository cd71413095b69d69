#ifndef GNORM_FACTOR2D_HPP
#define GNORM_FACTOR2D_HPP

#include <string>

#include "gnorm/poly.hpp"

namespace gnorm {

// Exact irreducibility analysis of a bivariate polynomial over F_p and over
// the algebraic closure: specialize along a good line, factor the
// univariate image over an extension field, lift the factors x-adically
// and recombine.
struct PlaneFactorAnalysis {
  bool irreducible = false;             // over F_p
  bool absolutely_irreducible = false;  // over the algebraic closure
  size_t absolute_factors = 1;          // conjugate factor count
  size_t splitting_degree = 1;          // field of definition F_{p^e}
  std::string fp_witness;               // proper F_p factor when reducible
  std::string abs_witness;              // a conjugate factor, printable
};

PlaneFactorAnalysis analyze_plane_poly(const MultiPoly& f);

}  // namespace gnorm

#endif
