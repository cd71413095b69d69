#ifndef GNORM_COACTION_HPP
#define GNORM_COACTION_HPP

#include "gnorm/points.hpp"
#include "gnorm/tensor.hpp"

namespace gnorm {

// A verified algebra map R -> O(G) (x) R encoding a regular action on
// Spec R. Images are kept in canonical tensor form; the counit and
// coassociativity axioms and well-definedness on R are all checked at
// construction time.
class Coaction {
 public:
  Coaction() = default;
  Coaction(FiniteGroupScheme G, QuotientRing R, std::vector<MultiPoly> images,
           TensorPtr ctx);

  const FiniteGroupScheme& group() const { return group_; }
  const QuotientRing& base() const { return base_; }
  const TensorPtr& ctx() const { return ctx_; }
  const std::vector<MultiPoly>& images() const { return images_; }

  // a*(f) for f in the ambient ring of R (T-variables must not occur).
  MultiPoly apply(const MultiPoly& f) const;
  // extension to tensor elements: substitutes images for the R-variables.
  MultiPoly apply_tensor(const MultiPoly& g) const;

  bool is_trivial_action() const;

 private:
  FiniteGroupScheme group_{PrimeField(2), {}};
  QuotientRing base_;
  std::vector<MultiPoly> images_;
  TensorPtr ctx_;
};

// Constructs and fully verifies a coaction; raw images live in the ring of
// TensorCtx(G, R, 1) and must carry legal T-degrees.
Coaction make_coaction(const FiniteGroupScheme& G, const QuotientRing& R,
                       const std::vector<MultiPoly>& raw_images);

// Ideal of the fixed subscheme X^G inside the ambient ring of R: all
// augmentation-basis coefficients of a*(x_j) - 1 (x) x_j.
Ideal fixed_subscheme(const Coaction& a);

struct StabilizerInfo {
  Ideal ideal;     // generators of the stabilizer ideal in O(G)_kappa(x)
  uint64_t order;  // dim_kappa O(G)_kappa / ideal
};

// Stabilizer subgroup scheme at a closed point.
StabilizerInfo stabilizer_at(const Coaction& a, const PointData& x);

// Ideal cutting out the complement of the free locus: Fitt_1 of the
// structure module of the stabilizer subscheme over R.
Ideal non_free_locus(const Coaction& a);

// Determinant of multiplication by a*(r) on the free R-module O(G) (x) R
// in the T-monomial basis; exact, and verified to be G-invariant.
MultiPoly norm_invariant(const Coaction& a, const MultiPoly& r);

// True when a*(f) = 1 (x) f.
bool is_invariant(const Coaction& a, const MultiPoly& f);

}  // namespace gnorm

#endif
