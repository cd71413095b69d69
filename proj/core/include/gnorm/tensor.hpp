#ifndef GNORM_TENSOR_HPP
#define GNORM_TENSOR_HPP

#include <map>
#include <memory>

#include "gnorm/group.hpp"

namespace gnorm {

// Canonical-form arithmetic in O(G)^{(x) copies} (x) R, realized inside the
// polynomial ring on [T-vars per copy..., R-vars]. An element is canonical
// when every T-exponent sits below its relation bound (mu exponents wrap,
// alpha overflow vanishes) and every T-monomial coefficient is a normal
// form modulo the defining ideal of R.
class TensorCtx {
 public:
  TensorCtx(FiniteGroupScheme group, QuotientRing base, size_t copies);

  const FiniteGroupScheme& group() const { return group_; }
  const QuotientRing& base() const { return base_; }
  size_t copies() const { return copies_; }
  const RingPtr& ring() const { return ring_; }

  size_t tvar(size_t copy, size_t factor) const {
    return copy * group_.nfactors() + factor;
  }
  size_t rvar(size_t j) const { return copies_ * group_.nfactors() + j; }
  size_t nt() const { return copies_ * group_.nfactors(); }

  MultiPoly canon(const MultiPoly& f) const;
  MultiPoly embed_r(const MultiPoly& f) const;  // 1 (x) f
  MultiPoly tvar_poly(size_t copy, size_t factor, uint32_t e = 1) const;

  // True when all T-exponents sit strictly below the relation bounds.
  bool t_degrees_legal(const MultiPoly& f) const;

  // f = sum_alpha T^alpha (x) c_alpha: T-exponent vector (all copies) to
  // coefficient, coefficients as normal forms in the base ambient ring.
  std::map<Monomial, MultiPoly> t_coefficients(const MultiPoly& f) const;

  // Coefficients after shifting every mu coordinate by one (T = 1 + U), so
  // the counit is evaluation at the zero monomial. Key: exponent vector of
  // the shifted coordinates.
  std::map<Monomial, MultiPoly> augmentation_coefficients(
      const MultiPoly& f) const;

  // Applies the counit to all T-copies; result in the base ambient ring.
  MultiPoly counit(const MultiPoly& f) const;

  // Applies the antipode to the T-part of copy 0 (single-copy contexts).
  MultiPoly antipode(const MultiPoly& f) const;

 private:
  FiniteGroupScheme group_;
  QuotientRing base_;
  size_t copies_;
  RingPtr ring_;
};

using TensorPtr = std::shared_ptr<const TensorCtx>;

TensorPtr make_tensor(const FiniteGroupScheme& G, const QuotientRing& R,
                      size_t copies);

// All canonical T-monomials of a single copy, ordered ascending degrevlex;
// exactly |G| of them.
std::vector<Monomial> t_monomials(const TensorCtx& ctx);

}  // namespace gnorm

#endif
