#ifndef GNORM_MODGB_HPP
#define GNORM_MODGB_HPP

#include <vector>

#include "gnorm/groebner.hpp"
#include "gnorm/poly.hpp"

namespace gnorm {

// Element of a free module R^L over the polynomial ring, one coordinate
// polynomial per component. All components share the same ring.
using VecPoly = std::vector<MultiPoly>;

bool vec_is_zero(const VecPoly& v);
VecPoly vec_zero(const RingPtr& ring, size_t ncomp);
VecPoly vec_sub(const VecPoly& a, const VecPoly& b);
VecPoly vec_mul_monomial(const VecPoly& a, const Monomial& m, int64_t c);

// Module monomial order: position-over-term with an optional senior block.
// Components [0, senior) dominate components [senior, L); within a block the
// smaller component index ranks higher, ties by the scalar order.
struct ModOrder {
  MonomialOrder ord = MonomialOrder::Degrevlex();
  size_t senior = 0;

  // compares module terms (c1,m1) vs (c2,m2)
  int compare(size_t c1, const Monomial& m1, size_t c2,
              const Monomial& m2) const;
};

struct ModTermRef {
  size_t comp = 0;
  const Monomial* mono = nullptr;
  int64_t coeff = 0;
};

// Leading term of a nonzero vector.
ModTermRef vec_leading(const VecPoly& v, const ModOrder& mo);

// Buchberger for submodules of R^L. Returns the reduced basis: monic leads,
// fully autoreduced, deterministically sorted.
std::vector<VecPoly> module_groebner(const std::vector<VecPoly>& gens,
                                     const ModOrder& mo);

VecPoly module_normal_form(const VecPoly& f, const std::vector<VecPoly>& gb,
                           const ModOrder& mo);

// Generators of { v in R^k : sum_i v_i * w_i = 0 } for vectors w_i in R^m.
std::vector<VecPoly> syzygies(const std::vector<VecPoly>& w, size_t m,
                              const MonomialOrder& ord);

// Generators of { v in R^k : sum_i v_i * w_i lies in the submodule spanned
// by rels } for vectors w_i, rels_j in R^m. This is the kernel of the map
// R^k -> R^m / <rels>, e_i -> w_i.
std::vector<VecPoly> module_map_kernel(const std::vector<VecPoly>& w,
                                       const std::vector<VecPoly>& rels,
                                       size_t m, const MonomialOrder& ord);

// Writes f as sum c_i * gens_i when possible (cofactors are canonical for
// the induced module order). Returns false when f is not a member.
bool lift_membership(const MultiPoly& f, const std::vector<MultiPoly>& gens,
                     const MonomialOrder& ord, std::vector<MultiPoly>& cofs);

}  // namespace gnorm

#endif
