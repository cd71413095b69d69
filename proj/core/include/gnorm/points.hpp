#ifndef GNORM_POINTS_HPP
#define GNORM_POINTS_HPP

#include <string>
#include <vector>

#include "gnorm/ideal.hpp"
#include "gnorm/upoly.hpp"

namespace gnorm {

// A closed point: maximal ideal of the ambient ring together with the
// degree of its residue field over F_p.
struct PointData {
  Ideal m;
  uint64_t degree = 1;
  std::string key() const;  // canonical, for ordering and reports
};

// All maximal ideals containing the zero-dimensional ideal I, with residue
// degrees. Splitting is exact: radicalize via univariate squarefree parts,
// then separate components along the Frobenius-fixed subalgebra.
std::vector<PointData> closed_points(const Ideal& I);

// Radical of a zero-dimensional ideal (squarefree minimal polynomials of
// the coordinates are adjoined).
Ideal zero_dim_radical(const Ideal& I);

// Minimal polynomial of b over F_p inside the finite-dimensional algebra R.
UPp minimal_polynomial(const MultiPoly& b, const QuotientRing& R);

// Nakayama minimal generator count of I localized at the maximal ideal m of
// R: dim over the residue field of I/(mI + I \cap m^N) for stabilized N.
uint64_t minimal_generators_at(const Ideal& I, const PointData& pt,
                               const QuotientRing& R);

// i-th Fitting ideal of the cokernel presented by the rows x columns matrix
// M (generators x relations): ideal of all (rows - i)-minors.
Ideal fitting_ideal(const std::vector<std::vector<MultiPoly>>& M, size_t i,
                    const RingPtr& ring);

// Closed points of Spec R with residue degree <= max_degree (1 or 2),
// found by exhaustive evaluation over F_p and F_{p^2}.
std::vector<PointData> enumerate_points(const QuotientRing& R,
                                        int max_degree);

// Determinant of a square matrix of polynomials (division-free).
MultiPoly square_det(const std::vector<std::vector<MultiPoly>>& M,
                     const RingPtr& ring);

// Coordinates of nf(f) with respect to the standard monomial basis.
std::vector<int64_t> coords(const MultiPoly& f, const QuotientRing& R,
                            const std::vector<Monomial>& basis);

}  // namespace gnorm

#endif
