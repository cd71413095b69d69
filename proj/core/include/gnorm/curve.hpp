#ifndef GNORM_CURVE_HPP
#define GNORM_CURVE_HPP

#include "gnorm/coaction.hpp"
#include "gnorm/funfield.hpp"

namespace gnorm {

// One affine chart of a curve model.
struct Chart {
  std::string name;   // "affine", or the projective coordinate set to 1
  MultiPoly poly;     // defining polynomial of the chart
  QuotientRing ring;  // chart coordinate ring
};

// A plane curve over F_p: affine f(x,y) = 0 or projective F(x,y,z) = 0 via
// its standard affine charts. Construction verifies geometric integrality
// (irreducible and absolutely irreducible; homogeneous in the projective
// case).
struct CurveModel {
  enum class Kind { affine, projective };
  Kind kind = Kind::affine;
  MultiPoly poly;
  std::vector<Chart> charts;  // nonempty charts only

  const Chart& chart(size_t i) const { return charts[i]; }
};

CurveModel make_curve(CurveModel::Kind kind, const MultiPoly& poly);

// Singular closed points per chart, deduplicated across charts for
// projective curves (each point reported in its first visible chart).
std::vector<std::pair<size_t, PointData>> singular_points(const CurveModel& C);

// Ideal of the schematic image of the orbit of a closed point x: the kernel
// of R -> O(G) (x) R/m_x. Verified G-stable and contained in m_x.
Ideal orbit_ideal(const Coaction& a, const PointData& x);

// An affine model that is not necessarily planar (normalization and blow-up
// outputs), with its variables embedded into the function field of the
// planar base model.
struct AffineRingModel {
  QuotientRing ring;
  std::vector<FunctionField::El> fractions;  // one per ambient variable
  FunFieldPtr K;
};

// Verifies dimension one and that the fraction witnesses satisfy the
// presentation relations inside K.
AffineRingModel make_affine_model(QuotientRing ring,
                                  std::vector<FunctionField::El> fractions,
                                  FunFieldPtr K);

// The planar chart itself as an AffineRingModel.
AffineRingModel chart_model(const Chart& chart);

// Function field of a chart (shared by every model in a chain).
FunFieldPtr chart_function_field(const Chart& chart);

}  // namespace gnorm

#endif
