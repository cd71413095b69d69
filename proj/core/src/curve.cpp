#include "gnorm/curve.hpp"

#include <algorithm>

#include "gnorm/factor2d.hpp"

namespace gnorm {

namespace {

bool is_homogeneous(const MultiPoly& f) {
  bool first = true;
  uint32_t d = 0;
  for (const auto& [m, c] : f.terms()) {
    if (first) {
      d = total_degree(m);
      first = false;
    } else if (total_degree(m) != d) {
      return false;
    }
  }
  return true;
}

void check_plane_integrality(const MultiPoly& f) {
  auto a = analyze_plane_poly(f);
  if (!a.irreducible)
    fail(errc::reducible, "curve polynomial factors; witness: " +
                              (a.fp_witness.empty() ? "?" : a.fp_witness));
  if (!a.absolutely_irreducible)
    fail(errc::not_absolutely_irreducible,
         "curve splits over the degree-" +
             std::to_string(a.splitting_degree) +
             " extension; conjugate factor: " + a.abs_witness);
}

}  // namespace

CurveModel make_curve(CurveModel::Kind kind, const MultiPoly& poly) {
  const RingPtr& ring = poly.ring();
  if (poly.is_zero() || poly.is_constant())
    fail(errc::validation_error, "curve polynomial must be nonconstant");
  CurveModel C;
  C.kind = kind;
  C.poly = poly;
  if (kind == CurveModel::Kind::affine) {
    if (ring->nvars() != 2)
      fail(errc::validation_error, "affine plane curve needs two variables");
    check_plane_integrality(poly);
    C.charts.push_back(
        Chart{"affine", poly, QuotientRing(Ideal(ring, {poly}))});
    return C;
  }
  if (ring->nvars() != 3)
    fail(errc::validation_error, "projective plane curve needs three variables");
  if (!is_homogeneous(poly))
    fail(errc::not_homogeneous, "projective curve polynomial must be homogeneous");
  // coordinate divisors make the curve reducible (unless it is that line)
  if (poly.degree() > 1) {
    for (size_t v = 0; v < 3; ++v) {
      bool divides = true;
      for (const auto& [m, c] : poly.terms())
        if (m[v] == 0) divides = false;
      if (divides)
        fail(errc::reducible,
             "curve polynomial factors; witness: " + ring->var_name(v));
    }
    // geometric integrality via a full-degree chart
    std::vector<std::string> others{ring->var_name(0), ring->var_name(1)};
    RingPtr chart_ring = make_ring(ring->field().p(), others);
    std::vector<MultiPoly> images;
    for (size_t v = 0; v < 2; ++v)
      images.push_back(MultiPoly::variable(chart_ring, v));
    images.push_back(MultiPoly::constant(chart_ring, 1));
    check_plane_integrality(poly.substitute(images, chart_ring));
  }
  // the three standard charts, skipping empty ones
  for (size_t v = 0; v < 3; ++v) {
    std::vector<std::string> vars;
    for (size_t w = 0; w < 3; ++w)
      if (w != v) vars.push_back(ring->var_name(w));
    RingPtr chart_ring = make_ring(ring->field().p(), vars);
    std::vector<MultiPoly> images;
    for (size_t w = 0; w < 3; ++w)
      images.push_back(w == v
                           ? MultiPoly::constant(chart_ring, 1)
                           : MultiPoly::variable(
                                 chart_ring, chart_ring->var_index(
                                                 ring->var_name(w))));
    MultiPoly dehom = poly.substitute(images, chart_ring);
    if (dehom.is_constant()) continue;  // curve misses this chart
    C.charts.push_back(Chart{ring->var_name(v), dehom,
                             QuotientRing(Ideal(chart_ring, {dehom}))});
  }
  return C;
}

std::vector<std::pair<size_t, PointData>> singular_points(
    const CurveModel& C) {
  std::vector<std::pair<size_t, PointData>> out;
  for (size_t ci = 0; ci < C.charts.size(); ++ci) {
    const Chart& ch = C.charts[ci];
    const RingPtr& ring = ch.ring.ambient();
    std::vector<MultiPoly> gens{ch.poly};
    for (size_t v = 0; v < ring->nvars(); ++v)
      gens.push_back(ch.poly.derivative(v));
    Ideal sing(ring, std::move(gens));
    if (sing.is_unit()) continue;
    for (auto& pt : closed_points(sing)) {
      bool seen = false;
      // visible in an earlier chart iff the transition coordinate is a unit
      for (size_t cj = 0; cj < ci && !seen; ++cj) {
        size_t vi = ring->var_index(C.charts[cj].name);
        if (vi == PolyRing::npos) continue;
        if (!pt.m.contains(MultiPoly::variable(ring, vi))) seen = true;
      }
      if (!seen) out.emplace_back(ci, std::move(pt));
    }
  }
  return out;
}

Ideal orbit_ideal(const Coaction& a, const PointData& x) {
  const FiniteGroupScheme& G = a.group();
  const QuotientRing& R = a.base();
  TensorCtx ctxm(G, QuotientRing(x.m), 1);
  std::vector<MultiPoly> target_gens;
  for (const auto& rel : G.coordinate_ring().defining().gens())
    target_gens.push_back(rel.lift_to(ctxm.ring()));
  for (const auto& g : x.m.gens()) target_gens.push_back(g.lift_to(ctxm.ring()));
  QuotientRing target(Ideal(ctxm.ring(), std::move(target_gens)));
  std::vector<MultiPoly> images;
  for (size_t j = 0; j < R.ambient()->nvars(); ++j)
    images.push_back(a.images()[j].lift_to(ctxm.ring()));
  RingMap phi(R, target, images);
  Ideal orbit = kernel_of_ring_map(phi);

  // postconditions: G-stable and contained in m_x
  std::vector<MultiPoly> stable_gens;
  for (const auto& g : orbit.gens())
    stable_gens.push_back(g.lift_to(a.ctx()->ring()));
  for (const auto& rel : G.coordinate_ring().defining().gens())
    stable_gens.push_back(rel.lift_to(a.ctx()->ring()));
  for (const auto& rel : R.defining().gens())
    stable_gens.push_back(rel.lift_to(a.ctx()->ring()));
  Ideal stable(a.ctx()->ring(), std::move(stable_gens));
  for (const auto& g : orbit.gens()) {
    if (!stable.contains(a.apply(g)))
      fail(errc::validation_error, "orbit ideal is not G-stable");
    if (!x.m.contains(g))
      fail(errc::validation_error, "orbit ideal escapes the point");
  }
  return orbit;
}

AffineRingModel make_affine_model(QuotientRing ring,
                                  std::vector<FunctionField::El> fractions,
                                  FunFieldPtr K) {
  if (fractions.size() != ring.ambient()->nvars())
    fail(errc::validation_error, "model needs one fraction per variable");
  if (krull_dimension(ring) != 1)
    fail(errc::not_a_curve, "model is not one-dimensional");
  for (const auto& rel : ring.defining().gens()) {
    FunctionField::El acc = K->zero();
    for (const auto& [m, c] : rel.terms()) {
      FunctionField::El term = K->from_poly(
          MultiPoly::constant(make_ring(K->p(), {K->svar(), K->tvar()}), c));
      for (size_t v = 0; v < m.size(); ++v)
        if (m[v]) term = K->mul(term, K->pow(fractions[v], m[v]));
      acc = K->add(acc, term);
    }
    if (!K->is_zero(acc))
      fail(errc::validation_error,
           "fraction witnesses violate relation " + rel.str());
  }
  return AffineRingModel{std::move(ring), std::move(fractions), std::move(K)};
}

FunFieldPtr chart_function_field(const Chart& chart) {
  return std::make_shared<FunctionField>(chart.poly);
}

AffineRingModel chart_model(const Chart& chart) {
  FunFieldPtr K = chart_function_field(chart);
  std::vector<FunctionField::El> fr;
  for (size_t v = 0; v < chart.ring.ambient()->nvars(); ++v)
    fr.push_back(
        K->from_poly(MultiPoly::variable(chart.ring.ambient(), v)));
  return make_affine_model(chart.ring, std::move(fr), K);
}

}  // namespace gnorm
