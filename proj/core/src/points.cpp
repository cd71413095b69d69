#include "gnorm/points.hpp"

#include <algorithm>
#include <map>

#include "gnorm/linalg.hpp"

namespace gnorm {

std::string PointData::key() const {
  std::string s = "deg" + std::to_string(degree) + ":";
  for (const auto& g : m.basis(MonomialOrder::Lex())) s += g.str() + ";";
  return s;
}

std::vector<int64_t> coords(const MultiPoly& f, const QuotientRing& R,
                            const std::vector<Monomial>& basis) {
  MultiPoly nf = R.nf(f);
  std::vector<int64_t> v(basis.size(), 0);
  std::map<Monomial, size_t> where;
  for (size_t i = 0; i < basis.size(); ++i) where[basis[i]] = i;
  for (const auto& [m, c] : nf.terms()) {
    auto it = where.find(m);
    if (it == where.end())
      fail(errc::validation_error, "normal form escapes the standard basis");
    v[it->second] = c;
  }
  return v;
}

UPp minimal_polynomial(const MultiPoly& b, const QuotientRing& R) {
  FpK k(R.ambient()->field().p());
  auto basis = standard_monomials(R);
  size_t D = basis.size();
  if (D == 0) fail(errc::validation_error, "minimal polynomial in zero ring");
  std::vector<std::vector<int64_t>> powers;  // coords of b^j
  MultiPoly pw = MultiPoly::constant(R.ambient(), 1);
  for (size_t j = 0;; ++j) {
    powers.push_back(coords(pw, R, basis));
    // solve sum_i c_i b^i = b^j over previous powers
    if (j > 0) {
      Mat<FpK> m(k, D, j);
      for (size_t col = 0; col + 1 < powers.size(); ++col)
        for (size_t row = 0; row < D; ++row)
          m.at(row, col) = powers[col][row];
      std::vector<int64_t> x;
      if (solve_linear(k, m, powers.back(), x)) {
        UPp mp;
        mp.c.resize(j + 1, 0);
        for (size_t i = 0; i < j; ++i) mp.c[i] = k.neg(x[i]);
        mp.c[j] = 1;
        mp.trim(k);
        return mp;
      }
    }
    if (j > D) fail(errc::validation_error, "minimal polynomial overflow");
    pw = R.nf(pw * b);
  }
}

Ideal zero_dim_radical(const Ideal& I) {
  QuotientRing R(I);
  if (!vector_space_dim(R))
    fail(errc::not_zero_dimensional, "radical of a positive-dimensional ideal");
  FpK k(I.ring()->field().p());
  std::vector<MultiPoly> gens = I.gens();
  for (size_t v = 0; v < I.ring()->nvars(); ++v) {
    UPp mp = minimal_polynomial(MultiPoly::variable(I.ring(), v), R);
    UPp sq = up_squarefree_part(k, mp);
    gens.push_back(from_upoly(sq, I.ring(), v));
  }
  return Ideal(I.ring(), std::move(gens));
}

namespace {

void split_components(const Ideal& J, std::vector<PointData>& out) {
  QuotientRing A(J);
  auto dim = vector_space_dim(A);
  if (!dim || *dim == 0)
    fail(errc::validation_error, "component splitting expects artinian input");
  const RingPtr& ring = J.ring();
  FpK k(ring->field().p());
  auto basis = standard_monomials(A);
  size_t D = basis.size();

  // Frobenius-fixed subalgebra: kernel of (x -> x^p) - id.
  Mat<FpK> frob(k, D, D);
  for (size_t col = 0; col < D; ++col) {
    MultiPoly b = MultiPoly::monomial(ring, basis[col]);
    auto v = coords(b.pow(static_cast<uint32_t>(ring->field().p())), A, basis);
    for (size_t row = 0; row < D; ++row)
      frob.at(row, col) = k.sub(v[row], row == col ? 1 : 0);
  }
  auto fixed = kernel_basis(k, frob);

  size_t one_idx = 0;
  for (size_t i = 0; i < D; ++i)
    if (total_degree(basis[i]) == 0) one_idx = i;
  auto is_constant_vec = [&](const std::vector<int64_t>& v) {
    for (size_t i = 0; i < v.size(); ++i)
      if (i != one_idx && v[i] != 0) return false;
    return true;
  };

  const std::vector<int64_t>* splitter = nullptr;
  for (const auto& v : fixed)
    if (!is_constant_vec(v)) {
      splitter = &v;
      break;
    }
  if (splitter == nullptr) {
    // single component: a finite field
    std::vector<MultiPoly> gens;
    for (const auto& g : J.basis(MonomialOrder::Lex())) gens.push_back(g);
    out.push_back(PointData{Ideal(ring, gens), *dim});
    return;
  }
  MultiPoly b(ring);
  for (size_t i = 0; i < D; ++i)
    if ((*splitter)[i] != 0)
      b = b + MultiPoly::monomial(ring, basis[i], (*splitter)[i]);
  for (int64_t c = 0; c < ring->field().p(); ++c) {
    std::vector<MultiPoly> gens = J.gens();
    gens.push_back(b - MultiPoly::constant(ring, c));
    Ideal Jc(ring, std::move(gens));
    if (Jc.is_unit()) continue;
    split_components(Jc, out);
  }
}

}  // namespace

std::vector<PointData> closed_points(const Ideal& I) {
  if (I.is_unit()) return {};
  QuotientRing R(I);
  if (!vector_space_dim(R))
    fail(errc::not_zero_dimensional,
         "closed_points expects a zero-dimensional ideal");
  Ideal rad = zero_dim_radical(I);
  std::vector<PointData> out;
  split_components(rad, out);
  std::sort(out.begin(), out.end(), [](const PointData& a, const PointData& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.key() < b.key();
  });
  return out;
}

uint64_t minimal_generators_at(const Ideal& I, const PointData& pt,
                               const QuotientRing& R) {
  Ideal Ifull = ideal_sum(I, R.defining());
  if (!pt.m.contains_ideal(Ifull))
    fail(errc::point_not_on_support, "ideal not contained in the point");
  bool nonzero = false;
  for (const auto& g : I.gens())
    if (!R.nf(g).is_zero()) nonzero = true;
  if (!nonzero)
    fail(errc::validation_error, "minimal_generators_at needs a nonzero ideal");

  auto base_dim = vector_space_dim(QuotientRing(Ifull));
  if (!base_dim)
    fail(errc::validation_error, "quotient by the ideal is not artinian");

  auto count_at = [&](uint32_t N) -> uint64_t {
    Ideal mN = ideal_power(pt.m, N);
    Ideal D = ideal_sum(ideal_sum(ideal_product(pt.m, I), R.defining()),
                        ideal_intersect(Ifull, mN));
    auto dimD = vector_space_dim(QuotientRing(D));
    if (!dimD) fail(errc::validation_error, "unexpected infinite quotient");
    uint64_t delta = *dimD - *base_dim;
    if (delta % pt.degree != 0)
      fail(errc::validation_error, "fiber dimension incompatible with degree");
    return delta / pt.degree;
  };

  uint32_t N = static_cast<uint32_t>(std::max<uint64_t>(2, 2 * *base_dim));
  uint64_t prev = count_at(N);
  for (int round = 0; round < 12; ++round) {
    N *= 2;
    uint64_t next = count_at(N);
    if (next == prev) return next;
    prev = next;
  }
  fail(errc::limit_exceeded, "minimal generator count did not stabilize");
}

namespace {

// strictly increasing k-subset of [0, n); returns false after the last one
bool next_subset(std::vector<size_t>& idx, size_t n) {
  size_t k = idx.size();
  for (size_t t = k; t-- > 0;) {
    if (idx[t] < n - k + t) {
      ++idx[t];
      for (size_t s = t + 1; s < k; ++s) idx[s] = idx[s - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

// determinant of a square matrix by column-mask dynamic programming
MultiPoly square_det(const std::vector<std::vector<MultiPoly>>& M,
                     const RingPtr& ring) {
  size_t k = M.size();
  if (k == 0) return MultiPoly::constant(ring, 1);
  if (k > 20) fail(errc::limit_exceeded, "determinant too large");
  std::vector<MultiPoly> dp(size_t{1} << k, MultiPoly::zero(ring));
  dp[0] = MultiPoly::constant(ring, 1);
  for (uint32_t mask = 1; mask < (1u << k); ++mask) {
    size_t row = static_cast<size_t>(__builtin_popcount(mask)) - 1;
    MultiPoly acc(ring);
    size_t pos = 0;
    for (size_t j = 0; j < k; ++j) {
      if (!(mask & (1u << j))) continue;
      const MultiPoly& e = M[row][j];
      if (!e.is_zero()) {
        MultiPoly term = e * dp[mask & ~(1u << j)];
        if (pos % 2 == 1) term = -term;
        acc = acc + term;
      }
      ++pos;
    }
    dp[mask] = std::move(acc);
  }
  return dp[(size_t{1} << k) - 1];
}

Ideal fitting_ideal(const std::vector<std::vector<MultiPoly>>& M, size_t i,
                    const RingPtr& ring) {
  size_t nrows = M.size();
  if (i >= nrows) return Ideal::unit(ring);  // 0x0 minors generate (1)
  size_t k = nrows - i;
  size_t ncols0 = nrows == 0 ? 0 : M[0].size();
  // prune zero and duplicate columns
  std::vector<std::vector<MultiPoly>> cols;
  for (size_t c = 0; c < ncols0; ++c) {
    std::vector<MultiPoly> col;
    bool zero = true;
    for (size_t r = 0; r < nrows; ++r) {
      col.push_back(M[r][c]);
      if (!M[r][c].is_zero()) zero = false;
    }
    if (zero) continue;
    if (std::find(cols.begin(), cols.end(), col) == cols.end())
      cols.push_back(std::move(col));
  }
  size_t ncols = cols.size();
  if (k > ncols || k > nrows) return Ideal::zero(ring);

  std::vector<MultiPoly> gens;
  std::vector<size_t> ridx(k), cidx(k);
  for (size_t t = 0; t < k; ++t) ridx[t] = t;
  do {
    for (size_t t = 0; t < k; ++t) cidx[t] = t;
    do {
      std::vector<std::vector<MultiPoly>> sub(k);
      for (size_t r = 0; r < k; ++r)
        for (size_t c = 0; c < k; ++c) sub[r].push_back(cols[cidx[c]][ridx[r]]);
      MultiPoly det = square_det(sub, ring);
      if (!det.is_zero()) gens.push_back(std::move(det));
    } while (next_subset(cidx, ncols));
  } while (next_subset(ridx, nrows));
  return Ideal(ring, std::move(gens));
}

namespace {

// F_{p^2} as pairs (u, v) = u + v*theta with theta^2 = -b*theta - c.
struct Fp2 {
  PrimeField F;
  int64_t b, c;  // x^2 + b x + c irreducible
  using El = std::pair<int64_t, int64_t>;
  El from_base(int64_t a) const { return {F.reduce(a), 0}; }
  El add(El x, El y) const {
    return {F.add(x.first, y.first), F.add(x.second, y.second)};
  }
  El mul(El x, El y) const {
    // (u1 + v1 t)(u2 + v2 t) = u1u2 + (u1v2+v1u2) t + v1v2 t^2
    int64_t u = F.mul(x.first, y.first);
    int64_t v = F.add(F.mul(x.first, y.second), F.mul(x.second, y.first));
    int64_t w = F.mul(x.second, y.second);
    // t^2 = -b t - c
    u = F.sub(u, F.mul(w, c));
    v = F.sub(v, F.mul(w, b));
    return {u, v};
  }
  El pow(El x, uint32_t e) const {
    El acc = from_base(1), base = x;
    while (e) {
      if (e & 1) acc = mul(acc, base);
      base = mul(base, base);
      e >>= 1;
    }
    return acc;
  }
  bool is_zero(El x) const { return x.first == 0 && x.second == 0; }
};

Fp2 make_fp2(int64_t p) {
  PrimeField F(p);
  for (int64_t b = 0; b < p; ++b)
    for (int64_t c = 0; c < p; ++c) {
      bool has_root = false;
      for (int64_t r = 0; r < p && !has_root; ++r)
        if (F.add(F.mul(r, F.add(r, b)), c) == 0) has_root = true;
      if (!has_root) return Fp2{F, b, c};
    }
  fail(errc::validation_error, "no irreducible quadratic found");
}

Fp2::El eval_fp2(const Fp2& k, const MultiPoly& f,
                 const std::vector<Fp2::El>& at) {
  Fp2::El acc = k.from_base(0);
  for (const auto& [m, c] : f.terms()) {
    Fp2::El t = k.from_base(c);
    for (size_t i = 0; i < m.size(); ++i)
      if (m[i]) t = k.mul(t, k.pow(at[i], m[i]));
    acc = k.add(acc, t);
  }
  return acc;
}

}  // namespace

std::vector<PointData> enumerate_points(const QuotientRing& R,
                                        int max_degree) {
  const RingPtr& ring = R.ambient();
  int64_t p = ring->field().p();
  size_t n = ring->nvars();
  std::vector<PointData> out;

  double total = 1;
  for (size_t i = 0; i < n; ++i) total *= static_cast<double>(p);
  if (total > 2e6) fail(errc::limit_exceeded, "point enumeration too large");

  // residue degree 1
  std::vector<int64_t> a(n, 0);
  for (;;) {
    bool on = true;
    for (const auto& g : R.defining().gens()) {
      std::vector<MultiPoly> imgs;
      for (size_t i = 0; i < n; ++i)
        imgs.push_back(MultiPoly::constant(ring, a[i]));
      if (!g.substitute(imgs, ring).is_zero()) {
        on = false;
        break;
      }
    }
    if (on) {
      std::vector<MultiPoly> gens;
      for (size_t i = 0; i < n; ++i)
        gens.push_back(MultiPoly::variable(ring, i) -
                       MultiPoly::constant(ring, a[i]));
      out.push_back(PointData{Ideal(ring, std::move(gens)), 1});
    }
    size_t i = 0;
    while (i < n && ++a[i] == p) a[i++] = 0;
    if (i == n) break;
    if (n == 0) break;
  }

  if (max_degree >= 2 && n > 0) {
    if (total * total > 2e6)
      fail(errc::limit_exceeded, "degree-2 point enumeration too large");
    Fp2 k2 = make_fp2(p);
    // residue field presented as F_p[th]/(th^2 + b th + c)
    RingPtr thring = make_ring(p, {"th"});
    MultiPoly th = MultiPoly::variable(thring, 0);
    MultiPoly minpoly = th * th + th.scaled(k2.b) +
                        MultiPoly::constant(thring, k2.c);
    QuotientRing res(Ideal(thring, {minpoly}));

    std::vector<std::pair<int64_t, int64_t>> pts(n, {0, 0});
    std::vector<std::string> seen;
    for (;;) {
      bool nontrivial = false;
      for (auto& e : pts)
        if (e.second != 0) nontrivial = true;
      if (nontrivial) {
        bool on = true;
        for (const auto& g : R.defining().gens())
          if (!k2.is_zero(eval_fp2(k2, g, pts))) {
            on = false;
            break;
          }
        if (on) {
          std::vector<MultiPoly> images;
          for (size_t i = 0; i < n; ++i)
            images.push_back(MultiPoly::constant(thring, pts[i].first) +
                             th.scaled(pts[i].second));
          RingMap ev(QuotientRing(ring), res, images);
          Ideal m = kernel_of_ring_map(ev);
          PointData pd{m, 2};
          std::string key = pd.key();
          if (std::find(seen.begin(), seen.end(), key) == seen.end()) {
            seen.push_back(key);
            out.push_back(std::move(pd));
          }
        }
      }
      size_t i = 0;
      while (i < n) {
        if (++pts[i].first == p) {
          pts[i].first = 0;
          if (++pts[i].second == p) {
            pts[i].second = 0;
            ++i;
            continue;
          }
        }
        break;
      }
      if (i == n) break;
    }
  }

  std::sort(out.begin(), out.end(), [](const PointData& x, const PointData& y) {
    if (x.degree != y.degree) return x.degree < y.degree;
    return x.key() < y.key();
  });
  return out;
}

}  // namespace gnorm
