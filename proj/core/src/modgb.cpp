#include "gnorm/modgb.hpp"

#include <algorithm>
#include <deque>

namespace gnorm {

bool vec_is_zero(const VecPoly& v) {
  for (const auto& f : v)
    if (!f.is_zero()) return false;
  return true;
}

VecPoly vec_zero(const RingPtr& ring, size_t ncomp) {
  return VecPoly(ncomp, MultiPoly::zero(ring));
}

VecPoly vec_sub(const VecPoly& a, const VecPoly& b) {
  VecPoly r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

VecPoly vec_mul_monomial(const VecPoly& a, const Monomial& m, int64_t c) {
  VecPoly r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i].mul_monomial(m, c);
  return r;
}

int ModOrder::compare(size_t c1, const Monomial& m1, size_t c2,
                      const Monomial& m2) const {
  bool s1 = c1 < senior, s2 = c2 < senior;
  if (s1 != s2) return s1 ? 1 : -1;
  if (c1 != c2) return c1 < c2 ? 1 : -1;
  return ord.compare(m1, m2);
}

ModTermRef vec_leading(const VecPoly& v, const ModOrder& mo) {
  ModTermRef best;
  for (size_t c = 0; c < v.size(); ++c) {
    for (const auto& [m, co] : v[c].terms()) {
      if (best.mono == nullptr || mo.compare(c, m, best.comp, *best.mono) > 0) {
        best.comp = c;
        best.mono = &m;
        best.coeff = co;
      }
    }
  }
  return best;
}

namespace {

uint32_t vec_degree(const VecPoly& v) {
  uint32_t d = 0;
  for (const auto& f : v) d = std::max(d, f.degree());
  return d;
}

VecPoly vec_scaled(const VecPoly& a, int64_t c) {
  VecPoly r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i].scaled(c);
  return r;
}

struct BasisElem {
  VecPoly v;
  size_t comp;
  Monomial lead;
  int64_t lc;
  uint32_t sugar;
  bool removed = false;
};

struct Pair {
  Monomial lcm;
  uint32_t sugar;
  size_t comp;
  size_t i, j;
};

struct Engine {
  ModOrder mo;
  RingPtr ring;
  std::vector<BasisElem> basis;
  std::deque<Pair> pairs;  // kept sorted on insertion batches
  uint64_t spair_count = 0;
  uint64_t spair_budget;

  Engine(const ModOrder& m, RingPtr r)
      : mo(m), ring(std::move(r)), spair_budget(engine_max_spairs()) {}

  bool pair_before(const Pair& a, const Pair& b) const {
    // normal selection: smallest lcm first, sugar degree as tie-break
    int c = mo.compare(a.comp, a.lcm, b.comp, b.lcm);
    if (c != 0) return c < 0;
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }

  VecPoly reduce(const VecPoly& input,
                 const std::vector<BasisElem>& bs) const {
    VecPoly v = input;
    VecPoly rem = vec_zero(ring, v.size());
    while (!vec_is_zero(v)) {
      ModTermRef lt = vec_leading(v, mo);
      const BasisElem* red = nullptr;
      for (const auto& b : bs) {
        if (b.removed || b.comp != lt.comp) continue;
        if (mono_divides(b.lead, *lt.mono)) {
          red = &b;
          break;
        }
      }
      if (red) {
        int64_t c = ring->field().div(lt.coeff, red->lc);
        Monomial q = mono_div(*lt.mono, red->lead);
        v = vec_sub(v, vec_mul_monomial(red->v, q, c));
      } else {
        rem[lt.comp].add_term(*lt.mono, lt.coeff);
        v[lt.comp].add_term(*lt.mono, ring->field().neg(lt.coeff));
      }
    }
    return rem;
  }

  void add_basis(VecPoly v, uint32_t sugar) {
    ModTermRef lt = vec_leading(v, mo);
    BasisElem nb{std::move(v), lt.comp, *lt.mono, lt.coeff, sugar};
    size_t idx = basis.size();
    std::vector<Pair> fresh;
    for (size_t k = 0; k < basis.size(); ++k) {
      const auto& a = basis[k];
      if (a.removed || a.comp != nb.comp) continue;
      if (nb.v.size() == 1 && mono_coprime(a.lead, nb.lead))
        continue;  // product criterion (ideal case only)
      Monomial l = mono_lcm(a.lead, nb.lead);
      uint32_t sug = std::max(a.sugar + total_degree(mono_div(l, a.lead)),
                              nb.sugar + total_degree(mono_div(l, nb.lead)));
      fresh.push_back(Pair{std::move(l), sug, nb.comp, k, idx});
    }
    basis.push_back(std::move(nb));
    engine_stats().absorb_basis_size(basis.size());
    for (auto& p : fresh) {
      auto pos = std::lower_bound(
          pairs.begin(), pairs.end(), p,
          [this](const Pair& x, const Pair& y) { return pair_before(x, y); });
      pairs.insert(pos, std::move(p));
    }
  }

  void run() {
    while (!pairs.empty()) {
      Pair p = std::move(pairs.front());
      pairs.pop_front();
      const auto& a = basis[p.i];
      const auto& b = basis[p.j];
      if (a.removed || b.removed) continue;
      bool skip = false;
      for (size_t k = 0; k < basis.size() && !skip; ++k) {
        if (k == p.i || k == p.j || basis[k].removed) continue;
        const auto& c = basis[k];
        if (c.comp != p.comp || !mono_divides(c.lead, p.lcm)) continue;
        if (mono_lcm(a.lead, c.lead) != p.lcm &&
            mono_lcm(b.lead, c.lead) != p.lcm)
          skip = true;  // chain criterion
      }
      if (skip) continue;

      if (++spair_count > spair_budget)
        fail(errc::limit_exceeded, "S-pair budget exhausted (GNORM_MAX_SPAIRS)");
      engine_stats().spairs_reduced++;

      int64_t ia = ring->field().inv(a.lc);
      int64_t ib = ring->field().inv(b.lc);
      VecPoly s = vec_sub(vec_mul_monomial(a.v, mono_div(p.lcm, a.lead), ia),
                          vec_mul_monomial(b.v, mono_div(p.lcm, b.lead), ib));
      VecPoly r = reduce(s, basis);
      if (vec_is_zero(r)) continue;
      ModTermRef lt = vec_leading(r, mo);
      add_basis(vec_scaled(r, ring->field().inv(lt.coeff)), p.sugar);
    }
  }
};

}  // namespace

std::vector<VecPoly> module_groebner(const std::vector<VecPoly>& gens,
                                     const ModOrder& mo) {
  RingPtr ring;
  for (const auto& g : gens)
    for (const auto& f : g)
      if (f.ring()) ring = f.ring();
  std::vector<VecPoly> seeds;
  for (const auto& g : gens)
    if (!vec_is_zero(g)) seeds.push_back(g);
  if (seeds.empty()) return {};
  std::sort(seeds.begin(), seeds.end());

  Engine eng(mo, ring);
  for (auto& g : seeds) {
    VecPoly r = eng.reduce(g, eng.basis);
    if (vec_is_zero(r)) continue;
    ModTermRef lt = vec_leading(r, mo);
    eng.add_basis(vec_scaled(r, ring->field().inv(lt.coeff)), vec_degree(g));
  }
  eng.run();

  // minimal leads
  for (size_t i = 0; i < eng.basis.size(); ++i) {
    if (eng.basis[i].removed) continue;
    for (size_t j = 0; j < eng.basis.size(); ++j) {
      if (i == j || eng.basis[j].removed) continue;
      const auto& bi = eng.basis[i];
      const auto& bj = eng.basis[j];
      if (bj.comp != bi.comp || !mono_divides(bj.lead, bi.lead)) continue;
      if (bj.lead == bi.lead && j > i) continue;
      eng.basis[i].removed = true;
      break;
    }
  }
  std::vector<BasisElem> kept;
  for (auto& b : eng.basis)
    if (!b.removed) kept.push_back(std::move(b));

  std::vector<VecPoly> out;
  for (size_t i = 0; i < kept.size(); ++i) {
    std::vector<BasisElem> others;
    others.reserve(kept.size() - 1);
    for (size_t j = 0; j < kept.size(); ++j)
      if (j != i) others.push_back(kept[j]);
    VecPoly r = eng.reduce(kept[i].v, others);
    if (vec_is_zero(r)) continue;
    ModTermRef lt = vec_leading(r, mo);
    out.push_back(vec_scaled(r, ring->field().inv(lt.coeff)));
  }
  std::sort(out.begin(), out.end(), [&](const VecPoly& x, const VecPoly& y) {
    ModTermRef lx = vec_leading(x, mo), ly = vec_leading(y, mo);
    int c = mo.compare(lx.comp, *lx.mono, ly.comp, *ly.mono);
    if (c != 0) return c < 0;
    return x < y;
  });
  return out;
}

VecPoly module_normal_form(const VecPoly& f, const std::vector<VecPoly>& gb,
                           const ModOrder& mo) {
  if (vec_is_zero(f) || gb.empty()) return f;
  RingPtr ring;
  for (const auto& g : f)
    if (g.ring()) ring = g.ring();
  Engine eng(mo, ring);
  std::vector<BasisElem> bs;
  for (const auto& g : gb) {
    ModTermRef lt = vec_leading(g, mo);
    bs.push_back(BasisElem{g, lt.comp, *lt.mono, lt.coeff, 0});
  }
  return eng.reduce(f, bs);
}

std::vector<VecPoly> syzygies(const std::vector<VecPoly>& w, size_t m,
                              const MonomialOrder& ord) {
  return module_map_kernel(w, {}, m, ord);
}

std::vector<VecPoly> module_map_kernel(const std::vector<VecPoly>& w,
                                       const std::vector<VecPoly>& rels,
                                       size_t m, const MonomialOrder& ord) {
  RingPtr ring;
  for (const auto& v : w)
    for (const auto& f : v)
      if (f.ring()) ring = f.ring();
  for (const auto& v : rels)
    for (const auto& f : v)
      if (f.ring()) ring = f.ring();
  size_t k = w.size();
  std::vector<VecPoly> gens;
  for (size_t i = 0; i < k; ++i) {
    VecPoly v = vec_zero(ring, m + k);
    for (size_t c = 0; c < m; ++c) v[c] = w[i][c];
    v[m + i] = MultiPoly::constant(ring, 1);
    gens.push_back(std::move(v));
  }
  for (const auto& u : rels) {
    VecPoly v = vec_zero(ring, m + k);
    for (size_t c = 0; c < m; ++c) v[c] = u[c];
    if (!vec_is_zero(v)) gens.push_back(std::move(v));
  }
  ModOrder mo{ord, m};
  auto gb = module_groebner(gens, mo);
  std::vector<VecPoly> out;
  for (const auto& g : gb) {
    bool senior_zero = true;
    for (size_t c = 0; c < m; ++c)
      if (!g[c].is_zero()) senior_zero = false;
    if (!senior_zero) continue;
    VecPoly v(g.begin() + m, g.end());
    if (!vec_is_zero(v)) out.push_back(std::move(v));
  }
  return out;
}

bool lift_membership(const MultiPoly& f, const std::vector<MultiPoly>& gens,
                     const MonomialOrder& ord, std::vector<MultiPoly>& cofs) {
  RingPtr ring = f.ring();
  size_t k = gens.size();
  std::vector<VecPoly> vgens;
  for (size_t i = 0; i < k; ++i) {
    VecPoly v = vec_zero(ring, 1 + k);
    v[0] = gens[i];
    v[1 + i] = MultiPoly::constant(ring, 1);
    vgens.push_back(std::move(v));
  }
  ModOrder mo{ord, 1};
  auto gb = module_groebner(vgens, mo);
  VecPoly probe = vec_zero(ring, 1 + k);
  probe[0] = f;
  VecPoly r = module_normal_form(probe, gb, mo);
  if (!r[0].is_zero()) return false;
  cofs.clear();
  for (size_t i = 0; i < k; ++i) cofs.push_back(-r[1 + i]);
  return true;
}

}  // namespace gnorm
