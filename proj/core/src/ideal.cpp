#include "gnorm/ideal.hpp"

#include <algorithm>

namespace gnorm {

Ideal::Ideal(RingPtr ring, std::vector<MultiPoly> gens)
    : ring_(std::move(ring)) {
  for (auto& g : gens)
    if (!g.is_zero()) gens_.push_back(std::move(g));
  if (gens_.empty()) gens_.push_back(MultiPoly::zero(ring_));
  std::sort(gens_.begin(), gens_.end());
  gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
}

Ideal Ideal::unit(RingPtr ring) {
  std::vector<MultiPoly> g{MultiPoly::constant(ring, 1)};
  return Ideal(std::move(ring), std::move(g));
}

const std::vector<MultiPoly>& Ideal::basis(const MonomialOrder& ord) const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  auto it = cache_->bases.find(ord.key());
  if (it != cache_->bases.end()) return it->second;
  std::vector<MultiPoly> nz;
  for (const auto& g : gens_)
    if (!g.is_zero()) nz.push_back(g);
  auto gb = groebner_basis(nz, ord);
  return cache_->bases.emplace(ord.key(), std::move(gb)).first->second;
}

bool Ideal::is_unit() const {
  const auto& b = basis(MonomialOrder::Degrevlex());
  return b.size() == 1 && b[0].is_unit_constant();
}

bool Ideal::contains(const MultiPoly& f) const {
  return poly_normal_form(f, basis(MonomialOrder::Degrevlex()),
                          MonomialOrder::Degrevlex())
      .is_zero();
}

bool Ideal::contains_ideal(const Ideal& other) const {
  for (const auto& g : other.gens())
    if (!contains(g)) return false;
  return true;
}

bool Ideal::equals(const Ideal& other) const {
  return basis(MonomialOrder::Degrevlex()) ==
         other.basis(MonomialOrder::Degrevlex());
}

std::vector<std::string> Ideal::gen_strings() const {
  std::vector<std::string> out;
  for (const auto& g : basis(MonomialOrder::Degrevlex()))
    out.push_back(g.str());
  if (out.empty()) out.push_back("0");
  return out;
}

MultiPoly normal_form(const MultiPoly& f, const Ideal& I,
                      const MonomialOrder& ord) {
  return poly_normal_form(f, I.basis(ord), ord);
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  std::vector<MultiPoly> gens = a.gens();
  for (const auto& g : b.gens()) gens.push_back(g);
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  std::vector<MultiPoly> gens;
  for (const auto& f : a.gens())
    for (const auto& g : b.gens()) gens.push_back(f * g);
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_power(const Ideal& a, uint32_t k) {
  if (k == 0) return Ideal::unit(a.ring());
  Ideal r = a;
  for (uint32_t i = 1; i < k; ++i) r = ideal_product(r, a);
  return r;
}

std::string fresh_var(const std::vector<std::string>& existing,
                      const std::string& base) {
  auto taken = [&](const std::string& s) {
    return std::find(existing.begin(), existing.end(), s) != existing.end();
  };
  if (!taken(base)) return base;
  for (int i = 0;; ++i) {
    std::string s = base + "_" + std::to_string(i);
    if (!taken(s)) return s;
  }
}

RingPtr extend_ring(const RingPtr& ring,
                    const std::vector<std::string>& more) {
  std::vector<std::string> vars = ring->vars();
  for (const auto& v : more) vars.push_back(v);
  return make_ring(ring->field().p(), std::move(vars));
}

RingPtr subring(const RingPtr& ring, const std::vector<std::string>& keep) {
  return make_ring(ring->field().p(), keep);
}

Ideal eliminate(const Ideal& I, const std::vector<std::string>& keep) {
  const RingPtr& R = I.ring();
  std::vector<std::string> elim;
  for (const auto& v : R->vars())
    if (std::find(keep.begin(), keep.end(), v) == keep.end())
      elim.push_back(v);
  // reordered ring: eliminated block first
  std::vector<std::string> vars = elim;
  for (const auto& v : keep) vars.push_back(v);
  RingPtr big = make_ring(R->field().p(), vars);
  std::vector<MultiPoly> gens;
  for (const auto& g : I.gens()) gens.push_back(g.lift_to(big));
  auto gb = groebner_basis(gens, MonomialOrder::ElimBlock(elim.size()));
  RingPtr small = subring(R, keep);
  std::vector<MultiPoly> out;
  for (const auto& g : gb) {
    bool pure = true;
    for (const auto& [m, c] : g.terms())
      for (size_t i = 0; i < elim.size() && pure; ++i)
        if (m[i] > 0) pure = false;
    if (pure) out.push_back(g.lift_to(small));
  }
  return Ideal(small, std::move(out));
}

Ideal ideal_intersect(const Ideal& a, const Ideal& b) {
  const RingPtr& R = a.ring();
  std::string t = fresh_var(R->vars(), "t");
  RingPtr big = extend_ring(R, {t});
  size_t ti = big->var_index(t);
  MultiPoly tv = MultiPoly::variable(big, ti);
  MultiPoly one = MultiPoly::constant(big, 1);
  std::vector<MultiPoly> gens;
  for (const auto& f : a.gens()) gens.push_back(tv * f.lift_to(big));
  for (const auto& g : b.gens()) gens.push_back((one - tv) * g.lift_to(big));
  Ideal mix(big, std::move(gens));
  return eliminate(mix, R->vars());
}

namespace {

// (I : f) for a single nonzero f, via (I cap (f)) / f.
Ideal colon_single(const Ideal& I, const MultiPoly& f) {
  Ideal inter = ideal_intersect(I, Ideal(I.ring(), {f}));
  std::vector<MultiPoly> gens;
  for (const auto& g : inter.basis(MonomialOrder::Degrevlex())) {
    MultiPoly q;
    if (!try_exact_divide(g, f, q))
      fail(errc::validation_error, "colon: inexact division");
    gens.push_back(std::move(q));
  }
  return Ideal(I.ring(), std::move(gens));
}

}  // namespace

Ideal ideal_quotient(const Ideal& I, const Ideal& J) {
  if (J.is_zero()) return Ideal::unit(I.ring());
  bool first = true;
  Ideal acc;
  for (const auto& f : J.gens()) {
    if (f.is_zero()) continue;
    Ideal c = colon_single(I, f);
    acc = first ? c : ideal_intersect(acc, c);
    first = false;
  }
  return acc;
}

std::pair<Ideal, unsigned> saturate(const Ideal& I, const Ideal& J) {
  Ideal prev = ideal_quotient(I, J);
  for (unsigned s = 1;; ++s) {
    Ideal next = ideal_quotient(prev, J);
    if (next.equals(prev)) return {prev, s};
    prev = next;
  }
}

QuotientRing::QuotientRing(RingPtr ambient)
    : ambient_(ambient), defining_(Ideal::zero(ambient)) {}

QuotientRing::QuotientRing(Ideal defining)
    : ambient_(defining.ring()), defining_(std::move(defining)) {
  if (defining_.is_unit())
    fail(errc::validation_error, "defining ideal is the unit ideal");
}

MultiPoly QuotientRing::nf(const MultiPoly& f) const {
  return normal_form(f, defining_, MonomialOrder::Degrevlex());
}

bool QuotientRing::same(const QuotientRing& o) const {
  return ambient_->same(*o.ambient_) && defining_.equals(o.defining_);
}

RingMap::RingMap(QuotientRing source, QuotientRing target,
                 std::vector<MultiPoly> images)
    : source_(std::move(source)),
      target_(std::move(target)),
      images_(std::move(images)) {
  if (images_.size() != source_.ambient()->nvars())
    fail(errc::validation_error, "ring map needs one image per variable");
  for (const auto& rel : source_.defining().gens()) {
    MultiPoly img = rel.substitute(images_, target_.ambient());
    if (!target_.nf(img).is_zero())
      fail(errc::validation_error,
           "ring map does not preserve relation " + rel.str());
  }
}

MultiPoly RingMap::apply(const MultiPoly& f) const {
  return target_.nf(f.substitute(images_, target_.ambient()));
}

Ideal kernel_of_ring_map(const RingMap& phi) {
  const RingPtr& S = phi.source().ambient();
  const RingPtr& T = phi.target().ambient();
  // combined ring: target variables (renamed when clashing) then source vars
  std::vector<std::string> names = S->vars();
  std::vector<std::string> tnames;
  for (const auto& tv : T->vars()) {
    std::string n = fresh_var(names, tv);
    tnames.push_back(n);
    names.push_back(n);
  }
  std::vector<std::string> vars = tnames;
  for (const auto& v : S->vars()) vars.push_back(v);
  RingPtr big = make_ring(S->field().p(), vars);

  auto lift_target = [&](const MultiPoly& f) {
    std::vector<MultiPoly> imgs;
    for (size_t i = 0; i < T->nvars(); ++i)
      imgs.push_back(MultiPoly::variable(big, big->var_index(tnames[i])));
    return f.substitute(imgs, big);
  };

  std::vector<MultiPoly> gens;
  for (const auto& rel : phi.target().defining().gens())
    gens.push_back(lift_target(rel));
  for (size_t i = 0; i < S->nvars(); ++i) {
    MultiPoly sv = MultiPoly::variable(big, big->var_index(S->var_name(i)));
    gens.push_back(sv - lift_target(phi.images()[i]));
  }
  Ideal graph(big, std::move(gens));
  Ideal ker = eliminate(graph, S->vars());
  // present in the source ambient ring, reduced mod the source ideal
  std::vector<MultiPoly> out;
  for (const auto& g : ker.gens()) {
    MultiPoly h = phi.source().nf(g.lift_to(S));
    if (!h.is_zero()) out.push_back(h);
  }
  for (const auto& rel : phi.source().defining().gens()) out.push_back(rel);
  return Ideal(S, std::move(out));
}

namespace {

// Leading monomials of a degrevlex basis.
std::vector<Monomial> lead_monos(const QuotientRing& R) {
  std::vector<Monomial> leads;
  for (const auto& g : R.defining().basis(MonomialOrder::Degrevlex()))
    leads.push_back(g.leading_monomial(MonomialOrder::Degrevlex()));
  return leads;
}

}  // namespace

std::optional<uint64_t> vector_space_dim(const QuotientRing& R) {
  if (R.defining().is_unit()) return 0;
  auto leads = lead_monos(R);
  size_t n = R.ambient()->nvars();
  // finite iff every variable admits a pure power among the leads
  std::vector<uint32_t> bound(n, 0);
  for (size_t v = 0; v < n; ++v) {
    bool found = false;
    for (const auto& m : leads) {
      bool pure = m[v] > 0;
      for (size_t i = 0; i < n && pure; ++i)
        if (i != v && m[i] > 0) pure = false;
      if (pure) {
        found = true;
        bound[v] = bound[v] == 0 ? m[v] : std::min(bound[v], m[v]);
      }
    }
    if (!found && n > 0) return std::nullopt;
  }
  // count standard monomials inside the bounding box
  uint64_t count = 0;
  Monomial m(n, 0);
  for (;;) {
    bool standard = true;
    for (const auto& l : leads)
      if (mono_divides(l, m)) {
        standard = false;
        break;
      }
    if (standard) ++count;
    if (count > (1u << 26))
      fail(errc::limit_exceeded, "vector space dimension too large");
    // next lattice point
    size_t i = 0;
    while (i < n) {
      if (++m[i] < bound[i]) break;
      m[i] = 0;
      ++i;
    }
    if (i == n) break;
    if (n == 0) break;
  }
  return count;
}

std::vector<Monomial> standard_monomials(const QuotientRing& R) {
  auto dim = vector_space_dim(R);
  if (!dim)
    fail(errc::not_zero_dimensional, "standard monomial basis is infinite");
  auto leads = lead_monos(R);
  size_t n = R.ambient()->nvars();
  std::vector<Monomial> out;
  if (*dim == 0) return out;
  std::vector<uint32_t> bound(n, 0);
  for (size_t v = 0; v < n; ++v)
    for (const auto& m : leads) {
      bool pure = m[v] > 0;
      for (size_t i = 0; i < n && pure; ++i)
        if (i != v && m[i] > 0) pure = false;
      if (pure) bound[v] = bound[v] == 0 ? m[v] : std::min(bound[v], m[v]);
    }
  Monomial m(n, 0);
  for (;;) {
    bool standard = true;
    for (const auto& l : leads)
      if (mono_divides(l, m)) {
        standard = false;
        break;
      }
    if (standard) out.push_back(m);
    size_t i = 0;
    while (i < n) {
      if (++m[i] < bound[i]) break;
      m[i] = 0;
      ++i;
    }
    if (i == n || n == 0) break;
  }
  MonomialOrder ord = MonomialOrder::Degrevlex();
  std::sort(out.begin(), out.end(),
            [&](const Monomial& a, const Monomial& b) { return ord.less(a, b); });
  return out;
}

size_t krull_dimension(const QuotientRing& R) {
  if (R.defining().is_unit())
    fail(errc::validation_error, "krull_dimension of the zero ring");
  auto leads = lead_monos(R);
  size_t n = R.ambient()->nvars();
  size_t best = 0;
  // independent sets of variables: no leading monomial supported inside S
  for (uint32_t mask = 0; mask < (1u << n); ++mask) {
    size_t size = 0;
    for (size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) ++size;
    if (size <= best) continue;
    bool independent = true;
    for (const auto& m : leads) {
      bool inside = true;
      for (size_t i = 0; i < n && inside; ++i)
        if (m[i] > 0 && !(mask & (1u << i))) inside = false;
      if (inside) {
        independent = false;
        break;
      }
    }
    if (independent) best = size;
  }
  return best;
}

}  // namespace gnorm
