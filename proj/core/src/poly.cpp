#include "gnorm/poly.hpp"

#include <algorithm>
#include <sstream>

namespace gnorm {

uint32_t total_degree(const Monomial& m) {
  uint32_t d = 0;
  for (uint32_t e : m) d += e;
  return d;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Monomial mono_div(const Monomial& b, const Monomial& a) {
  Monomial r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = b[i] - a[i];
  return r;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

bool mono_coprime(const Monomial& a, const Monomial& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

namespace {

int cmp_lex(const Monomial& a, const Monomial& b, size_t lo, size_t hi) {
  for (size_t i = lo; i < hi; ++i) {
    if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
  }
  return 0;
}

int cmp_degrevlex(const Monomial& a, const Monomial& b, size_t lo, size_t hi) {
  uint32_t da = 0, db = 0;
  for (size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da > db ? 1 : -1;
  // revlex tie break: last differing exponent, smaller one wins
  for (size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind) {
    case lex:
      return cmp_lex(a, b, 0, a.size());
    case degrevlex:
      return cmp_degrevlex(a, b, 0, a.size());
    case elim_block: {
      int c = cmp_degrevlex(a, b, 0, split);
      if (c != 0) return c;
      return cmp_degrevlex(a, b, split, a.size());
    }
  }
  return 0;
}

std::string MonomialOrder::key() const {
  switch (kind) {
    case lex:
      return "lex";
    case degrevlex:
      return "degrevlex";
    case elim_block:
      return "elim:" + std::to_string(split);
  }
  return "?";
}

PolyRing::PolyRing(PrimeField field, std::vector<std::string> vars)
    : field_(field), vars_(std::move(vars)) {
  for (size_t i = 0; i < vars_.size(); ++i)
    for (size_t j = i + 1; j < vars_.size(); ++j)
      if (vars_[i] == vars_[j])
        fail(errc::validation_error, "duplicate variable " + vars_[i]);
}

size_t PolyRing::var_index(const std::string& name) const {
  for (size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return i;
  return npos;
}

bool PolyRing::same(const PolyRing& o) const {
  return field_ == o.field_ && vars_ == o.vars_;
}

RingPtr make_ring(int64_t p, std::vector<std::string> vars) {
  return std::make_shared<PolyRing>(PrimeField(p), std::move(vars));
}

MultiPoly MultiPoly::constant(RingPtr ring, int64_t c) {
  MultiPoly f(ring);
  f.add_term(Monomial(ring->nvars(), 0), c);
  return f;
}

MultiPoly MultiPoly::variable(RingPtr ring, size_t i, uint32_t e) {
  Monomial m(ring->nvars(), 0);
  m[i] = e;
  return monomial(std::move(ring), std::move(m), 1);
}

MultiPoly MultiPoly::monomial(RingPtr ring, Monomial m, int64_t c) {
  MultiPoly f(ring);
  f.add_term(m, c);
  return f;
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && total_degree(terms_.begin()->first) == 0;
}

uint32_t MultiPoly::degree() const {
  uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, total_degree(m));
  return d;
}

uint32_t MultiPoly::degree_in(size_t var) const {
  uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
  return d;
}

int64_t MultiPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

void MultiPoly::add_term(const Monomial& m, int64_t c) {
  c = ring_->field().reduce(c);
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second = ring_->field().add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  MultiPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, ring_->field().neg(c));
  return r;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(ring_);
  for (const auto& [m, c] : terms_) r.terms_[m] = ring_->field().neg(c);
  return r;
}

MultiPoly MultiPoly::scaled(int64_t c) const {
  MultiPoly r(ring_);
  c = ring_->field().reduce(c);
  if (c == 0) return r;
  for (const auto& [m, k] : terms_) {
    int64_t v = ring_->field().mul(k, c);
    if (v != 0) r.terms_[m] = v;
  }
  return r;
}

MultiPoly MultiPoly::mul_monomial(const Monomial& m, int64_t c) const {
  MultiPoly r(ring_);
  c = ring_->field().reduce(c);
  if (c == 0) return r;
  for (const auto& [k, v] : terms_) {
    int64_t w = ring_->field().mul(v, c);
    if (w != 0) r.terms_[mono_mul(k, m)] = w;
  }
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  MultiPoly r(ring_);
  if (terms_.size() > o.terms_.size()) return o * *this;
  for (const auto& [m, c] : terms_) {
    for (const auto& [m2, c2] : o.terms_)
      r.add_term(mono_mul(m, m2), ring_->field().mul(c, c2));
  }
  return r;
}

MultiPoly MultiPoly::pow(uint32_t e) const {
  MultiPoly acc = constant(ring_, 1);
  MultiPoly base = *this;
  while (e) {
    if (e & 1) acc = acc * base;
    if (e >>= 1) base = base * base;
  }
  return acc;
}

const Monomial& MultiPoly::leading_monomial(const MonomialOrder& ord) const {
  auto best = terms_.begin();
  for (auto it = std::next(best); it != terms_.end(); ++it)
    if (ord.less(best->first, it->first)) best = it;
  return best->first;
}

int64_t MultiPoly::leading_coeff(const MonomialOrder& ord) const {
  return terms_.at(leading_monomial(ord));
}

MultiPoly MultiPoly::monic(const MonomialOrder& ord) const {
  if (is_zero()) return *this;
  return scaled(ring_->field().inv(leading_coeff(ord)));
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images,
                                const RingPtr& target) const {
  MultiPoly r(target);
  for (const auto& [m, c] : terms_) {
    MultiPoly t = MultiPoly::constant(target, c);
    for (size_t i = 0; i < m.size(); ++i)
      if (m[i] > 0) t = t * images[i].pow(m[i]);
    r = r + t;
  }
  return r;
}

MultiPoly MultiPoly::lift_to(const RingPtr& target) const {
  std::vector<size_t> where(ring_->nvars(), PolyRing::npos);
  MultiPoly r(target);
  for (const auto& [m, c] : terms_) {
    Monomial mm(target->nvars(), 0);
    for (size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (where[i] == PolyRing::npos) {
        where[i] = target->var_index(ring_->var_name(i));
        if (where[i] == PolyRing::npos)
          fail(errc::validation_error,
               "variable " + ring_->var_name(i) + " missing in target ring");
      }
      mm[where[i]] = m[i];
    }
    r.add_term(mm, c);
  }
  return r;
}

MultiPoly MultiPoly::derivative(size_t var) const {
  MultiPoly r(ring_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    Monomial mm = m;
    mm[var] -= 1;
    r.add_term(mm, ring_->field().mul(c, m[var] % ring_->field().p()));
  }
  return r;
}

std::string MultiPoly::str() const {
  if (is_zero()) return "0";
  // print terms descending in degrevlex
  std::vector<const std::pair<const Monomial, int64_t>*> ts;
  for (const auto& t : terms_) ts.push_back(&t);
  MonomialOrder ord = MonomialOrder::Degrevlex();
  std::sort(ts.begin(), ts.end(),
            [&](auto* a, auto* b) { return ord.less(b->first, a->first); });
  std::ostringstream os;
  bool first = true;
  for (auto* t : ts) {
    if (!first) os << " + ";
    first = false;
    const auto& [m, c] = *t;
    bool trivial_mono = total_degree(m) == 0;
    bool printed = false;
    if (c != 1 || trivial_mono) {
      os << c;
      printed = true;
    }
    for (size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (printed) os << "*";
      os << ring_->var_name(i);
      if (m[i] > 1) os << "^" << m[i];
      printed = true;
    }
  }
  return os.str();
}

bool try_exact_divide(const MultiPoly& a, const MultiPoly& b, MultiPoly& q) {
  if (b.is_zero()) return false;
  MonomialOrder ord = MonomialOrder::Degrevlex();
  const auto& ring = a.ring();
  const Monomial& lb = b.leading_monomial(ord);
  int64_t cb = b.leading_coeff(ord);
  MultiPoly rem = a;
  MultiPoly quo(ring);
  while (!rem.is_zero()) {
    const Monomial& lr = rem.leading_monomial(ord);
    if (!mono_divides(lb, lr)) return false;
    int64_t c = ring->field().div(rem.terms().at(lr), cb);
    Monomial m = mono_div(lr, lb);
    quo.add_term(m, c);
    rem = rem - b.mul_monomial(m, c);
  }
  q = quo;
  return true;
}

}  // namespace gnorm
