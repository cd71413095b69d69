#include "gnorm/factor2d.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "gnorm/linalg.hpp"
#include "gnorm/funfield.hpp"
#include "gnorm/upoly.hpp"

namespace gnorm {

namespace {

// ---------- F_q = F_p[w]/(modulus) ----------

struct FqK {
  FpK base;
  UPp modulus;  // monic irreducible of degree e
  size_t e;

  using El = std::vector<int64_t>;  // length e

  El zero() const { return El(e, 0); }
  El one() const {
    El r(e, 0);
    r[0] = 1 % base.F.p();
    return r;
  }
  El from_base(int64_t c) const {
    El r(e, 0);
    r[0] = base.F.reduce(c);
    return r;
  }
  bool is_zero(const El& a) const {
    for (int64_t c : a)
      if (c) return false;
    return true;
  }
  bool eq(const El& a, const El& b) const { return a == b; }
  El add(const El& a, const El& b) const {
    El r(e);
    for (size_t i = 0; i < e; ++i) r[i] = base.F.add(a[i], b[i]);
    return r;
  }
  El sub(const El& a, const El& b) const {
    El r(e);
    for (size_t i = 0; i < e; ++i) r[i] = base.F.sub(a[i], b[i]);
    return r;
  }
  El neg(const El& a) const {
    El r(e);
    for (size_t i = 0; i < e; ++i) r[i] = base.F.neg(a[i]);
    return r;
  }
  El mul(const El& a, const El& b) const {
    UPp pa{std::vector<int64_t>(a)}, pb{std::vector<int64_t>(b)};
    pa.trim(base);
    pb.trim(base);
    UPp pr = up_mod(base, up_mul(base, pa, pb), modulus);
    El r(e, 0);
    for (size_t i = 0; i < pr.c.size(); ++i) r[i] = pr.c[i];
    return r;
  }
  El inv(const El& a) const {
    if (is_zero(a)) fail(errc::validation_error, "F_q inverse of zero");
    UPp pa{std::vector<int64_t>(a)};
    pa.trim(base);
    // extended Euclid mod the modulus
    UPp r0 = modulus, r1 = pa;
    UPp t0 = UPp::zero(), t1 = UPp::constant(base, 1);
    while (!r1.is_zero()) {
      UPp q, r2;
      up_divmod(base, r0, r1, q, r2);
      UPp t2 = up_sub(base, t0, up_mul(base, q, t1));
      r0 = r1;
      r1 = r2;
      t0 = t1;
      t1 = t2;
    }
    if (r0.deg() != 0) fail(errc::validation_error, "modulus not irreducible");
    UPp res = up_mod(base, up_scale(base, t0, base.F.inv(r0.c[0])), modulus);
    El r(e, 0);
    for (size_t i = 0; i < res.c.size(); ++i) r[i] = res.c[i];
    return r;
  }
  El div(const El& a, const El& b) const { return mul(a, inv(b)); }
  El pow(El a, uint64_t n) const {
    El acc = one();
    while (n) {
      if (n & 1) acc = mul(acc, a);
      a = mul(a, a);
      n >>= 1;
    }
    return acc;
  }
  El frobenius(const El& a) const {
    return pow(a, static_cast<uint64_t>(base.F.p()));
  }
  uint64_t q() const {
    uint64_t r = 1;
    for (size_t i = 0; i < e; ++i) r *= static_cast<uint64_t>(base.F.p());
    return r;
  }
  // enumeration index -> element (deterministic)
  El element(uint64_t idx) const {
    El r(e, 0);
    for (size_t i = 0; i < e; ++i) {
      r[i] = static_cast<int64_t>(idx % base.F.p());
      idx /= base.F.p();
    }
    return r;
  }
  std::string str(const El& a) const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < e; ++i) {
      if (a[i] == 0) continue;
      if (!first) os << "+";
      first = false;
      os << a[i];
      if (i > 0) {
        os << "w";
        if (i > 1) os << "^" << i;
      }
    }
    if (first) os << "0";
    return os.str();
  }
};

bool upoly_irreducible(const FpK& k, const UPp& f) {
  size_t n = static_cast<size_t>(f.deg());
  if (n == 0) return false;
  if (n == 1) return true;
  UPp x = UPp::ident(k);
  // x^{p^n} == x mod f
  UPp xp = x;
  for (size_t i = 0; i < n; ++i)
    xp = up_powmod(k, xp, static_cast<uint64_t>(k.F.p()), f);
  if (!up_sub(k, xp, up_mod(k, x, f)).is_zero()) return false;
  // gcd(x^{p^{n/l}} - x, f) trivial for prime l | n
  for (size_t l = 2; l <= n; ++l) {
    if (n % l != 0) continue;
    bool isprime = true;
    for (size_t d = 2; d * d <= l; ++d)
      if (l % d == 0) isprime = false;
    if (!isprime) continue;
    UPp xe = x;
    for (size_t i = 0; i < n / l; ++i)
      xe = up_powmod(k, xe, static_cast<uint64_t>(k.F.p()), f);
    UPp g = up_gcd(k, up_sub(k, xe, up_mod(k, x, f)), f);
    if (g.deg() != 0) return false;
  }
  return true;
}

FqK make_fq(int64_t p, size_t e) {
  FpK k(p);
  if (e == 1) {
    UPp mod;
    mod.c = {0, 1};  // x, so the quotient is F_p itself
    return FqK{k, mod, 1};
  }
  // deterministic scan for a monic irreducible of degree e
  std::vector<int64_t> tail(e, 0);
  for (;;) {
    UPp f;
    f.c = tail;
    f.c.push_back(1);
    f.trim(k);
    if (f.deg() == static_cast<int>(e) && upoly_irreducible(k, f))
      return FqK{k, f, e};
    size_t i = 0;
    while (i < e && ++tail[i] == p) tail[i++] = 0;
    if (i == e) fail(errc::validation_error, "no irreducible polynomial found");
  }
}

using UFq = UP<FqK>;

// squarefree, monic input; distinct irreducible factors via the null space
// of the q-power Frobenius
void berlekamp(const FqK& k, const UFq& f, std::vector<UFq>& out) {
  size_t n = static_cast<size_t>(f.deg());
  if (n == 0) return;
  if (n == 1) {
    out.push_back(f);
    return;
  }
  UFq x = UFq::ident(k);
  // matrix of b -> b^q on the basis 1, x, ..., x^{n-1}
  Mat<FqK> m(k, n, n);
  for (size_t j = 0; j < n; ++j) {
    UFq xj;
    xj.c.assign(j + 1, k.zero());
    xj.c[j] = k.one();
    UFq im = up_powmod(k, xj, k.q(), f);
    for (size_t i = 0; i < n; ++i)
      m.at(i, j) = k.sub(i < im.c.size() ? im.c[i] : k.zero(),
                         i == j ? k.one() : k.zero());
  }
  auto kern = kernel_basis(k, m);
  if (kern.size() <= 1) {
    out.push_back(up_monic(k, f));
    return;
  }
  // pick a non-constant kernel vector and split by gcds
  for (const auto& v : kern) {
    bool constant = true;
    for (size_t i = 1; i < v.size(); ++i)
      if (!k.is_zero(v[i])) constant = false;
    if (constant) continue;
    UFq b = UFq::make(k, std::vector<FqK::El>(v));
    for (uint64_t ci = 0; ci < k.q(); ++ci) {
      UFq shifted = up_sub(k, b, UFq::constant(k, k.element(ci)));
      UFq g = up_gcd(k, shifted, f);
      if (g.deg() > 0 && g.deg() < f.deg()) {
        UFq q, r;
        up_divmod(k, f, g, q, r);
        berlekamp(k, up_monic(k, g), out);
        berlekamp(k, up_monic(k, q), out);
        return;
      }
    }
  }
  out.push_back(up_monic(k, f));
}

// ---------- bivariate over F_q: vector of x-polynomials, index = y-degree

struct BivFq {
  std::vector<UFq> c;  // c[j] is the coefficient of y^j
  void trim() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  int ydeg() const { return static_cast<int>(c.size()) - 1; }
};

BivFq biv_sub(const FqK& k, const BivFq& a, const BivFq& b) {
  BivFq r;
  r.c.resize(std::max(a.c.size(), b.c.size()));
  for (size_t i = 0; i < r.c.size(); ++i) {
    UFq x = i < a.c.size() ? a.c[i] : UFq::zero();
    UFq y = i < b.c.size() ? b.c[i] : UFq::zero();
    r.c[i] = up_sub(k, x, y);
  }
  r.trim();
  return r;
}

BivFq biv_mul(const FqK& k, const BivFq& a, const BivFq& b) {
  BivFq r;
  if (a.is_zero() || b.is_zero()) return r;
  r.c.resize(a.c.size() + b.c.size() - 1);
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j)
      r.c[i + j] = up_add(k, r.c[i + j], up_mul(k, a.c[i], b.c[j]));
  r.trim();
  return r;
}

// exact division by a divisor monic in y; false when not divisible
bool biv_divide(const FqK& k, const BivFq& a, const BivFq& b, BivFq& q) {
  if (b.is_zero() || b.c.back().deg() != 0)
    fail(errc::validation_error, "divisor must be monic in y");
  BivFq rem = a;
  q = BivFq{};
  auto lcinv = k.inv(b.c.back().c[0]);
  while (!rem.is_zero() && rem.ydeg() >= b.ydeg()) {
    size_t shift = rem.ydeg() - b.ydeg();
    UFq coef = up_scale(k, rem.c.back(), lcinv);
    if (q.c.size() < shift + 1) q.c.resize(shift + 1);
    q.c[shift] = up_add(k, q.c[shift], coef);
    for (size_t i = 0; i < b.c.size(); ++i)
      rem.c[i + shift] = up_sub(k, rem.c[i + shift], up_mul(k, coef, b.c[i]));
    rem.trim();
  }
  return rem.is_zero();
}

UFq biv_eval_x(const FqK& k, const BivFq& f, const FqK::El& a) {
  // cannot be used directly; evaluation at x = a yields a univariate in y
  UFq r;
  r.c.resize(f.c.size(), k.zero());
  for (size_t j = 0; j < f.c.size(); ++j) r.c[j] = up_eval(k, f.c[j], a);
  r.trim(k);
  return r;
}

// ---------- dense truncated series in u over F_q ----------

struct Ser {
  std::vector<FqK::El> c;  // length = precision
};

Ser ser_zero(const FqK& k, size_t prec) { return Ser{std::vector<FqK::El>(prec, k.zero())}; }

Ser ser_add(const FqK& k, const Ser& a, const Ser& b) {
  Ser r = a;
  for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = k.add(a.c[i], b.c[i]);
  return r;
}

Ser ser_sub(const FqK& k, const Ser& a, const Ser& b) {
  Ser r = a;
  for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = k.sub(a.c[i], b.c[i]);
  return r;
}

Ser ser_mul(const FqK& k, const Ser& a, const Ser& b) {
  size_t prec = a.c.size();
  Ser r = ser_zero(k, prec);
  for (size_t i = 0; i < prec; ++i) {
    if (k.is_zero(a.c[i])) continue;
    for (size_t j = 0; i + j < prec; ++j)
      r.c[i + j] = k.add(r.c[i + j], k.mul(a.c[i], b.c[j]));
  }
  return r;
}

// polynomial in y with series coefficients
struct SerPoly {
  std::vector<Ser> c;
  void trim(const FqK& k) {
    while (!c.empty()) {
      bool zero = true;
      for (const auto& e : c.back().c)
        if (!k.is_zero(e)) zero = false;
      if (!zero) break;
      c.pop_back();
    }
  }
};

SerPoly sp_sub(const FqK& k, const SerPoly& a, const SerPoly& b) {
  SerPoly r;
  size_t n = std::max(a.c.size(), b.c.size());
  size_t prec = a.c.empty() ? b.c[0].c.size() : a.c[0].c.size();
  for (size_t i = 0; i < n; ++i) {
    Ser x = i < a.c.size() ? a.c[i] : ser_zero(k, prec);
    Ser y = i < b.c.size() ? b.c[i] : ser_zero(k, prec);
    r.c.push_back(ser_sub(k, x, y));
  }
  r.trim(k);
  return r;
}

SerPoly sp_mul(const FqK& k, const SerPoly& a, const SerPoly& b) {
  SerPoly r;
  if (a.c.empty() || b.c.empty()) return r;
  size_t prec = a.c[0].c.size();
  r.c.assign(a.c.size() + b.c.size() - 1, ser_zero(k, prec));
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j)
      r.c[i + j] = ser_add(k, r.c[i + j], ser_mul(k, a.c[i], b.c[j]));
  r.trim(k);
  return r;
}

// coefficient of u^j as a univariate in y
UFq sp_slice(const FqK& k, const SerPoly& a, size_t j) {
  UFq r;
  r.c.assign(a.c.size(), k.zero());
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i].c[j];
  r.trim(k);
  return r;
}

// Hensel lifting: F monic in y over series; g0*h0 = F mod u with g0, h0
// monic coprime. Produces G, H monic with F = G*H to the series precision.
void hensel_pair(const FqK& k, const SerPoly& F, const UFq& g0, const UFq& h0,
                 SerPoly& G, SerPoly& H) {
  size_t prec = F.c[0].c.size();
  // Bezout: a g0 + b h0 = 1
  UFq r0 = g0, r1 = h0;
  UFq a0 = UFq::constant(k, k.one()), a1 = UFq::zero();
  UFq b0 = UFq::zero(), b1 = UFq::constant(k, k.one());
  while (!r1.is_zero()) {
    UFq q, r2;
    up_divmod(k, r0, r1, q, r2);
    UFq a2 = up_sub(k, a0, up_mul(k, q, a1));
    UFq b2 = up_sub(k, b0, up_mul(k, q, b1));
    r0 = r1; r1 = r2;
    a0 = a1; a1 = a2;
    b0 = b1; b1 = b2;
  }
  if (r0.deg() != 0)
    fail(errc::validation_error, "hensel: factors are not coprime");
  auto scale = k.inv(r0.c[0]);
  UFq A = up_scale(k, a0, scale);  // A g0 + B h0 = 1
  UFq B = up_scale(k, b0, scale);

  auto embed = [&](const UFq& f) {
    SerPoly s;
    for (size_t i = 0; i < f.c.size(); ++i) {
      Ser e = ser_zero(k, prec);
      e.c[0] = f.c[i];
      s.c.push_back(std::move(e));
    }
    s.trim(k);
    return s;
  };
  G = embed(g0);
  H = embed(h0);
  for (size_t j = 1; j < prec; ++j) {
    SerPoly prod = sp_mul(k, G, H);
    SerPoly err = sp_sub(k, F, prod);
    UFq ej = sp_slice(k, err, j);
    if (ej.is_zero()) continue;
    // e = dh*g0 + dg*h0 with deg dg < deg g0
    UFq be = up_mul(k, B, ej);
    UFq qq, dg;
    up_divmod(k, be, g0, qq, dg);
    UFq dh = up_add(k, up_mul(k, A, ej), up_mul(k, qq, h0));
    auto add_at = [&](SerPoly& target, const UFq& delta) {
      if (target.c.size() < delta.c.size())
        target.c.resize(delta.c.size(), ser_zero(k, prec));
      for (size_t i = 0; i < delta.c.size(); ++i)
        target.c[i].c[j] = k.add(target.c[i].c[j], delta.c[i]);
    };
    add_at(G, dg);
    add_at(H, dh);
  }
}

// full multifactor lift: locals are the coprime monic factors at u = 0
void hensel_multi(const FqK& k, const SerPoly& F, std::vector<UFq> locals,
                  std::vector<SerPoly>& lifted) {
  if (locals.size() == 1) {
    lifted.push_back(F);
    return;
  }
  UFq rest = UFq::constant(k, k.one());
  for (size_t i = 1; i < locals.size(); ++i)
    rest = up_mul(k, rest, locals[i]);
  SerPoly G, H;
  hensel_pair(k, F, locals[0], rest, G, H);
  lifted.push_back(G);
  std::vector<UFq> tail(locals.begin() + 1, locals.end());
  hensel_multi(k, H, std::move(tail), lifted);
}

// turn a lifted factor (series in u = x - a) into a bivariate polynomial
BivFq sp_to_biv(const FqK& k, const SerPoly& f, const FqK::El& a) {
  // substitute u = x - a; coefficients become polynomials in x
  BivFq r;
  for (const auto& ser : f.c) {
    // sum_j c_j (x-a)^j
    UFq acc = UFq::zero();
    UFq shift;  // x - a
    shift.c = {k.neg(a), k.one()};
    UFq pw = UFq::constant(k, k.one());
    for (size_t j = 0; j < ser.c.size(); ++j) {
      if (!k.is_zero(ser.c[j]))
        acc = up_add(k, acc, up_scale(k, pw, ser.c[j]));
      pw = up_mul(k, pw, shift);
    }
    r.c.push_back(acc);
  }
  r.trim();
  return r;
}

std::string biv_str(const FqK& k, const BivFq& f, const std::string& xn,
                    const std::string& yn) {
  std::ostringstream os;
  bool first = true;
  for (size_t j = f.c.size(); j-- > 0;) {
    for (size_t i = f.c[j].c.size(); i-- > 0;) {
      if (k.is_zero(f.c[j].c[i])) continue;
      if (!first) os << " + ";
      first = false;
      os << "(" << k.str(f.c[j].c[i]) << ")";
      if (i) os << "*" << xn << (i > 1 ? "^" + std::to_string(i) : "");
      if (j) os << "*" << yn << (j > 1 ? "^" + std::to_string(j) : "");
    }
  }
  if (first) os << "0";
  return os.str();
}

BivFq biv_frobenius(const FqK& k, const BivFq& f) {
  BivFq r = f;
  for (auto& cf : r.c)
    for (auto& e : cf.c) e = k.frobenius(e);
  return r;
}

bool biv_eq(const FqK& k, const BivFq& a, const BivFq& b) {
  return biv_sub(k, a, b).is_zero();
}

}  // namespace

PlaneFactorAnalysis analyze_plane_poly(const MultiPoly& f_in) {
  PlaneFactorAnalysis out;
  const RingPtr& ring = f_in.ring();
  int64_t p = ring->field().p();
  if (ring->nvars() != 2)
    fail(errc::validation_error, "plane analysis expects two variables");
  if (f_in.is_zero() || f_in.is_constant())
    fail(errc::validation_error, "constant polynomial");
  uint32_t d = f_in.degree();
  if (d == 1) {
    out.irreducible = true;
    out.absolutely_irreducible = true;
    return out;
  }

  FpK fp(p);

  // p-th power?
  {
    bool pth = true;
    for (const auto& [m, c] : f_in.terms())
      for (uint32_t e : m)
        if (e % p != 0) pth = false;
    if (pth) {
      MultiPoly root(ring);
      for (const auto& [m, c] : f_in.terms()) {
        Monomial mm = m;
        for (auto& e : mm) e /= static_cast<uint32_t>(p);
        root.add_term(mm, c);  // coefficients are Frobenius-fixed
      }
      out.irreducible = false;
      out.absolutely_irreducible = false;
      out.fp_witness = root.str();
      return out;
    }
  }

  // orientation: main variable with nonzero partial
  size_t yv = !f_in.derivative(1).is_zero() && f_in.degree_in(1) >= 1 ? 1 : 0;
  size_t xv = 1 - yv;
  // content in F_p[x]
  {
    std::map<uint32_t, UPp> ycoeffs;
    for (const auto& [m, c] : f_in.terms()) {
      UPp& t = ycoeffs[m[yv]];
      if (t.c.size() < m[xv] + 1u) t.c.resize(m[xv] + 1, 0);
      t.c[m[xv]] = fp.F.add(t.c[m[xv]], c);
    }
    UPp content = UPp::zero();
    for (auto& [j, t] : ycoeffs) {
      t.trim(fp);
      content = up_gcd(fp, content, t);
    }
    if (content.deg() > 0) {
      out.irreducible = false;
      out.absolutely_irreducible = false;
      out.fp_witness = from_upoly(content, ring, xv).str();
      return out;
    }
  }
  // squarefree over F_p(x): gcd(f, df/dy) in F_p(x)[y]
  {
    RatK rk(p);
    uint32_t dy = f_in.degree_in(yv);
    std::vector<RatK::El> cs(dy + 1, rk.zero());
    for (const auto& [m, c] : f_in.terms()) {
      UPp mono;
      mono.c.assign(m[xv] + 1, 0);
      mono.c[m[xv]] = c;
      cs[m[yv]] = rk.add(cs[m[yv]], rk.from_poly(mono));
    }
    UP<RatK> fy = UP<RatK>::make(rk, cs);
    UP<RatK> dfy = up_derivative(rk, fy, p);
    if (!dfy.is_zero()) {
      UP<RatK> g = up_gcd(rk, fy, dfy);
      if (g.deg() > 0) {
        // clear denominators: a genuine proper factor over F_p
        UPp lcm = UPp::constant(fp, 1);
        for (const auto& ce : g.c) {
          UPp gg = up_gcd(fp, lcm, ce.den);
          UPp q, r;
          up_divmod(fp, ce.den, gg, q, r);
          lcm = up_mul(fp, lcm, q);
        }
        MultiPoly wit(ring);
        for (size_t j = 0; j < g.c.size(); ++j) {
          UPp q, r;
          up_divmod(fp, up_mul(fp, g.c[j].num, lcm), g.c[j].den, q, r);
          MultiPoly part = from_upoly(q, ring, xv);
          wit = wit +
                part * MultiPoly::variable(ring, yv, static_cast<uint32_t>(j));
        }
        out.irreducible = false;
        out.absolutely_irreducible = false;
        out.fp_witness = wit.str();
        return out;
      }
    }
  }

  // absolute phase over F_q, q = p^e with e a multiple of d
  for (size_t e = d;; e += d) {
    if (e > 24) fail(errc::limit_exceeded, "factor field degree too large");
    FqK k = make_fq(p, e);

    // embed f over F_q as a bivariate in (x, y)
    BivFq base;
    for (const auto& [m, c] : f_in.terms()) {
      uint32_t mx = m[xv], my = m[yv];
      if (base.c.size() < my + 1u) base.c.resize(my + 1);
      UFq& target = base.c[my];
      if (target.c.size() < mx + 1u) target.c.resize(mx + 1, k.zero());
      target.c[mx] = k.add(target.c[mx], k.from_base(c));
      target.trim(k);
    }
    base.trim();

    // shear x -> x + lambda*y until monic of degree d in y
    auto shear = [&](const BivFq& g, const FqK::El& lambda) {
      BivFq r;
      for (size_t j = 0; j < g.c.size(); ++j) {
        for (size_t i = 0; i < g.c[j].c.size(); ++i) {
          const FqK::El& c = g.c[j].c[i];
          if (k.is_zero(c)) continue;
          // x^i y^j -> (x + lambda y)^i y^j
          std::vector<int64_t> binom(i + 1, 0);
          binom[0] = 1;
          for (size_t row = 1; row <= i; ++row)
            for (size_t t = row; t >= 1; --t)
              binom[t] = fp.F.add(binom[t], binom[t - 1]);
          for (size_t t = 0; t <= i; ++t) {
            if (binom[t] == 0) continue;
            FqK::El coef =
                k.mul(c, k.mul(k.from_base(binom[t]), k.pow(lambda, t)));
            if (k.is_zero(coef)) continue;
            size_t ydeg = j + t, xdeg = i - t;
            if (r.c.size() < ydeg + 1) r.c.resize(ydeg + 1);
            UFq& tgt = r.c[ydeg];
            if (tgt.c.size() < xdeg + 1) tgt.c.resize(xdeg + 1, k.zero());
            tgt.c[xdeg] = k.add(tgt.c[xdeg], coef);
          }
        }
      }
      for (auto& cf : r.c) cf.trim(k);
      r.trim();
      return r;
    };

    bool found = false;
    FqK::El lambda = k.zero();
    BivFq best;
    for (uint64_t li = 0; li < k.q() && !found; ++li) {
      lambda = k.element(li);
      BivFq g = shear(base, lambda);
      if (g.ydeg() == static_cast<int>(d) && g.c.back().deg() == 0) {
        auto inv = k.inv(g.c.back().c[0]);
        for (auto& cf : g.c) cf = up_scale(k, cf, inv);
        best = g;
        found = true;
      }
    }
    if (!found) continue;

    // good specialization point: squarefree image of full degree
    bool have_a = false;
    FqK::El a = k.zero();
    UFq spec;
    for (uint64_t ai = 0; ai < k.q(); ++ai) {
      a = k.element(ai);
      spec = biv_eval_x(k, best, a);
      if (spec.deg() != static_cast<int>(d)) continue;
      UFq der = up_derivative(k, spec, p);
      if (der.is_zero()) continue;
      if (up_gcd(k, spec, der).deg() == 0) {
        have_a = true;
        break;
      }
    }
    if (!have_a) continue;  // enlarge the field and retry

    std::vector<UFq> locals;
    berlekamp(k, up_monic(k, spec), locals);
    std::sort(locals.begin(), locals.end(),
              [](const UFq& u, const UFq& v) { return u.c < v.c; });
    size_t r = locals.size();
    std::vector<BivFq> factors;
    if (r == 1) {
      factors.push_back(best);
    } else {
      size_t prec = d + 1;  // lift precision exceeds any factor's x-degree
      SerPoly F;
      for (const auto& cf : best.c) {
        Ser s = ser_zero(k, prec);
        UFq poly = cf;
        for (size_t j = 0; j < prec; ++j) {
          if (poly.is_zero()) break;
          s.c[j] = up_eval(k, poly, a);
          // synthetic division by (x - a)
          UFq shifted;
          shifted.c.assign(poly.c.size() > 0 ? poly.c.size() - 1 : 0,
                           k.zero());
          FqK::El carry = k.zero();
          for (size_t i = poly.c.size(); i-- > 1;) {
            carry = k.add(poly.c[i], k.mul(carry, a));
            shifted.c[i - 1] = carry;
          }
          shifted.trim(k);
          poly = shifted;
        }
        F.c.push_back(std::move(s));
      }
      F.trim(k);
      std::vector<SerPoly> lifted;
      hensel_multi(k, F, locals, lifted);

      // recombination by minimal subsets
      std::vector<size_t> live(r);
      for (size_t i = 0; i < r; ++i) live[i] = i;
      while (!live.empty()) {
        bool found_factor = false;
        for (size_t size = 1; size <= live.size() && !found_factor; ++size) {
          std::vector<size_t> sel(size);
          for (size_t i = 0; i < size; ++i) sel[i] = i;
          for (;;) {
            SerPoly prod;
            {
              Ser one = ser_zero(k, prec);
              one.c[0] = k.one();
              prod.c.push_back(one);
            }
            for (size_t i : sel) prod = sp_mul(k, prod, lifted[live[i]]);
            BivFq cand = sp_to_biv(k, prod, a);
            BivFq quot;
            if (size == live.size() || biv_divide(k, best, cand, quot)) {
              factors.push_back(cand);
              std::vector<size_t> rest;
              for (size_t i = 0, si = 0; i < live.size(); ++i) {
                if (si < sel.size() && sel[si] == i)
                  ++si;
                else
                  rest.push_back(live[i]);
              }
              live = rest;
              found_factor = true;
              break;
            }
            size_t t = size;
            bool more = false;
            while (t-- > 0) {
              if (sel[t] < live.size() - size + t) {
                ++sel[t];
                for (size_t s2 = t + 1; s2 < size; ++s2)
                  sel[s2] = sel[s2 - 1] + 1;
                more = true;
                break;
              }
            }
            if (!more) break;
          }
        }
        if (!found_factor)
          fail(errc::validation_error, "recombination failed");
      }
    }

    // unshear and normalize (scale so the maximal term has coefficient 1)
    FqK::El neg_lambda = k.neg(lambda);
    for (auto& g : factors) {
      g = shear(g, neg_lambda);
      FqK::El lead = k.zero();
      for (size_t j = g.c.size(); j-- > 0;) {
        if (!g.c[j].is_zero()) {
          lead = g.c[j].c.back();
          break;
        }
      }
      auto inv = k.inv(lead);
      for (auto& cf : g.c) cf = up_scale(k, cf, inv);
    }

    out.absolute_factors = factors.size();
    out.absolutely_irreducible = factors.size() == 1;

    // Frobenius orbits give the F_p-irreducible factorization
    std::vector<bool> used(factors.size(), false);
    size_t orbits = 0;
    std::vector<std::vector<size_t>> orbit_list;
    for (size_t i = 0; i < factors.size(); ++i) {
      if (used[i]) continue;
      ++orbits;
      std::vector<size_t> orbit{i};
      used[i] = true;
      BivFq cur = biv_frobenius(k, factors[i]);
      int guard = 0;
      while (!biv_eq(k, cur, factors[i])) {
        bool matched = false;
        for (size_t j2 = 0; j2 < factors.size(); ++j2) {
          if (used[j2]) continue;
          if (biv_eq(k, cur, factors[j2])) {
            used[j2] = true;
            orbit.push_back(j2);
            matched = true;
            break;
          }
        }
        if (!matched) fail(errc::validation_error, "frobenius orbit mismatch");
        cur = biv_frobenius(k, cur);
        if (++guard > 64)
          fail(errc::validation_error, "frobenius orbit runaway");
      }
      orbit_list.push_back(std::move(orbit));
    }
    out.irreducible = orbits == 1;
    out.splitting_degree = out.irreducible ? factors.size() : e;
    if (!out.absolutely_irreducible) {
      out.abs_witness =
          biv_str(k, factors[0], ring->var_name(xv), ring->var_name(yv)) +
          (k.e > 1 ? "  [w generates the degree-" + std::to_string(k.e) +
                         " extension]"
                   : "");
      if (!out.irreducible && !orbit_list.empty()) {
        BivFq prodf;
        prodf.c.push_back(UFq::constant(k, k.one()));
        for (size_t idx : orbit_list[0]) prodf = biv_mul(k, prodf, factors[idx]);
        out.fp_witness =
            biv_str(k, prodf, ring->var_name(xv), ring->var_name(yv));
      }
    } else {
      out.irreducible = true;
      out.splitting_degree = 1;
    }
    return out;
  }
}

}  // namespace gnorm
