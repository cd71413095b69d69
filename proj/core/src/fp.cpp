#include "gnorm/fp.hpp"

namespace gnorm {

PrimeField::PrimeField(int64_t p) : p_(p) {
  if (!is_prime(p)) fail(errc::invalid_prime, "p = " + std::to_string(p));
}

bool PrimeField::is_prime(int64_t n) {
  if (n < 2) return false;
  for (int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

int64_t PrimeField::inv(int64_t a) const {
  a = reduce(a);
  if (a == 0) fail(errc::validation_error, "division by zero in F_p");
  // extended Euclid
  int64_t r0 = p_, r1 = a, t0 = 0, t1 = 1;
  while (r1 != 0) {
    int64_t q = r0 / r1;
    int64_t r2 = r0 - q * r1;
    int64_t t2 = t0 - q * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  return reduce(t0);
}

int64_t PrimeField::pow(int64_t a, uint64_t e) const {
  int64_t base = reduce(a), acc = 1 % p_;
  while (e) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

}  // namespace gnorm
