#ifndef GNORM_FP_HPP
#define GNORM_FP_HPP

#include <cstdint>

#include "gnorm/errors.hpp"

namespace gnorm {

// The prime field F_p. Elements are canonical representatives in [0, p).
class PrimeField {
 public:
  explicit PrimeField(int64_t p);

  int64_t p() const { return p_; }

  int64_t reduce(int64_t a) const {
    int64_t r = a % p_;
    return r < 0 ? r + p_ : r;
  }
  int64_t add(int64_t a, int64_t b) const { return (a + b) % p_; }
  int64_t sub(int64_t a, int64_t b) const { return reduce(a - b); }
  int64_t mul(int64_t a, int64_t b) const { return (a * b) % p_; }
  int64_t neg(int64_t a) const { return a == 0 ? 0 : p_ - a; }
  int64_t inv(int64_t a) const;
  int64_t div(int64_t a, int64_t b) const { return mul(a, inv(b)); }
  int64_t pow(int64_t a, uint64_t e) const;

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }
  bool operator!=(const PrimeField& o) const { return p_ != o.p_; }

  static bool is_prime(int64_t n);

 private:
  int64_t p_;
};

}  // namespace gnorm

#endif
