#ifndef HILBDET_FIELD_HPP
#define HILBDET_FIELD_HPP

#include <cstdint>
#include <stdexcept>

namespace hilbdet {

using fp_t = std::uint32_t;

// Prime field F_p with p odd. Elements are canonical representatives in [0, p).
// Large default prime so that ranks of Macaulay matrices built from random
// matrices agree with the generic characteristic-0 ranks with overwhelming
// probability.
class PrimeField {
public:
  static constexpr fp_t kDefaultPrime = 32003;

  explicit PrimeField(fp_t p = kDefaultPrime) : p_(p) {
    if (p < 3 || !is_prime(p))
      throw std::invalid_argument("PrimeField: modulus must be an odd prime > 2");
    if (p > (1u << 31))
      throw std::invalid_argument("PrimeField: modulus too large");
  }

  fp_t p() const { return p_; }

  fp_t add(fp_t a, fp_t b) const {
    fp_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  fp_t sub(fp_t a, fp_t b) const { return a >= b ? a - b : a + p_ - b; }
  fp_t neg(fp_t a) const { return a == 0 ? 0 : p_ - a; }
  fp_t mul(fp_t a, fp_t b) const {
    return static_cast<fp_t>((std::uint64_t)a * b % p_);
  }

  fp_t pow(fp_t a, std::uint64_t e) const {
    fp_t r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  fp_t inv(fp_t a) const {
    if (a == 0) throw std::domain_error("PrimeField: inverse of zero");
    // extended Euclid, avoiding negatives
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p_, new_r = a;
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      std::int64_t tmp = t - q * new_t;
      t = new_t; new_t = tmp;
      tmp = r - q * new_r;
      r = new_r; new_r = tmp;
    }
    if (t < 0) t += p_;
    return static_cast<fp_t>(t);
  }

  fp_t from_int(long long v) const {
    long long m = v % (long long)p_;
    if (m < 0) m += p_;
    return static_cast<fp_t>(m);
  }

  static bool is_prime(fp_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (fp_t d = 3; (std::uint64_t)d * d <= n; d += 2)
      if (n % d == 0) return false;
    return true;
  }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

private:
  fp_t p_;
};

} // namespace hilbdet

#endif
