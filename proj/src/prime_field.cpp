#include "ffor/prime_field.hpp"

#include <stdexcept>
#include <string>

#include "ffor/error.hpp"

namespace ffor {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(0) {
  if (p >= (std::uint64_t{1} << 31) || !is_prime(p)) {
    throw std::invalid_argument(std::to_string(p) +
                                " is not a prime below 2^31");
  }
  p_ = static_cast<Coeff>(p);
}

Coeff PrimeField::reduce(std::int64_t a) const {
  std::int64_t r = a % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Coeff>(r);
}

Coeff PrimeField::add(Coeff a, Coeff b) const {
  std::uint64_t s = std::uint64_t{a} + b;
  return static_cast<Coeff>(s >= p_ ? s - p_ : s);
}

Coeff PrimeField::sub(Coeff a, Coeff b) const {
  return a >= b ? a - b : static_cast<Coeff>(std::uint64_t{a} + p_ - b);
}

Coeff PrimeField::mul(Coeff a, Coeff b) const {
  return static_cast<Coeff>((std::uint64_t{a} * b) % p_);
}

Coeff PrimeField::inv(Coeff a) const {
  if (a == 0) throw DivisionByZero();
  // Extended Euclid on (a, p); p is prime so gcd is 1.
  std::int64_t r0 = p_, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  return reduce(s0);
}

Coeff PrimeField::pow(Coeff a, std::uint64_t n) const {
  Coeff result = 1;
  Coeff base = a;
  while (n > 0) {
    if (n & 1) result = mul(result, base);
    base = mul(base, base);
    n >>= 1;
  }
  return result;
}

}  // namespace ffor
