#pragma once

#include <cstdint>

namespace ffor {

// Field elements are canonical residues in [0, p).
using Coeff = std::uint32_t;

bool is_prime(std::uint64_t n);

/// The prime field F_p for 2 <= p < 2^31.
///
/// Products of two residues fit in 64 bits before reduction, so every
/// operation is a single machine multiply plus a modulus.
class PrimeField {
 public:
  /// Throws std::invalid_argument unless p is a prime below 2^31.
  explicit PrimeField(std::uint64_t p);

  Coeff characteristic() const { return p_; }

  Coeff reduce(std::int64_t a) const;
  Coeff add(Coeff a, Coeff b) const;
  Coeff sub(Coeff a, Coeff b) const;
  Coeff neg(Coeff a) const { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const;
  /// Throws DivisionByZero for a == 0.
  Coeff inv(Coeff a) const;
  Coeff div(Coeff a, Coeff b) const { return mul(a, inv(b)); }
  /// Square-and-multiply; pow(a, 0) == 1, including a == 0.
  Coeff pow(Coeff a, std::uint64_t n) const;

  bool operator==(const PrimeField&) const = default;

 private:
  Coeff p_;
};

}  // namespace ffor
