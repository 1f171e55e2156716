#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ffor/polynomial.hpp"

namespace ffor {

/// Fully reduced remainder of f on division by `divisors`: f - r lies in
/// their ideal and no term of r is divisible by a leading monomial.
/// Divisors are tried in the given order; r is unique when the divisors
/// form a Gröbner basis.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// Reduced Gröbner basis: monic, inter-reduced, sorted by descending
/// leading monomial. The zero ideal has no generators.
class GroebnerBasis {
 public:
  explicit GroebnerBasis(RingPtr ring) : ring_(std::move(ring)) {}
  GroebnerBasis(RingPtr ring, std::vector<Polynomial> generators)
      : ring_(std::move(ring)), gens_(std::move(generators)) {}

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool empty() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_constant(); }

  Polynomial normal_form(const Polynomial& f) const;
  bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
    return same_ring(a.ring_, b.ring_) && a.gens_ == b.gens_;
  }

 private:
  RingPtr ring_;
  std::vector<Polynomial> gens_;
};

/// Buchberger's algorithm with the normal selection strategy (smallest lcm
/// degree, ties by pair index) and Gebauer-Möller pruning. Generators are
/// re-homed into `ring` (same variables, the ring's order) first.
GroebnerBasis reduced_groebner_basis(std::span<const Polynomial> gens,
                                     const RingPtr& ring);

/// Convenience overload using the ring of the first generator; an empty
/// list needs the explicit-ring form.
GroebnerBasis reduced_groebner_basis(std::span<const Polynomial> gens);

/// True if every S-polynomial of the basis reduces to zero.
bool satisfies_buchberger_criterion(const GroebnerBasis& basis);

/// Generators of (ideal of gens) ∩ F_p[x_{k+1}..x_n], as the reduced
/// Gröbner basis under grevlex. The result lives in `target` when given
/// (which must have n - k variables), otherwise in a fresh grevlex ring on
/// the remaining variable names.
std::vector<Polynomial> elimination_ideal(std::span<const Polynomial> gens,
                                          std::size_t k,
                                          RingPtr target = nullptr);

/// f / g when g divides f exactly in the polynomial ring.
std::optional<Polynomial> divide_exact(const Polynomial& f, const Polynomial& g);

}  // namespace ffor
