#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "ffor/groebner.hpp"
#include "ffor/polynomial.hpp"

namespace ffor {

/// R = F_p[x_1..x_n] / Q, with Q given by ambient generators (possibly
/// none, meaning R is the polynomial ring). The ambient ring is grevlex.
class QuotientRing {
 public:
  /// Q's generators must live in `ambient`, which must be grevlex.
  /// Throws std::invalid_argument if Q is the unit ideal.
  static std::shared_ptr<const QuotientRing> make(
      RingPtr ambient, std::vector<Polynomial> quotient_gens = {});
  static std::shared_ptr<const QuotientRing> polynomial_ring(
      PrimeField field, std::vector<std::string> variables);

  const RingPtr& ambient() const { return ambient_; }
  const PrimeField& field() const { return ambient_->field(); }
  Coeff characteristic() const { return field().characteristic(); }
  std::size_t num_vars() const { return ambient_->num_vars(); }

  const std::vector<Polynomial>& quotient_generators() const { return q_gens_; }
  const GroebnerBasis& quotient_basis() const { return q_basis_; }
  bool is_polynomial_ring() const { return q_basis_.empty(); }

  /// e.g. `F_2[x,y]/(x^3 + y^2)`.
  std::string describe() const;

  Polynomial variable(std::size_t i) const {
    return Polynomial::variable(ambient_, i);
  }
  Polynomial constant(Coeff c) const { return Polynomial::constant(ambient_, c); }

  /// Same prime, variables and reduced basis of Q.
  bool operator==(const QuotientRing& other) const;

 private:
  QuotientRing(RingPtr ambient, std::vector<Polynomial> quotient_gens);

  RingPtr ambient_;
  std::vector<Polynomial> q_gens_;
  GroebnerBasis q_basis_;
};

using QuotientPtr = std::shared_ptr<const QuotientRing>;

/// Ideal of a quotient ring R = S/Q, held as the lift (gens + Q) in S.
///
/// The reduced Gröbner basis of the lift is computed on first use and
/// shared between copies; initialization is guarded by std::call_once.
class Ideal {
 public:
  Ideal(QuotientPtr ring, std::vector<Polynomial> generators);

  static Ideal zero(QuotientPtr ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(QuotientPtr ring);

  const QuotientPtr& ring() const { return ring_; }
  /// The chosen generators of the ideal of R, without Q.
  const std::vector<Polynomial>& generators() const { return gens_; }

  /// Reduced Gröbner basis of gens + Q in the ambient ring.
  const GroebnerBasis& basis() const;

  bool contains(const Polynomial& f) const;
  bool is_unit() const { return basis().is_unit(); }
  /// The zero ideal of R (lift equals Q).
  bool is_zero() const;

  /// Basis elements of the lift that are nonzero in R; these together
  /// with Q generate the lift.
  std::vector<Polynomial> reduced_generators() const;

  /// Subset of reduced_generators() with redundant elements (those in the
  /// ideal of the remaining ones plus Q) removed greedily.
  std::vector<Polynomial> minimal_generators() const;

  /// `[g1, g2]` using minimal_generators(), or `[0]` for the zero ideal.
  std::string to_string() const;

 private:
  struct Cache {
    std::once_flag once;
    std::unique_ptr<GroebnerBasis> basis;
  };

  QuotientPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

bool same_ring(const QuotientPtr& a, const QuotientPtr& b);

bool ideal_membership(const Polynomial& f, const Ideal& ideal);
bool ideal_equal(const Ideal& a, const Ideal& b);
bool ideal_subset(const Ideal& a, const Ideal& b);

Ideal ideal_sum(const Ideal& a, const Ideal& b);
/// Elimination of an auxiliary t from t*I + (1 - t)*J on the lifts.
Ideal ideal_intersect(const Ideal& a, const Ideal& b);
/// Left fold of ideal_intersect; needs at least one ideal.
Ideal ideal_intersect(std::span<const Ideal> ideals);
/// (I : x) = {f : f*x in I}; the unit ideal when x is zero in R.
Ideal ideal_colon(const Ideal& ideal, const Polynomial& x);
/// (I : J) as the intersection of (I : g) over the generators g of J.
Ideal ideal_colon(const Ideal& ideal, const Ideal& by);

/// Generators of (L1 ∩ L2) for ideals of the ambient ring itself.
std::vector<Polynomial> intersect_ambient(const RingPtr& ambient,
                                          std::span<const Polynomial> a,
                                          std::span<const Polynomial> b);

}  // namespace ffor
