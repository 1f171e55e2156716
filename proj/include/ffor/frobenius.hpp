#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "ffor/ideal.hpp"

namespace ffor {

/// I^[p^e]: generated by the p^e-th powers of any generating set of I.
/// Raises the R-generators and keeps Q.
Ideal bracket_power(const Ideal& ideal, unsigned e);

/// The smallest ideal J with I ⊆ J^[p^e], for ideals of a polynomial ring.
/// Each generator is split as a sum of g_mu^(p^e) * mu over monomials mu
/// with all exponents below p^e; J is generated by all the g_mu.
/// Throws UnsupportedOperation on a proper quotient ring.
Ideal frobenius_root(const Ideal& ideal, unsigned e);

/// {f : f^p ∈ J}, by eliminating x from J(x) + (y_i - x_i^p) and reading
/// the result in y as an ideal in the original variables.
Ideal frobenius_kernel_preimage(const Ideal& ideal);

struct NilradicalResult {
  /// Lift of the nilradical of R, i.e. the radical of Q.
  Ideal radical;
  /// Number of preimage steps until the chain became stationary.
  unsigned steps;
  /// p^steps; every nilpotent f satisfies f^q ∈ Q.
  std::uint64_t q;
};

NilradicalResult nilradical_char_p(const QuotientPtr& ring);

bool is_reduced(const QuotientPtr& ring);

/// R_red = S / rad(Q).
QuotientPtr reduced_ring(const QuotientPtr& ring);

struct ClosureResult {
  bool member;
  std::optional<unsigned> witness_e;
};

/// Smallest e <= e_max with x^(p^e) ∈ I^[p^e], if any.
ClosureResult frobenius_closure_test(const Polynomial& x, const Ideal& ideal,
                                     unsigned e_max);

/// The single-exponent test x^(p^e) ∈ I^[p^e].
bool frobenius_closure_holds_at(const Polynomial& x, const Ideal& ideal, unsigned e);

struct ClosednessVerdict {
  enum class Kind { ClosedUpToBounds, NotClosed };
  Kind kind;
  std::optional<Polynomial> witness;
  std::optional<unsigned> witness_e;
  std::size_t candidates_checked;
};

/// Searches elements of degree <= degree_bound outside I for one in the
/// Frobenius closure of I. Candidates are normal forms modulo I: every
/// monic F_p-combination of standard monomials while there are at most
/// `exhaustive_limit` of them, otherwise the standard monomials and their
/// pairwise sums.
ClosednessVerdict is_frobenius_closed(const Ideal& ideal, unsigned e_max,
                                      unsigned degree_bound,
                                      std::size_t exhaustive_limit = 4096);

}  // namespace ffor
