#pragma once

// Independent model of the cusp F_2[x,y]/(y^2 + x^3) as the semigroup ring
// F_2[t^2, t^3], via x = t^2 and y = t^3. Its monomial ideals are sets of
// t-exponents closed under adding elements of S = {0, 2, 3, 4, ...}, so
// intersection, colon and bracket powers reduce to set arithmetic.

#include <set>
#include <vector>

#include "support.hpp"

namespace ffor::testing {

class SemigroupIdeal {
 public:
  static constexpr int kLimit = 64;

  static bool in_semigroup(int k) { return k == 0 || k >= 2; }

  static SemigroupIdeal generated_by(const std::vector<int>& gens) {
    SemigroupIdeal out;
    for (int a : gens) {
      for (int k = a; k <= kLimit; ++k) {
        if (in_semigroup(k - a)) out.exps_.insert(k);
      }
    }
    return out;
  }

  // A nonzero ideal contains every exponent from its minimum plus 2 on.
  bool contains(int k) const {
    if (k > kLimit) return !exps_.empty();
    return exps_.count(k) > 0;
  }

  bool is_zero() const { return exps_.empty(); }

  SemigroupIdeal intersect(const SemigroupIdeal& other) const {
    SemigroupIdeal out;
    for (int k : exps_) {
      if (other.contains(k)) out.exps_.insert(k);
    }
    return out;
  }

  SemigroupIdeal colon(int a) const {
    SemigroupIdeal out;
    for (int k = 0; k <= kLimit; ++k) {
      if (in_semigroup(k) && contains(k + a)) out.exps_.insert(k);
    }
    return out;
  }

  SemigroupIdeal bracket(int q) const { return generated_by(scaled_generators(q)); }

  std::vector<int> generators() const { return scaled_generators(1); }

  bool operator==(const SemigroupIdeal&) const = default;

 private:
  std::vector<int> scaled_generators(int q) const {
    std::vector<int> out;
    for (int k : exps_) {
      bool redundant = false;
      for (int s = 2; s <= k && !redundant; ++s) redundant = exps_.count(k - s) > 0;
      if (!redundant) out.push_back(q * k);
    }
    return out;
  }

  std::set<int> exps_;
};

// t^k written in x and y.
inline Polynomial semigroup_element(const QuotientPtr& cusp_ring, int k) {
  std::vector<std::uint32_t> exps(2, 0);
  if (k % 2 == 0) {
    exps[0] = static_cast<std::uint32_t>(k / 2);
  } else {
    exps[0] = static_cast<std::uint32_t>((k - 3) / 2);
    exps[1] = 1;
  }
  return Polynomial::term(cusp_ring->ambient(), 1, Monomial(exps));
}

inline Ideal to_ring_ideal(const QuotientPtr& cusp_ring, const SemigroupIdeal& ideal) {
  std::vector<Polynomial> gens;
  for (int k : ideal.generators()) gens.push_back(semigroup_element(cusp_ring, k));
  return Ideal(cusp_ring, std::move(gens));
}

}  // namespace ffor::testing
