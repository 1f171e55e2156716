#pragma once

// Brute-force Frobenius roots of monomial ideals in F_2[x,y]. A monomial
// ideal generated in degree <= 4 is determined by which of the 15
// monomials of degree <= 4 it contains, so it is a 15-bit mask; the root
// of I is the intersection of all such J with I ⊆ J^[2].

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

namespace ffor::testing {

class MonomialRootOracle {
 public:
  using Exp = std::pair<unsigned, unsigned>;
  static constexpr unsigned kDegree = 4;

  MonomialRootOracle() {
    for (unsigned d = 0; d <= kDegree; ++d) {
      for (unsigned a = d + 1; a-- > 0;) monomials_.push_back({a, d - a});
    }
    const std::uint32_t count = 1u << monomials_.size();
    closures_.reserve(count);
    for (std::uint32_t subset = 0; subset < count; ++subset) {
      closures_.push_back(closure(subset));
    }
  }

  const std::vector<Exp>& monomials() const { return monomials_; }

  // Mask of the ideal generated by `gens`, restricted to degree <= 4.
  std::uint32_t mask_of(const std::vector<Exp>& gens) const {
    std::uint32_t out = 0;
    for (std::size_t i = 0; i < monomials_.size(); ++i) {
      for (const auto& g : gens) {
        if (g.first <= monomials_[i].first && g.second <= monomials_[i].second) {
          out |= 1u << i;
        }
      }
    }
    return out;
  }

  // Root of the ideal generated by `gens` (any degrees up to 2*4 + 1).
  std::uint32_t root(const std::vector<Exp>& gens) const {
    std::uint32_t best = (1u << monomials_.size()) - 1;
    for (std::uint32_t closed : unique_closures()) {
      if (contains_after_bracket(closed, gens)) best &= closed;
    }
    return best;
  }

 private:
  std::uint32_t closure(std::uint32_t subset) const {
    std::vector<Exp> gens;
    for (std::size_t i = 0; i < monomials_.size(); ++i) {
      if (subset & (1u << i)) gens.push_back(monomials_[i]);
    }
    return mask_of(gens);
  }

  const std::vector<std::uint32_t>& unique_closures() const {
    if (unique_.empty()) {
      std::vector<bool> seen(closures_.size(), false);
      for (std::uint32_t c : closures_) {
        if (!seen[c]) {
          seen[c] = true;
          unique_.push_back(c);
        }
      }
    }
    return unique_;
  }

  // I ⊆ J^[2] for J given by its degree <= 4 part.
  bool contains_after_bracket(std::uint32_t j, const std::vector<Exp>& gens) const {
    for (const auto& g : gens) {
      bool covered = false;
      for (std::size_t i = 0; i < monomials_.size() && !covered; ++i) {
        covered = (j & (1u << i)) && 2 * monomials_[i].first <= g.first &&
                  2 * monomials_[i].second <= g.second;
      }
      if (!covered) return false;
    }
    return true;
  }

  std::vector<Exp> monomials_;
  std::vector<std::uint32_t> closures_;
  mutable std::vector<std::uint32_t> unique_;
};

}  // namespace ffor::testing
