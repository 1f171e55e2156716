#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ffor/prime_field.hpp"

namespace ffor {

/// Exponent vector, one entry per ambient variable.
///
/// Every arithmetic step that can grow an exponent is checked against the
/// 32-bit budget and throws ExponentOverflow instead of wrapping.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t num_vars) : exps_(num_vars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

  std::size_t size() const { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::uint32_t& operator[](std::size_t i) { return exps_[i]; }
  std::span<const std::uint32_t> exponents() const { return exps_; }

  std::uint64_t degree() const;
  bool is_one() const;

  bool divides(const Monomial& other) const;
  /// this / divisor; the caller guarantees divisor.divides(*this).
  Monomial quotient(const Monomial& divisor) const;
  /// Every exponent multiplied by `factor`.
  Monomial scaled(std::uint64_t factor) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend bool coprime(const Monomial& a, const Monomial& b);

  // Plain vector comparison for use as a map key; not a monomial order.
  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;

 private:
  std::vector<std::uint32_t> exps_;
};

/// Multiplicative well-order on monomials.
///
/// `block(k)` is an elimination order for the first k variables: the
/// first block is compared by grevlex and ties are broken by grevlex on
/// the remaining variables.
class MonomialOrder {
 public:
  enum class Kind { Lex, Grevlex, Block };

  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0); }
  static MonomialOrder grevlex() { return MonomialOrder(Kind::Grevlex, 0); }
  static MonomialOrder block(std::size_t k) {
    return MonomialOrder(Kind::Block, k);
  }

  Kind kind() const { return kind_; }
  std::size_t block_size() const { return block_; }

  /// Negative, zero or positive as a <, =, > b.
  int compare(const Monomial& a, const Monomial& b) const;

  bool operator==(const MonomialOrder&) const = default;

 private:
  MonomialOrder(Kind kind, std::size_t block) : kind_(kind), block_(block) {}

  Kind kind_;
  std::size_t block_;
};

/// F_p[x_1..x_n] under a fixed monomial order. Variable names only matter
/// for parsing and printing.
class PolyRing {
 public:
  PolyRing(PrimeField field, std::vector<std::string> variables,
           MonomialOrder order = MonomialOrder::grevlex());

  static std::shared_ptr<const PolyRing> make(
      PrimeField field, std::vector<std::string> variables,
      MonomialOrder order = MonomialOrder::grevlex()) {
    return std::make_shared<const PolyRing>(field, std::move(variables), order);
  }

  const PrimeField& field() const { return field_; }
  const std::vector<std::string>& variables() const { return vars_; }
  std::size_t num_vars() const { return vars_.size(); }
  const MonomialOrder& order() const { return order_; }
  std::optional<std::size_t> variable_index(const std::string& name) const;

  bool operator==(const PolyRing&) const = default;

 private:
  PrimeField field_;
  std::vector<std::string> vars_;
  MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

bool same_ring(const RingPtr& a, const RingPtr& b);

struct Term {
  Coeff coeff;
  Monomial monomial;

  bool operator==(const Term&) const = default;
};

/// Sparse polynomial: terms strictly descending in the ring's order, no
/// zero coefficients. The zero polynomial has no terms.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  /// Sorts, merges equal monomials and drops zero coefficients.
  Polynomial(RingPtr ring, std::vector<Term> terms);

  static Polynomial constant(RingPtr ring, Coeff c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial term(RingPtr ring, Coeff c, Monomial m);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::uint64_t total_degree() const;

  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().monomial; }
  Coeff leading_coeff() const { return terms_.front().coeff; }

  /// All terms but the leading one.
  Polynomial tail() const;
  Polynomial monic() const;
  Polynomial scaled(Coeff c) const;
  Polynomial mul_term(Coeff c, const Monomial& m) const;
  Polynomial pow(std::uint64_t n) const;

  /// f^(p^e) via the additive Frobenius: each exponent is multiplied by
  /// p^e and coefficients stay fixed, since c^p = c in F_p.
  Polynomial frobenius_power(unsigned e) const;

  /// Formal partial derivative in variable `index`.
  Polynomial derivative(std::size_t index) const;

  /// Re-home into `target`; variable i goes to target index var_map[i].
  /// A negative entry drops the variable, which must then not occur.
  Polynomial mapped(const RingPtr& target, std::span<const int> var_map) const;
  /// Same variables, possibly a different order.
  Polynomial in_ring(const RingPtr& target) const;

  /// Canonical rendering, e.g. `x^2*y + 2*z`.
  std::string to_string() const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator-(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator*(const Polynomial& f, const Polynomial& g);

  /// Equal iff same ring and identical term sequences.
  friend bool operator==(const Polynomial& f, const Polynomial& g);

 private:
  struct Canonical {};
  Polynomial(RingPtr ring, std::vector<Term> terms, Canonical)
      : ring_(std::move(ring)), terms_(std::move(terms)) {}

  friend Polynomial sub_mul_term(const Polynomial&, Coeff, const Monomial&,
                                 const Polynomial&);

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// f - c*m*g as a single sorted merge.
Polynomial sub_mul_term(const Polynomial& f, Coeff c, const Monomial& m,
                        const Polynomial& g);

/// p^e, or ExponentOverflow if it does not fit in 32 bits.
std::uint64_t frobenius_q(Coeff p, unsigned e);

std::string render_monomial(const Monomial& m,
                            const std::vector<std::string>& names);

}  // namespace ffor
