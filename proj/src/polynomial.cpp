#include "ffor/polynomial.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

#include "ffor/error.hpp"

namespace ffor {

namespace {

constexpr std::uint64_t kMaxExponent = std::numeric_limits<std::uint32_t>::max();

std::uint32_t checked_exponent(std::uint64_t e) {
  if (e > kMaxExponent) {
    throw ExponentOverflow("monomial exponent " + std::to_string(e) +
                           " exceeds 2^32 - 1");
  }
  return static_cast<std::uint32_t>(e);
}

std::uint64_t partial_degree(const Monomial& m, std::size_t begin,
                             std::size_t end) {
  std::uint64_t d = 0;
  for (std::size_t i = begin; i < end; ++i) d += m[i];
  return d;
}

// grevlex restricted to variables [begin, end).
int grevlex_compare(const Monomial& a, const Monomial& b, std::size_t begin,
                    std::size_t end) {
  std::uint64_t da = partial_degree(a, begin, end);
  std::uint64_t db = partial_degree(b, begin, end);
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = end; i > begin; --i) {
    if (a[i - 1] != b[i - 1]) return a[i - 1] > b[i - 1] ? -1 : 1;
  }
  return 0;
}

void check_same_ring(const Polynomial& f, const Polynomial& g) {
  if (!same_ring(f.ring(), g.ring())) {
    throw RingMismatch("polynomials belong to different rings");
  }
}

}  // namespace

// ---------------------------------------------------------------- Monomial

std::uint64_t Monomial::degree() const {
  return partial_degree(*this, 0, exps_.size());
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(),
                     [](std::uint32_t e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  Monomial r(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    r.exps_[i] = exps_[i] - divisor.exps_[i];
  }
  return r;
}

Monomial Monomial::scaled(std::uint64_t factor) const {
  Monomial r(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] != 0 && factor > kMaxExponent / exps_[i]) {
      throw ExponentOverflow("Frobenius scaling by " + std::to_string(factor) +
                             " overflows a monomial exponent");
    }
    r.exps_[i] = static_cast<std::uint32_t>(exps_[i] * factor);
  }
  return r;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    r.exps_[i] = checked_exponent(std::uint64_t{a.exps_[i]} + b.exps_[i]);
  }
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
  }
  return r;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.exps_[i] != 0 && b.exps_[i] != 0) return false;
  }
  return true;
}

// ----------------------------------------------------------- MonomialOrder

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  const std::size_t n = a.size();
  switch (kind_) {
    case Kind::Lex:
      for (std::size_t i = 0; i < n; ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      }
      return 0;
    case Kind::Grevlex:
      return grevlex_compare(a, b, 0, n);
    case Kind::Block: {
      std::size_t k = std::min(block_, n);
      if (int c = grevlex_compare(a, b, 0, k); c != 0) return c;
      return grevlex_compare(a, b, k, n);
    }
  }
  return 0;
}

// ---------------------------------------------------------------- PolyRing

PolyRing::PolyRing(PrimeField field, std::vector<std::string> variables,
                   MonomialOrder order)
    : field_(field), vars_(std::move(variables)), order_(order) {
  std::set<std::string> seen;
  for (const auto& v : vars_) {
    if (v.empty()) throw std::invalid_argument("empty variable name");
    if (!seen.insert(v).second) {
      throw std::invalid_argument("duplicate variable name '" + v + "'");
    }
  }
}

std::optional<std::size_t> PolyRing::variable_index(
    const std::string& name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  if (it == vars_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vars_.begin());
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

// -------------------------------------------------------------- Polynomial

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms)
    : ring_(std::move(ring)) {
  const auto& order = ring_->order();
  const auto& field = ring_->field();
  for (auto& t : terms) {
    if (t.monomial.size() != ring_->num_vars()) {
      throw std::invalid_argument("monomial length does not match the ring");
    }
    t.coeff = t.coeff % field.characteristic();
  }
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return order.compare(a.monomial, b.monomial) > 0;
  });
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().monomial == t.monomial) {
      terms_.back().coeff = field.add(terms_.back().coeff, t.coeff);
    } else {
      if (!terms_.empty() && terms_.back().coeff == 0) terms_.pop_back();
      terms_.push_back(std::move(t));
    }
  }
  if (!terms_.empty() && terms_.back().coeff == 0) terms_.pop_back();
}

Polynomial Polynomial::constant(RingPtr ring, Coeff c) {
  Monomial one(ring->num_vars());
  return Polynomial(std::move(ring), {{c, std::move(one)}});
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  Monomial m(ring->num_vars());
  m[index] = 1;
  return Polynomial(std::move(ring), {{1, std::move(m)}});
}

Polynomial Polynomial::term(RingPtr ring, Coeff c, Monomial m) {
  return Polynomial(std::move(ring), {{c, std::move(m)}});
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
}

std::uint64_t Polynomial::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

Polynomial Polynomial::tail() const {
  if (terms_.size() <= 1) return Polynomial(ring_);
  return Polynomial(ring_, std::vector<Term>(terms_.begin() + 1, terms_.end()),
                    Canonical{});
}

Polynomial Polynomial::monic() const {
  if (is_zero() || leading_coeff() == 1) return *this;
  return scaled(ring_->field().inv(leading_coeff()));
}

Polynomial Polynomial::scaled(Coeff c) const {
  c %= ring_->field().characteristic();
  if (c == 0) return Polynomial(ring_);
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff = ring_->field().mul(t.coeff, c);
  return Polynomial(ring_, std::move(out), Canonical{});
}

Polynomial Polynomial::mul_term(Coeff c, const Monomial& m) const {
  c %= ring_->field().characteristic();
  if (c == 0) return Polynomial(ring_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    out.push_back({ring_->field().mul(t.coeff, c), t.monomial * m});
  }
  // Monomial orders are multiplicative, so the order is preserved.
  return Polynomial(ring_, std::move(out), Canonical{});
}

Polynomial Polynomial::pow(std::uint64_t n) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::frobenius_power(unsigned e) const {
  if (e == 0) return *this;
  const std::uint64_t q = frobenius_q(ring_->field().characteristic(), e);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({t.coeff, t.monomial.scaled(q)});
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::derivative(std::size_t index) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    std::uint32_t e = t.monomial[index];
    if (e == 0) continue;
    Coeff c = ring_->field().mul(t.coeff, e % ring_->field().characteristic());
    if (c == 0) continue;
    Monomial m = t.monomial;
    m[index] = e - 1;
    out.push_back({c, std::move(m)});
  }
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::mapped(const RingPtr& target,
                              std::span<const int> var_map) const {
  if (var_map.size() != ring_->num_vars()) {
    throw std::invalid_argument("variable map has the wrong length");
  }
  if (target->field() != ring_->field()) {
    throw RingMismatch("cannot map between different prime fields");
  }
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(target->num_vars());
    for (std::size_t i = 0; i < var_map.size(); ++i) {
      if (t.monomial[i] == 0) continue;
      if (var_map[i] < 0) {
        throw std::invalid_argument("mapped polynomial uses a dropped variable");
      }
      m[static_cast<std::size_t>(var_map[i])] = t.monomial[i];
    }
    out.push_back({t.coeff, std::move(m)});
  }
  return Polynomial(target, std::move(out));
}

Polynomial Polynomial::in_ring(const RingPtr& target) const {
  if (same_ring(target, ring_)) return Polynomial(target, terms_, Canonical{});
  if (target->num_vars() != ring_->num_vars() ||
      target->field() != ring_->field()) {
    throw RingMismatch("target ring has different variables or field");
  }
  return Polynomial(target, terms_);
}

std::string render_monomial(const Monomial& m,
                            const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names[i];
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += " + ";
    std::string mono = render_monomial(t.monomial, ring_->variables());
    if (mono.empty()) {
      out += std::to_string(t.coeff);
    } else if (t.coeff == 1) {
      out += mono;
    } else {
      out += std::to_string(t.coeff) + '*' + mono;
    }
  }
  return out;
}

Polynomial Polynomial::operator-() const {
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff = ring_->field().neg(t.coeff);
  return Polynomial(ring_, std::move(out), Canonical{});
}

Polynomial sub_mul_term(const Polynomial& f, Coeff c, const Monomial& m,
                        const Polynomial& g) {
  const auto& field = f.ring_->field();
  const auto& order = f.ring_->order();
  const Coeff neg_c = field.neg(c % field.characteristic());
  if (neg_c == 0 || g.is_zero()) return f;
  std::vector<Term> out;
  out.reserve(f.terms_.size() + g.terms_.size());
  std::size_t i = 0, j = 0;
  Monomial gm;
  bool gm_valid = false;
  while (i < f.terms_.size() || j < g.terms_.size()) {
    if (j < g.terms_.size() && !gm_valid) {
      gm = g.terms_[j].monomial * m;
      gm_valid = true;
    }
    int cmp;
    if (i == f.terms_.size()) {
      cmp = -1;
    } else if (j == g.terms_.size()) {
      cmp = 1;
    } else {
      cmp = order.compare(f.terms_[i].monomial, gm);
    }
    if (cmp > 0) {
      out.push_back(f.terms_[i++]);
    } else if (cmp < 0) {
      out.push_back({field.mul(g.terms_[j].coeff, neg_c), std::move(gm)});
      ++j;
      gm_valid = false;
    } else {
      Coeff s = field.add(f.terms_[i].coeff, field.mul(g.terms_[j].coeff, neg_c));
      if (s != 0) out.push_back({s, f.terms_[i].monomial});
      ++i;
      ++j;
      gm_valid = false;
    }
  }
  return Polynomial(f.ring_, std::move(out), Polynomial::Canonical{});
}

Polynomial operator+(const Polynomial& f, const Polynomial& g) {
  check_same_ring(f, g);
  const auto& field = f.ring()->field();
  Monomial one(f.ring()->num_vars());
  return sub_mul_term(f, field.neg(1), one, g);
}

Polynomial operator-(const Polynomial& f, const Polynomial& g) {
  check_same_ring(f, g);
  Monomial one(f.ring()->num_vars());
  return sub_mul_term(f, 1, one, g);
}

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  check_same_ring(f, g);
  const auto& field = f.ring()->field();
  std::vector<Term> out;
  out.reserve(f.num_terms() * g.num_terms());
  for (const auto& a : f.terms()) {
    for (const auto& b : g.terms()) {
      out.push_back({field.mul(a.coeff, b.coeff), a.monomial * b.monomial});
    }
  }
  return Polynomial(f.ring(), std::move(out));
}

bool operator==(const Polynomial& f, const Polynomial& g) {
  return same_ring(f.ring(), g.ring()) && f.terms() == g.terms();
}

std::uint64_t frobenius_q(Coeff p, unsigned e) {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) {
    q *= p;
    if (q > kMaxExponent) {
      throw ExponentOverflow("p^" + std::to_string(e) +
                             " exceeds the exponent budget");
    }
  }
  return q;
}

}  // namespace ffor
