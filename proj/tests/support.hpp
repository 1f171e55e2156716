#pragma once

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ffor/ideal.hpp"
#include "ffor/parse.hpp"

namespace ffor::testing {

inline std::vector<std::string> split_names(const std::string& vars) {
  std::vector<std::string> out;
  std::stringstream in(vars);
  std::string name;
  while (std::getline(in, name, ',')) out.push_back(name);
  return out;
}

inline RingPtr poly_ring(std::uint64_t p, const std::string& vars,
                         MonomialOrder order = MonomialOrder::grevlex()) {
  return PolyRing::make(PrimeField(p), split_names(vars), order);
}

inline QuotientPtr quotient(std::uint64_t p, const std::string& vars,
                            const std::string& q = "[]") {
  auto ambient = poly_ring(p, vars);
  return QuotientRing::make(ambient, parse_polynomial_list(q, ambient));
}

inline Polynomial poly(const QuotientPtr& r, const std::string& text) {
  return parse_polynomial(text, r->ambient());
}

inline Polynomial poly(const RingPtr& r, const std::string& text) {
  return parse_polynomial(text, r);
}

inline Ideal ideal(const QuotientPtr& r, const std::string& list) {
  return Ideal(r, parse_polynomial_list(list, r->ambient()));
}

inline std::vector<Polynomial> polys(const RingPtr& r, const std::string& list) {
  return parse_polynomial_list(list, r);
}

inline Polynomial random_poly(const RingPtr& r, std::mt19937_64& rng,
                              unsigned max_degree, unsigned max_terms) {
  const std::size_t n = r->num_vars();
  const Coeff p = r->field().characteristic();
  std::vector<Term> terms;
  unsigned count = static_cast<unsigned>(rng() % (max_terms + 1));
  for (unsigned t = 0; t < count; ++t) {
    Monomial m(n);
    unsigned budget = static_cast<unsigned>(rng() % (max_degree + 1));
    for (unsigned d = 0; d < budget; ++d) ++m[rng() % n];
    terms.push_back({static_cast<Coeff>(1 + rng() % (p - 1)), m});
  }
  return Polynomial(r, std::move(terms));
}

// Monomials of total degree <= d in n variables.
inline std::vector<Monomial> monomials_up_to(std::size_t n, unsigned d) {
  std::vector<Monomial> out{Monomial(n)};
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].degree() == d) continue;
    // Extend only at or after the last nonzero slot to avoid duplicates.
    std::size_t last = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (out[i][v] > 0) last = v;
    }
    for (std::size_t v = last; v < n; ++v) {
      Monomial m = out[i];
      ++m[v];
      out.push_back(m);
    }
  }
  return out;
}

// F_p-linear span of finitely many polynomials, by Gaussian elimination on
// coefficient vectors. Independent of any Groebner machinery.
class LinearSpan {
 public:
  explicit LinearSpan(PrimeField field) : field_(field) {}

  void add(const Polynomial& f) {
    auto v = reduce(to_vector(f));
    if (v.empty()) return;
    Coeff inv = field_.inv(v.begin()->second);
    for (auto& [m, c] : v) c = field_.mul(c, inv);
    pivots_.emplace(v.begin()->first, std::move(v));
  }

  bool contains(const Polynomial& f) const { return reduce(to_vector(f)).empty(); }
  std::size_t dimension() const { return pivots_.size(); }

 private:
  using Vec = std::map<Monomial, Coeff>;

  static Vec to_vector(const Polynomial& f) {
    Vec v;
    for (const auto& t : f.terms()) v[t.monomial] = t.coeff;
    return v;
  }

  Vec reduce(Vec v) const {
    for (;;) {
      auto it = std::find_if(v.begin(), v.end(),
                             [&](const auto& kv) { return pivots_.count(kv.first) > 0; });
      if (it == v.end()) return v;
      Coeff c = it->second;
      for (const auto& [m, pc] : pivots_.at(it->first)) {
        Coeff next = field_.sub(v[m], field_.mul(c, pc));
        if (next == 0) {
          v.erase(m);
        } else {
          v[m] = next;
        }
      }
    }
  }

  PrimeField field_;
  std::map<Monomial, Vec> pivots_;
};

// All m*g with deg(m*g) <= d: the degree-d truncation of the ideal's span.
inline LinearSpan truncated_ideal_span(const std::vector<Polynomial>& gens, unsigned d) {
  LinearSpan span(gens.front().ring()->field());
  const std::size_t n = gens.front().ring()->num_vars();
  for (const auto& g : gens) {
    if (g.is_zero() || g.total_degree() > d) continue;
    for (const auto& m : monomials_up_to(n, d - static_cast<unsigned>(g.total_degree()))) {
      span.add(g.mul_term(1, m));
    }
  }
  return span;
}

// The rings used throughout the test suite.
inline QuotientPtr dual_numbers() { return quotient(2, "x", "[x^2]"); }
inline QuotientPtr cusp() { return quotient(2, "x,y", "[y^2 + x^3]"); }
inline QuotientPtr node() { return quotient(2, "x,y", "[x*y]"); }
inline QuotientPtr plane(std::uint64_t p = 2) { return quotient(p, "x,y"); }
inline QuotientPtr counterexample() {
  return quotient(2, "x,y,z,w", "[x^3, x^2*z + y^2*w, x*y, y^3]");
}

}  // namespace ffor::testing
