#include "ffor/frobenius.hpp"

#include <algorithm>
#include <map>

#include "ffor/error.hpp"

namespace ffor {

namespace {

std::string fresh_name(const std::vector<std::string>& taken, std::string name) {
  while (std::find(taken.begin(), taken.end(), name) != taken.end()) name += '\'';
  return name;
}

// All monomials in n variables of total degree <= d, ascending by degree.
std::vector<Monomial> monomials_up_to(std::size_t n, unsigned d) {
  std::vector<Monomial> out;
  for (unsigned deg = 0; deg <= d; ++deg) {
    std::vector<std::uint32_t> e(n, 0);
    auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
      if (n == 0) {
        if (left == 0) out.emplace_back(e);
        return;
      }
      if (i + 1 == n) {
        e[i] = left;
        out.emplace_back(e);
        return;
      }
      for (unsigned k = left + 1; k-- > 0;) {
        e[i] = k;
        self(self, i + 1, left - k);
      }
      e[i] = 0;
    };
    rec(rec, 0, deg);
  }
  return out;
}

}  // namespace

Ideal bracket_power(const Ideal& ideal, unsigned e) {
  if (e == 0) return ideal;
  std::vector<Polynomial> gens;
  gens.reserve(ideal.generators().size());
  for (const auto& g : ideal.generators()) gens.push_back(g.frobenius_power(e));
  return Ideal(ideal.ring(), std::move(gens));
}

Ideal frobenius_root(const Ideal& ideal, unsigned e) {
  if (!ideal.ring()->is_polynomial_ring()) {
    throw UnsupportedOperation(
        "Frobenius roots are only available in polynomial rings");
  }
  if (e == 0) return ideal;
  const auto& ring = ideal.ring()->ambient();
  const std::uint64_t q = frobenius_q(ring->field().characteristic(), e);
  const std::size_t n = ring->num_vars();

  std::vector<Polynomial> roots;
  for (const auto& f : ideal.generators()) {
    std::map<Monomial, std::vector<Term>> parts;
    for (const auto& t : f.terms()) {
      Monomial base(n), rest(n);
      for (std::size_t i = 0; i < n; ++i) {
        base[i] = static_cast<std::uint32_t>(t.monomial[i] / q);
        rest[i] = static_cast<std::uint32_t>(t.monomial[i] % q);
      }
      parts[rest].push_back({t.coeff, std::move(base)});
    }
    for (auto& [rest, terms] : parts) roots.emplace_back(ring, std::move(terms));
  }
  return Ideal(ideal.ring(), std::move(roots));
}

Ideal frobenius_kernel_preimage(const Ideal& ideal) {
  const auto& ambient = ideal.ring()->ambient();
  const std::size_t n = ambient->num_vars();
  const Coeff p = ambient->field().characteristic();

  // Variables: an auxiliary copy x_i (eliminated), then the originals y_i.
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(fresh_name(ambient->variables(), "_e" + std::to_string(i)));
  }
  names.insert(names.end(), ambient->variables().begin(), ambient->variables().end());
  RingPtr extended =
      PolyRing::make(ambient->field(), std::move(names), MonomialOrder::block(n));

  std::vector<int> to_primed(n);
  for (std::size_t i = 0; i < n; ++i) to_primed[i] = static_cast<int>(i);

  std::vector<Polynomial> gens;
  for (const auto& g : ideal.basis().generators()) {
    gens.push_back(g.mapped(extended, to_primed));
  }
  for (std::size_t i = 0; i < n; ++i) {
    Monomial xp(2 * n);
    xp[i] = p;
    gens.push_back(Polynomial::variable(extended, n + i) -
                   Polynomial::term(extended, 1, std::move(xp)));
  }
  return Ideal(ideal.ring(), elimination_ideal(gens, n, ambient));
}

NilradicalResult nilradical_char_p(const QuotientPtr& ring) {
  Ideal current = Ideal::zero(ring);
  unsigned steps = 0;
  for (;;) {
    Ideal next = frobenius_kernel_preimage(current);
    if (ideal_equal(next, current)) break;
    current = std::move(next);
    ++steps;
  }
  return {current, steps, frobenius_q(ring->characteristic(), steps)};
}

bool is_reduced(const QuotientPtr& ring) {
  Ideal zero = Ideal::zero(ring);
  return ideal_equal(frobenius_kernel_preimage(zero), zero);
}

QuotientPtr reduced_ring(const QuotientPtr& ring) {
  auto nil = nilradical_char_p(ring);
  return QuotientRing::make(ring->ambient(), nil.radical.basis().generators());
}

bool frobenius_closure_holds_at(const Polynomial& x, const Ideal& ideal, unsigned e) {
  return bracket_power(ideal, e).contains(x.frobenius_power(e));
}

ClosureResult frobenius_closure_test(const Polynomial& x, const Ideal& ideal,
                                     unsigned e_max) {
  for (unsigned e = 0; e <= e_max; ++e) {
    if (frobenius_closure_holds_at(x, ideal, e)) return {true, e};
  }
  return {false, std::nullopt};
}

ClosednessVerdict is_frobenius_closed(const Ideal& ideal, unsigned e_max,
                                      unsigned degree_bound,
                                      std::size_t exhaustive_limit) {
  const auto& ring = ideal.ring()->ambient();
  const auto& field = ring->field();
  const Coeff p = field.characteristic();
  const auto& basis = ideal.basis();

  std::vector<Monomial> standard;
  for (auto& m : monomials_up_to(ring->num_vars(), degree_bound)) {
    bool divisible = std::any_of(
        basis.generators().begin(), basis.generators().end(),
        [&](const Polynomial& g) { return g.leading_monomial().divides(m); });
    if (!divisible) standard.push_back(std::move(m));
  }

  std::vector<Ideal> brackets;
  for (unsigned e = 0; e <= e_max; ++e) brackets.push_back(bracket_power(ideal, e));

  ClosednessVerdict verdict{ClosednessVerdict::Kind::ClosedUpToBounds,
                            std::nullopt, std::nullopt, 0};
  // x is not in I, so e = 0 never witnesses.
  auto test = [&](const Polynomial& x) {
    ++verdict.candidates_checked;
    for (unsigned e = 1; e <= e_max; ++e) {
      if (brackets[e].contains(x.frobenius_power(e))) {
        verdict = {ClosednessVerdict::Kind::NotClosed, x, e,
                   verdict.candidates_checked};
        return true;
      }
    }
    return false;
  };

  for (const auto& m : standard) {
    if (test(Polynomial::term(ring, 1, m))) return verdict;
  }

  const std::size_t k = standard.size();
  // Number of monic combinations with first nonzero coefficient 1.
  long double combos = 0;
  for (std::size_t i = 0; i < k; ++i) combos = combos * p + 1;
  if (combos <= static_cast<long double>(exhaustive_limit)) {
    for (std::size_t lead = 0; lead < k; ++lead) {
      // Coefficients of standard[lead+1 ..], each in [0, p).
      const std::size_t rest = k - lead - 1;
      std::vector<Coeff> digits(rest, 0);
      for (;;) {
        std::size_t i = 0;
        while (i < rest && digits[i] == p - 1) digits[i++] = 0;
        if (i == rest) break;
        ++digits[i];
        std::vector<Term> terms{{1, standard[lead]}};
        for (std::size_t j = 0; j < rest; ++j) {
          if (digits[j] != 0) terms.push_back({digits[j], standard[lead + 1 + j]});
        }
        if (test(Polynomial(ring, std::move(terms)))) return verdict;
      }
    }
  } else {
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = a + 1; b < k; ++b) {
        for (Coeff c = 1; c < p; ++c) {
          Polynomial x(ring, {{1, standard[a]}, {c, standard[b]}});
          if (test(x)) return verdict;
        }
      }
    }
  }
  return verdict;
}

}  // namespace ffor
