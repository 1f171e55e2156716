#include "ffor/groebner.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "ffor/error.hpp"

namespace ffor {

namespace {

Polynomial reduce_by(const Polynomial& f,
                     std::span<const Polynomial* const> divisors) {
  const auto& field = f.ring()->field();
  std::vector<Term> remainder;
  Polynomial h = f;
  while (!h.is_zero()) {
    const Term& lt = h.leading_term();
    const Polynomial* reducer = nullptr;
    for (const Polynomial* g : divisors) {
      if (g->leading_monomial().divides(lt.monomial)) {
        reducer = g;
        break;
      }
    }
    if (reducer != nullptr) {
      Coeff c = field.div(lt.coeff, reducer->leading_coeff());
      Monomial m = lt.monomial.quotient(reducer->leading_monomial());
      h = sub_mul_term(h, c, m, *reducer);
    } else {
      remainder.push_back(lt);
      h = h.tail();
    }
  }
  return Polynomial(f.ring(), std::move(remainder));
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
  std::uint64_t degree;
};

// Becker-Weispfenning UPDATE with the Gebauer-Möller criteria. `active`
// holds indices into `polys` of the current basis; `h` is the new index.
void update(const std::vector<Polynomial>& polys, std::vector<std::size_t>& active,
            std::vector<Pair>& pairs, std::size_t h) {
  const Monomial& lm_h = polys[h].leading_monomial();

  std::vector<Pair> candidates;
  for (std::size_t g : active) {
    Monomial l = lcm(lm_h, polys[g].leading_monomial());
    std::uint64_t d = l.degree();
    candidates.push_back({g, h, std::move(l), d});
  }

  std::vector<Pair> kept;
  for (std::size_t a = 0; a < candidates.size(); ++a) {
    const Pair& c = candidates[a];
    bool keep = coprime(lm_h, polys[c.i].leading_monomial());
    if (!keep) {
      keep = true;
      for (std::size_t b = a + 1; b < candidates.size() && keep; ++b) {
        if (candidates[b].lcm.divides(c.lcm)) keep = false;
      }
      for (const Pair& d : kept) {
        if (!keep) break;
        if (d.lcm.divides(c.lcm)) keep = false;
      }
    }
    if (keep) kept.push_back(c);
  }

  std::vector<Pair> next;
  for (Pair& p : pairs) {
    bool drop = lm_h.divides(p.lcm) &&
                lcm(polys[p.i].leading_monomial(), lm_h) != p.lcm &&
                lcm(polys[p.j].leading_monomial(), lm_h) != p.lcm;
    if (!drop) next.push_back(std::move(p));
  }
  for (Pair& p : kept) {
    if (!coprime(lm_h, polys[p.i].leading_monomial())) next.push_back(std::move(p));
  }
  pairs = std::move(next);

  std::vector<std::size_t> remaining;
  for (std::size_t g : active) {
    if (!lm_h.divides(polys[g].leading_monomial())) remaining.push_back(g);
  }
  remaining.push_back(h);
  active = std::move(remaining);
}

std::vector<const Polynomial*> pointers(const std::vector<Polynomial>& polys,
                                        const std::vector<std::size_t>& idx) {
  std::vector<const Polynomial*> out;
  out.reserve(idx.size());
  for (std::size_t i : idx) out.push_back(&polys[i]);
  return out;
}

}  // namespace

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors) {
  std::vector<const Polynomial*> ptrs;
  for (const auto& g : divisors) {
    if (!same_ring(g.ring(), f.ring())) {
      throw RingMismatch("normal form against a basis from another ring");
    }
    if (!g.is_zero()) ptrs.push_back(&g);
  }
  return reduce_by(f, ptrs);
}

Polynomial GroebnerBasis::normal_form(const Polynomial& f) const {
  return ffor::normal_form(f, gens_);
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const auto& field = f.ring()->field();
  Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  Polynomial a = f.mul_term(field.inv(f.leading_coeff()),
                            l.quotient(f.leading_monomial()));
  return sub_mul_term(a, field.inv(g.leading_coeff()),
                      l.quotient(g.leading_monomial()), g);
}

GroebnerBasis reduced_groebner_basis(std::span<const Polynomial> gens,
                                     const RingPtr& ring) {
  std::vector<Polynomial> polys;
  std::vector<std::size_t> active;
  std::vector<Pair> pairs;

  auto insert = [&](const Polynomial& f) {
    Polynomial h = reduce_by(f, pointers(polys, active));
    if (h.is_zero()) return;
    polys.push_back(h.monic());
    update(polys, active, pairs, polys.size() - 1);
  };

  for (const auto& g : gens) insert(g.in_ring(ring));

  while (!pairs.empty()) {
    auto best = std::min_element(
        pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
          if (a.degree != b.degree) return a.degree < b.degree;
          if (a.j != b.j) return a.j < b.j;
          return a.i < b.i;
        });
    Pair p = std::move(*best);
    pairs.erase(best);
    insert(s_polynomial(polys[p.i], polys[p.j]));
  }

  // `active` is already minimal; inter-reduce the tails.
  std::vector<Polynomial> minimal;
  for (std::size_t i : active) minimal.push_back(polys[i]);
  std::vector<Polynomial> reduced;
  for (std::size_t a = 0; a < minimal.size(); ++a) {
    std::vector<const Polynomial*> others;
    for (std::size_t b = 0; b < minimal.size(); ++b) {
      if (b != a) others.push_back(&minimal[b]);
    }
    reduced.push_back(reduce_by(minimal[a], others).monic());
  }
  const auto& order = ring->order();
  std::sort(reduced.begin(), reduced.end(),
            [&](const Polynomial& f, const Polynomial& g) {
              return order.compare(f.leading_monomial(), g.leading_monomial()) > 0;
            });
  return GroebnerBasis(ring, std::move(reduced));
}

GroebnerBasis reduced_groebner_basis(std::span<const Polynomial> gens) {
  if (gens.empty()) {
    throw std::invalid_argument("empty generator list needs an explicit ring");
  }
  return reduced_groebner_basis(gens, gens.front().ring());
}

bool satisfies_buchberger_criterion(const GroebnerBasis& basis) {
  const auto& g = basis.generators();
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (!basis.normal_form(s_polynomial(g[i], g[j])).is_zero()) return false;
    }
  }
  return true;
}

std::vector<Polynomial> elimination_ideal(std::span<const Polynomial> gens,
                                          std::size_t k, RingPtr target) {
  if (gens.empty()) {
    if (!target) throw std::invalid_argument("empty generator list needs a target ring");
    return {};
  }
  const RingPtr& source = gens.front().ring();
  const std::size_t n = source->num_vars();
  if (k > n) throw std::invalid_argument("cannot eliminate more variables than exist");
  if (!target) {
    std::vector<std::string> names(source->variables().begin() + k,
                                   source->variables().end());
    target = PolyRing::make(source->field(), std::move(names));
  }
  if (target->num_vars() != n - k) {
    throw std::invalid_argument("elimination target has the wrong variable count");
  }

  RingPtr block = PolyRing::make(source->field(), source->variables(),
                                 MonomialOrder::block(k));
  GroebnerBasis basis = reduced_groebner_basis(gens, block);

  std::vector<int> var_map(n, -1);
  for (std::size_t i = k; i < n; ++i) var_map[i] = static_cast<int>(i - k);

  std::vector<Polynomial> out;
  for (const auto& g : basis.generators()) {
    bool free_of_block = std::all_of(
        g.terms().begin(), g.terms().end(), [&](const Term& t) {
          for (std::size_t i = 0; i < k; ++i) {
            if (t.monomial[i] != 0) return false;
          }
          return true;
        });
    if (free_of_block) out.push_back(g.mapped(target, var_map));
  }
  // The kept elements are a reduced basis for grevlex on the remaining
  // variables; re-sort for the target's order if it differs.
  if (target->order() != MonomialOrder::grevlex()) {
    return reduced_groebner_basis(out, target).generators();
  }
  return out;
}

std::optional<Polynomial> divide_exact(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw DivisionByZero();
  const auto& field = f.ring()->field();
  std::vector<Term> quotient;
  Polynomial h = f;
  while (!h.is_zero()) {
    if (!g.leading_monomial().divides(h.leading_monomial())) return std::nullopt;
    Coeff c = field.div(h.leading_coeff(), g.leading_coeff());
    Monomial m = h.leading_monomial().quotient(g.leading_monomial());
    h = sub_mul_term(h, c, m, g);
    quotient.push_back({c, std::move(m)});
  }
  return Polynomial(f.ring(), std::move(quotient));
}

}  // namespace ffor
