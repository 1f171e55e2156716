#include "ffor/regularity.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "ffor/error.hpp"

namespace ffor {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::mt19937_64 stream_rng(std::uint64_t seed, std::uint64_t position,
                           std::uint64_t stream) {
  return std::mt19937_64(
      splitmix64(seed ^ splitmix64(position ^ splitmix64(stream + 0x51ed27ULL))));
}

// Uniform draw from [0, n); modulo keeps the sequence identical across
// standard library implementations.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

Polynomial draw_polynomial(const QuotientRing& ring, const SamplerConfig& config,
                           std::mt19937_64& rng) {
  const auto& ambient = ring.ambient();
  const std::size_t n = ambient->num_vars();
  const Coeff p = ring.characteristic();
  const std::uint64_t terms = 1 + draw(rng, std::max(1u, config.max_terms));
  std::vector<Term> out;
  for (std::uint64_t t = 0; t < terms; ++t) {
    Monomial m(n);
    const std::uint64_t degree = draw(rng, config.max_degree + 1ULL);
    if (n > 0) {
      for (std::uint64_t d = 0; d < degree; ++d) ++m[draw(rng, n)];
    }
    Coeff c = static_cast<Coeff>(1 + draw(rng, p - 1));
    out.push_back({c, std::move(m)});
  }
  return Polynomial(ambient, std::move(out));
}

std::optional<Witness> find_witness(const Ideal& lhs, const Ideal& rhs,
                                    std::vector<Ideal> ideals,
                                    std::optional<Polynomial> element, unsigned e) {
  auto first_outside = [](const Ideal& from, const Ideal& other)
      -> std::optional<Polynomial> {
    for (const auto& g : from.basis().generators()) {
      if (!other.contains(g)) return g;
    }
    return std::nullopt;
  };
  if (auto s = first_outside(lhs, rhs)) {
    return Witness{std::move(ideals), std::move(element), e, *s, Side::Lhs};
  }
  if (auto s = first_outside(rhs, lhs)) {
    return Witness{std::move(ideals), std::move(element), e, *s, Side::Rhs};
  }
  return std::nullopt;
}

CheckReport make_report(Identity identity, Ideal lhs, Ideal rhs,
                        std::vector<Ideal> ideals, std::optional<Polynomial> element,
                        unsigned e) {
  auto witness = find_witness(lhs, rhs, std::move(ideals), std::move(element), e);
  std::string ring = lhs.ring()->describe();
  Outcome outcome = witness ? Outcome::Fail : Outcome::Pass;
  return CheckReport{identity, std::move(ring), 1, outcome,
                     std::move(lhs), std::move(rhs), std::move(witness)};
}

Ideal principal(const QuotientPtr& ring, Polynomial f) {
  return Ideal(ring, {std::move(f)});
}

}  // namespace

std::string to_string(Identity identity) {
  switch (identity) {
    case Identity::IntersectionFamily: return "INTERSECTION_FAMILY";
    case Identity::PrincipalIntersection: return "PRINCIPAL_INTERSECTION";
    case Identity::Colon: return "COLON";
  }
  return "";
}

std::string to_string(Outcome outcome) {
  return outcome == Outcome::Pass ? "PASS" : "FAIL";
}

std::string to_string(Side side) { return side == Side::Lhs ? "LHS" : "RHS"; }

std::string to_string(JacobianVerdict verdict) {
  switch (verdict) {
    case JacobianVerdict::Regular: return "REGULAR";
    case JacobianVerdict::Singular: return "SINGULAR";
    case JacobianVerdict::Unsupported: return "UNSUPPORTED";
  }
  return "";
}

std::string to_string(ProbeOutcome outcome) {
  return outcome == ProbeOutcome::NotRegular ? "NOT_REGULAR" : "NO_WITNESS_FOUND";
}

CheckReport check_principal_intersection(const Ideal& ideal, const Polynomial& x,
                                         unsigned e) {
  const auto& ring = ideal.ring();
  Ideal lhs = ideal_intersect(bracket_power(ideal, e),
                              principal(ring, x.frobenius_power(e)));
  Ideal rhs = bracket_power(ideal_intersect(ideal, principal(ring, x)), e);
  return make_report(Identity::PrincipalIntersection, std::move(lhs),
                     std::move(rhs), {ideal}, x, e);
}

CheckReport check_colon(const Ideal& ideal, const Polynomial& x, unsigned e) {
  Ideal lhs = bracket_power(ideal_colon(ideal, x), e);
  Ideal rhs = ideal_colon(bracket_power(ideal, e), x.frobenius_power(e));
  return make_report(Identity::Colon, std::move(lhs), std::move(rhs), {ideal}, x, e);
}

CheckReport check_intersection_family(std::span<const Ideal> ideals, unsigned e) {
  if (ideals.size() < 2) {
    throw std::invalid_argument("intersection family needs at least two ideals");
  }
  Ideal lhs = bracket_power(ideal_intersect(ideals), e);
  std::vector<Ideal> powered;
  for (const auto& i : ideals) powered.push_back(bracket_power(i, e));
  Ideal rhs = ideal_intersect(powered);
  return make_report(Identity::IntersectionFamily, std::move(lhs), std::move(rhs),
                     std::vector<Ideal>(ideals.begin(), ideals.end()), std::nullopt, e);
}

bool reverify_witness(const CheckReport& report, std::uint64_t seed) {
  if (!report.witness) return false;
  const Witness& w = *report.witness;
  std::mt19937_64 rng(splitmix64(seed));

  const auto& old_ring = report.lhs.ring();
  std::vector<Polynomial> q = old_ring->quotient_generators();
  std::shuffle(q.begin(), q.end(), rng);
  QuotientPtr ring = QuotientRing::make(old_ring->ambient(), std::move(q));
  const auto& ambient = ring->ambient();
  const Coeff p = ring->characteristic();

  std::vector<Ideal> ideals;
  for (const auto& ideal : w.ideals) {
    std::vector<Polynomial> gens = ideal.generators();
    Polynomial redundant(ambient);
    for (const auto& g : gens) {
      Monomial m(ambient->num_vars());
      if (m.size() > 0) m[draw(rng, m.size())] = static_cast<std::uint32_t>(draw(rng, 2));
      redundant = redundant + g.mul_term(static_cast<Coeff>(draw(rng, p)), m);
    }
    gens.push_back(redundant);
    std::shuffle(gens.begin(), gens.end(), rng);
    ideals.emplace_back(ring, std::move(gens));
  }

  CheckReport again = [&] {
    switch (report.identity) {
      case Identity::PrincipalIntersection:
        return check_principal_intersection(ideals.front(), *w.element, w.e);
      case Identity::Colon:
        return check_colon(ideals.front(), *w.element, w.e);
      case Identity::IntersectionFamily:
        break;
    }
    return check_intersection_family(ideals, w.e);
  }();

  const bool in_lhs = again.lhs.contains(w.separator);
  const bool in_rhs = again.rhs.contains(w.separator);
  return w.side == Side::Lhs ? (in_lhs && !in_rhs) : (in_rhs && !in_lhs);
}

bool fedder_is_fpure(const QuotientPtr& ring) {
  QuotientPtr ambient_ring = QuotientRing::make(ring->ambient());
  const Coeff p = ring->characteristic();
  Ideal q(ambient_ring, ring->quotient_basis().generators());
  Ideal colon = ideal_colon(bracket_power(q, 1), q);

  std::vector<Polynomial> powers;
  for (std::size_t i = 0; i < ring->num_vars(); ++i) {
    powers.push_back(ambient_ring->variable(i).pow(p));
  }
  Ideal m_p(ambient_ring, std::move(powers));
  for (const auto& g : colon.basis().generators()) {
    if (!m_p.contains(g)) return true;
  }
  return false;
}

JacobianVerdict jacobian_regularity_oracle(const QuotientPtr& ring) {
  const auto& q = ring->quotient_basis().generators();
  if (q.empty()) return JacobianVerdict::Regular;
  if (q.size() > 1) return JacobianVerdict::Unsupported;
  const Polynomial& f = q.front();
  std::vector<Polynomial> gens{f};
  for (std::size_t i = 0; i < ring->num_vars(); ++i) gens.push_back(f.derivative(i));
  Ideal jacobian(QuotientRing::make(ring->ambient()), std::move(gens));
  return jacobian.is_unit() ? JacobianVerdict::Regular : JacobianVerdict::Singular;
}

Ideal sample_ideal(const QuotientPtr& ring, const SamplerConfig& config,
                   std::uint64_t position, std::uint64_t stream) {
  auto rng = stream_rng(config.seed, position, stream);
  const std::uint64_t count = 1 + draw(rng, std::max(1u, config.max_generators));
  std::vector<Polynomial> gens;
  for (std::uint64_t i = 0; i < count; ++i) {
    Polynomial f = draw_polynomial(*ring, config, rng);
    if (!f.is_zero()) gens.push_back(std::move(f));
  }
  return Ideal(ring, std::move(gens));
}

Polynomial sample_element(const QuotientPtr& ring, const SamplerConfig& config,
                          std::uint64_t position, std::uint64_t stream) {
  auto rng = stream_rng(config.seed, position, stream);
  return draw_polynomial(*ring, config, rng);
}

std::vector<StructuredCase> structured_family(const QuotientPtr& ring) {
  const std::size_t n = ring->num_vars();
  std::vector<Polynomial> sums;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j + 1; k < n; ++k) {
      sums.push_back(ring->variable(j) + ring->variable(k));
    }
  }
  std::vector<StructuredCase> cases;
  for (std::size_t i = 0; i < n; ++i) {
    Ideal single = principal(ring, ring->variable(i));
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) cases.push_back({single, ring->variable(j)});
    }
    for (const auto& s : sums) cases.push_back({single, s});
  }
  std::vector<Polynomial> all;
  for (std::size_t i = 0; i < n; ++i) all.push_back(ring->variable(i));
  Ideal maximal(ring, all);
  for (const auto& v : all) cases.push_back({maximal, v});
  for (const auto& s : sums) cases.push_back({maximal, s});
  return cases;
}

ProbeReport regularity_probe(const QuotientPtr& ring, const SamplerConfig& config,
                             std::vector<unsigned> e_list) {
  if (e_list.empty()) e_list = {1};
  ProbeReport report{ring->describe(), is_reduced(ring),
                     ProbeOutcome::NoWitnessFound, 0, 0, 0, e_list, config,
                     std::nullopt, ""};

  auto run = [&](const Ideal& ideal, const Polynomial& x) {
    for (unsigned e : report.e_list) {
      for (int which = 0; which < 2; ++which) {
        CheckReport r = which == 0 ? check_principal_intersection(ideal, x, e)
                                   : check_colon(ideal, x, e);
        ++report.checks_run;
        if (r.outcome == Outcome::Fail) {
          report.outcome = ProbeOutcome::NotRegular;
          report.witness = std::move(r);
          return true;
        }
      }
    }
    return false;
  };

  bool found = false;
  for (const auto& c : structured_family(ring)) {
    ++report.structured_checks;
    if ((found = run(c.ideal, c.element))) break;
  }
  for (std::size_t t = 0; !found && t < config.count; ++t) {
    ++report.sampled_trials;
    Ideal ideal = sample_ideal(ring, config, t, 0);
    Polynomial x = sample_element(ring, config, t, 1);
    found = run(ideal, x);
  }

  if (found) {
    report.note = "a failing identity certifies that the ring is not regular";
    if (!report.reduced) report.note += "; the ring is not reduced";
  } else if (!report.reduced) {
    report.note =
        "ring is not reduced: the intersection identities can hold on "
        "non-regular nonreduced rings, so passing checks say nothing about "
        "regularity";
  } else {
    report.note =
        "no witness within the search budget; this is not a proof of regularity";
  }
  return report;
}

ReducedRegularityReport reduced_regularity_pipeline(const QuotientPtr& ring,
                                                    unsigned e) {
  bool hold = true;
  for (const auto& c : structured_family(ring)) {
    if (check_principal_intersection(c.ideal, c.element, e).outcome == Outcome::Fail) {
      hold = false;
      break;
    }
  }
  QuotientPtr reduced = reduced_ring(ring);
  return {hold, fedder_is_fpure(reduced), reduced,
          jacobian_regularity_oracle(reduced)};
}

}  // namespace ffor
