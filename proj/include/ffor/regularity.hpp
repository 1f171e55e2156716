#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ffor/frobenius.hpp"
#include "ffor/ideal.hpp"

namespace ffor {

enum class Identity {
  IntersectionFamily,     // (∩ I_i)^[q] = ∩ I_i^[q]
  PrincipalIntersection,  // I^[q] ∩ (x^q) = (I ∩ (x))^[q]
  Colon,                  // (I : x)^[q] = (I^[q] : x^q)
};

enum class Outcome { Pass, Fail };
enum class Side { Lhs, Rhs };

std::string to_string(Identity identity);
std::string to_string(Outcome outcome);
std::string to_string(Side side);

/// Certificate that the two sides of an identity differ: `separator` lies
/// in the ideal on `side` and not in the other one.
struct Witness {
  std::vector<Ideal> ideals;
  std::optional<Polynomial> element;
  unsigned e;
  Polynomial separator;
  Side side;
};

struct CheckReport {
  Identity identity;
  std::string ring;
  std::size_t trials;
  Outcome outcome;
  Ideal lhs;
  Ideal rhs;
  std::optional<Witness> witness;
};

CheckReport check_principal_intersection(const Ideal& ideal, const Polynomial& x,
                                         unsigned e);
CheckReport check_colon(const Ideal& ideal, const Polynomial& x, unsigned e);
/// Needs at least two ideals; intersections fold left to right.
CheckReport check_intersection_family(std::span<const Ideal> ideals, unsigned e);

/// Recomputes both sides from scratch after permuting every generator
/// list (seeded) and appending a redundant generator to each input ideal,
/// then checks the separator is in the tagged side only.
bool reverify_witness(const CheckReport& report, std::uint64_t seed);

/// Fedder's criterion at the origin: S/Q is F-pure there iff
/// (Q^[p] : Q) is not contained in m^[p], m = (x_1..x_n).
bool fedder_is_fpure(const QuotientPtr& ring);

enum class JacobianVerdict { Regular, Singular, Unsupported };
std::string to_string(JacobianVerdict verdict);

/// Jacobian criterion for hypersurfaces S/(f): regular iff
/// (f, df/dx_1, .., df/dx_n) is the unit ideal. Q = 0 is Regular; more
/// than one generator in the reduced basis of Q is Unsupported.
JacobianVerdict jacobian_regularity_oracle(const QuotientPtr& ring);

struct SamplerConfig {
  std::uint64_t seed = 1;
  unsigned max_degree = 3;
  unsigned max_terms = 3;
  unsigned max_generators = 2;
  std::size_t count = 200;
};

/// Deterministic in (seed, position, stream): at most max_generators
/// generators, each with at most max_terms terms of degree <= max_degree
/// and uniform nonzero coefficients.
Ideal sample_ideal(const QuotientPtr& ring, const SamplerConfig& config,
                   std::uint64_t position, std::uint64_t stream = 0);
/// One polynomial drawn like a single generator of sample_ideal.
Polynomial sample_element(const QuotientPtr& ring, const SamplerConfig& config,
                          std::uint64_t position, std::uint64_t stream = 0);

/// Inputs built from degree-1 data: I = (v) for each variable v and
/// I = (all variables), against x = each other variable and each sum of
/// two variables.
struct StructuredCase {
  Ideal ideal;
  Polynomial element;
};
std::vector<StructuredCase> structured_family(const QuotientPtr& ring);

enum class ProbeOutcome { NotRegular, NoWitnessFound };
std::string to_string(ProbeOutcome outcome);

struct ProbeReport {
  std::string ring;
  bool reduced;
  ProbeOutcome outcome;
  std::size_t structured_checks;
  std::size_t sampled_trials;
  std::size_t checks_run;
  std::vector<unsigned> e_list;
  SamplerConfig config;
  std::optional<CheckReport> witness;
  std::string note;
};

/// Runs the principal-intersection and colon checks over the structured
/// family and then `config.count` sampled (I, x) pairs, stopping at the
/// first failure. Regular rings satisfy every identity, so a failure
/// certifies non-regularity. No witness is not a proof of regularity,
/// and on a nonreduced ring passing identities carry no information.
ProbeReport regularity_probe(const QuotientPtr& ring, const SamplerConfig& config,
                             std::vector<unsigned> e_list = {1});

/// If the principal-intersection identity holds on the structured family
/// and R_red passes Fedder's test, R_red should be regular; this runs all
/// three steps and the Jacobian oracle on R_red.
struct ReducedRegularityReport {
  bool identities_hold;
  bool reduced_fpure;
  QuotientPtr reduced;
  JacobianVerdict reduced_jacobian;
};
ReducedRegularityReport reduced_regularity_pipeline(const QuotientPtr& ring,
                                                    unsigned e = 1);

}  // namespace ffor
