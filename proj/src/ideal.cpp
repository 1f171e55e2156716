#include "ffor/ideal.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "ffor/error.hpp"

namespace ffor {

namespace {

void check_same(const Ideal& a, const Ideal& b) {
  if (!same_ring(a.ring(), b.ring())) {
    throw RingMismatch("ideals belong to different rings");
  }
}

void check_member_ring(const Polynomial& f, const QuotientRing& ring) {
  if (!same_ring(f.ring(), ring.ambient())) {
    throw RingMismatch("polynomial is not in the ambient ring of the ideal");
  }
}

// A name for the auxiliary variable that does not clash with the ring's.
std::string fresh_name(const std::vector<std::string>& taken,
                       const std::string& stem) {
  std::string name = stem;
  while (std::find(taken.begin(), taken.end(), name) != taken.end()) {
    name += '_';
  }
  return name;
}

}  // namespace

// ------------------------------------------------------------ QuotientRing

QuotientRing::QuotientRing(RingPtr ambient, std::vector<Polynomial> quotient_gens)
    : ambient_(std::move(ambient)),
      q_gens_(std::move(quotient_gens)),
      q_basis_(reduced_groebner_basis(q_gens_, ambient_)) {
  if (q_basis_.is_unit()) {
    throw std::invalid_argument("quotient ideal is the unit ideal");
  }
}

QuotientPtr QuotientRing::make(RingPtr ambient,
                               std::vector<Polynomial> quotient_gens) {
  if (ambient->order() != MonomialOrder::grevlex()) {
    throw std::invalid_argument("quotient ambient ring must use grevlex");
  }
  for (const auto& g : quotient_gens) {
    if (!same_ring(g.ring(), ambient)) {
      throw RingMismatch("quotient generator is not in the ambient ring");
    }
  }
  return QuotientPtr(new QuotientRing(std::move(ambient), std::move(quotient_gens)));
}

QuotientPtr QuotientRing::polynomial_ring(PrimeField field,
                                          std::vector<std::string> variables) {
  return make(PolyRing::make(field, std::move(variables)));
}

std::string QuotientRing::describe() const {
  std::string out = "F_" + std::to_string(characteristic()) + "[";
  for (std::size_t i = 0; i < num_vars(); ++i) {
    if (i > 0) out += ',';
    out += ambient_->variables()[i];
  }
  out += ']';
  if (!q_basis_.empty()) {
    out += "/(";
    bool first = true;
    for (const auto& g : q_gens_) {
      if (g.is_zero()) continue;
      if (!first) out += ", ";
      out += g.to_string();
      first = false;
    }
    out += ')';
  }
  return out;
}

bool QuotientRing::operator==(const QuotientRing& other) const {
  return same_ring(ambient_, other.ambient_) && q_basis_ == other.q_basis_;
}

bool same_ring(const QuotientPtr& a, const QuotientPtr& b) {
  return a == b || (a && b && *a == *b);
}

// ------------------------------------------------------------------ Ideal

Ideal::Ideal(QuotientPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)),
      gens_(std::move(generators)),
      cache_(std::make_shared<Cache>()) {
  for (const auto& g : gens_) check_member_ring(g, *ring_);
}

Ideal Ideal::unit(QuotientPtr ring) {
  Polynomial one = ring->constant(1);
  return Ideal(std::move(ring), {std::move(one)});
}

const GroebnerBasis& Ideal::basis() const {
  std::call_once(cache_->once, [this] {
    std::vector<Polynomial> lift = gens_;
    const auto& q = ring_->quotient_basis().generators();
    lift.insert(lift.end(), q.begin(), q.end());
    cache_->basis = std::make_unique<GroebnerBasis>(
        reduced_groebner_basis(lift, ring_->ambient()));
  });
  return *cache_->basis;
}

bool Ideal::contains(const Polynomial& f) const {
  check_member_ring(f, *ring_);
  return basis().contains(f);
}

bool Ideal::is_zero() const {
  return basis() == ring_->quotient_basis();
}

std::vector<Polynomial> Ideal::reduced_generators() const {
  std::vector<Polynomial> out;
  for (const auto& g : basis().generators()) {
    if (!ring_->quotient_basis().contains(g)) out.push_back(g);
  }
  return out;
}

std::vector<Polynomial> Ideal::minimal_generators() const {
  auto candidates = reduced_generators();
  // Try to drop high degree elements first; within a degree the smaller ones.
  std::vector<std::size_t> order(candidates.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    auto da = candidates[a].total_degree(), db = candidates[b].total_degree();
    return da != db ? da > db : a > b;
  });
  std::vector<bool> keep(candidates.size(), true);
  for (std::size_t i : order) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < candidates.size(); ++j) {
      if (j != i && keep[j]) others.push_back(candidates[j]);
    }
    if (Ideal(ring_, std::move(others)).contains(candidates[i])) keep[i] = false;
  }
  std::vector<Polynomial> kept;
  for (std::size_t j = 0; j < candidates.size(); ++j) {
    if (keep[j]) kept.push_back(candidates[j]);
  }
  return kept;
}

std::string Ideal::to_string() const {
  auto gens = minimal_generators();
  if (gens.empty()) return "[0]";
  std::string out = "[";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i > 0) out += ", ";
    out += gens[i].to_string();
  }
  return out + "]";
}

// ------------------------------------------------------------- operations

bool ideal_membership(const Polynomial& f, const Ideal& ideal) {
  return ideal.contains(f);
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
  check_same(a, b);
  return a.basis() == b.basis();
}

bool ideal_subset(const Ideal& a, const Ideal& b) {
  check_same(a, b);
  for (const auto& g : a.basis().generators()) {
    if (!b.basis().contains(g)) return false;
  }
  return true;
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  check_same(a, b);
  std::vector<Polynomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), std::move(gens));
}

std::vector<Polynomial> intersect_ambient(const RingPtr& ambient,
                                          std::span<const Polynomial> a,
                                          std::span<const Polynomial> b) {
  std::vector<std::string> names{fresh_name(ambient->variables(), "t")};
  names.insert(names.end(), ambient->variables().begin(),
               ambient->variables().end());
  RingPtr extended = PolyRing::make(ambient->field(), std::move(names),
                                    MonomialOrder::block(1));
  std::vector<int> shift(ambient->num_vars());
  for (std::size_t i = 0; i < shift.size(); ++i) shift[i] = static_cast<int>(i + 1);

  const Polynomial t = Polynomial::variable(extended, 0);
  const Polynomial one_minus_t = Polynomial::constant(extended, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : a) gens.push_back(t * f.mapped(extended, shift));
  for (const auto& g : b) gens.push_back(one_minus_t * g.mapped(extended, shift));
  if (gens.empty()) return {};
  return elimination_ideal(gens, 1, ambient);
}

Ideal ideal_intersect(const Ideal& a, const Ideal& b) {
  check_same(a, b);
  const auto& ambient = a.ring()->ambient();
  return Ideal(a.ring(), intersect_ambient(ambient, a.basis().generators(),
                                           b.basis().generators()));
}

Ideal ideal_intersect(std::span<const Ideal> ideals) {
  if (ideals.empty()) throw std::invalid_argument("intersection of no ideals");
  Ideal acc = ideals.front();
  for (std::size_t i = 1; i < ideals.size(); ++i) {
    acc = ideal_intersect(acc, ideals[i]);
  }
  return acc;
}

Ideal ideal_colon(const Ideal& ideal, const Polynomial& x) {
  check_member_ring(x, *ideal.ring());
  if (ideal.ring()->quotient_basis().contains(x)) return Ideal::unit(ideal.ring());
  // In S, (L : x) = (L ∩ (x)) / x, and L contains Q so this is the lift
  // of the colon in R.
  const auto& ambient = ideal.ring()->ambient();
  std::vector<Polynomial> principal{x};
  auto both = intersect_ambient(ambient, ideal.basis().generators(), principal);
  std::vector<Polynomial> gens;
  for (const auto& h : both) {
    auto q = divide_exact(h, x);
    if (!q) throw Error("internal: intersection generator not divisible by x");
    gens.push_back(std::move(*q));
  }
  return Ideal(ideal.ring(), std::move(gens));
}

Ideal ideal_colon(const Ideal& ideal, const Ideal& by) {
  check_same(ideal, by);
  std::vector<Ideal> parts;
  for (const auto& g : by.generators()) parts.push_back(ideal_colon(ideal, g));
  if (parts.empty()) return Ideal::unit(ideal.ring());
  return ideal_intersect(parts);
}

}  // namespace ffor
