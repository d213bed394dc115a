#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "semideriv/errors.hpp"
#include "semideriv/semiring.hpp"

namespace semideriv {

/// First violated law together with the triple that exposed it.
struct AxiomViolation {
  std::string law;        // e.g. "additive idempotency"
  std::string statement;  // e.g. "1 ⊕ 1 ≠ 1"
  std::array<std::string, 3> witness;
};

struct AxiomReport {
  std::size_t triples_checked = 0;
  std::optional<AxiomViolation> violation;

  bool passed() const { return !violation.has_value(); }
};

namespace detail {

template <Semiring S>
std::optional<AxiomViolation> check_triple(const Elem<S>& a, const Elem<S>& b, const Elem<S>& c) {
  const auto f = [](const Elem<S>& x) { return S::format(x); };
  const auto violation = [&](std::string law, std::string statement) {
    return AxiomViolation{std::move(law), std::move(statement), {f(a), f(b), f(c)}};
  };
  const auto plus = [](const Elem<S>& x, const Elem<S>& y) { return S::plus(x, y); };
  const auto times = [](const Elem<S>& x, const Elem<S>& y) { return S::times(x, y); };
  const Elem<S> zero = S::zero();
  const Elem<S> one = S::one();

  if (!(plus(plus(a, b), c) == plus(a, plus(b, c)))) {
    return violation("additive associativity",
                     "(" + f(a) + " ⊕ " + f(b) + ") ⊕ " + f(c) + " ≠ " + f(a) + " ⊕ (" + f(b) + " ⊕ " + f(c) + ")");
  }
  if (!(plus(a, b) == plus(b, a))) {
    return violation("additive commutativity", f(a) + " ⊕ " + f(b) + " ≠ " + f(b) + " ⊕ " + f(a));
  }
  if (!(plus(a, a) == a)) {
    return violation("additive idempotency", f(a) + " ⊕ " + f(a) + " ≠ " + f(a));
  }
  if (!(plus(a, zero) == a) || !(plus(zero, a) == a)) {
    return violation("additive identity", f(a) + " ⊕ " + f(zero) + " ≠ " + f(a));
  }
  if (!(times(times(a, b), c) == times(a, times(b, c)))) {
    return violation("multiplicative associativity",
                     "(" + f(a) + " ⊙ " + f(b) + ") ⊙ " + f(c) + " ≠ " + f(a) + " ⊙ (" + f(b) + " ⊙ " + f(c) + ")");
  }
  if (!(times(a, one) == a) || !(times(one, a) == a)) {
    return violation("multiplicative identity", f(a) + " ⊙ " + f(one) + " ≠ " + f(a));
  }
  if (!(times(a, zero) == zero) || !(times(zero, a) == zero)) {
    return violation("zero absorption", f(a) + " ⊙ " + f(zero) + " ≠ " + f(zero));
  }
  if (!(times(a, plus(b, c)) == plus(times(a, b), times(a, c)))) {
    return violation("left distributivity", f(a) + " ⊙ (" + f(b) + " ⊕ " + f(c) + ") ≠ " + f(a) + " ⊙ " + f(b) +
                                                " ⊕ " + f(a) + " ⊙ " + f(c));
  }
  if (!(times(plus(b, c), a) == plus(times(b, a), times(c, a)))) {
    return violation("right distributivity", "(" + f(b) + " ⊕ " + f(c) + ") ⊙ " + f(a) + " ≠ " + f(b) + " ⊙ " +
                                                 f(a) + " ⊕ " + f(c) + " ⊙ " + f(a));
  }
  // Natural order: antisymmetry and transitivity.
  if (natural_leq<S>(a, b) && natural_leq<S>(b, a) && !(a == b)) {
    return violation("natural order antisymmetry", f(a) + " ≤ " + f(b) + " ≤ " + f(a) + " but " + f(a) + " ≠ " + f(b));
  }
  if (natural_leq<S>(a, b) && natural_leq<S>(b, c) && !natural_leq<S>(a, c)) {
    return violation("natural order transitivity", f(a) + " ≤ " + f(b) + " ≤ " + f(c) + " but not " + f(a) + " ≤ " + f(c));
  }
  return std::nullopt;
}

}  // namespace detail

/// Checks the additively idempotent semiring laws on the eight triples over
/// {0, 1} followed by `sample_count` pseudo-random triples drawn from
/// S::sample with the given seed. Stops at the first violation.
template <Semiring S>
AxiomReport check_axioms(std::size_t sample_count, std::uint64_t seed) {
  if (sample_count < 1) throw std::invalid_argument("check_axioms: sample_count must be at least 1");
  AxiomReport report;
  const Elem<S> corners[2] = {S::zero(), S::one()};
  for (unsigned bits = 0; bits < 8; ++bits) {
    ++report.triples_checked;
    report.violation = detail::check_triple<S>(corners[(bits >> 2) & 1], corners[(bits >> 1) & 1], corners[bits & 1]);
    if (report.violation) return report;
  }
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < sample_count; ++i) {
    const Elem<S> a = S::sample(rng);
    const Elem<S> b = S::sample(rng);
    const Elem<S> c = S::sample(rng);
    ++report.triples_checked;
    report.violation = detail::check_triple<S>(a, b, c);
    if (report.violation) return report;
  }
  return report;
}

}  // namespace semideriv
