// Acceptance suite: one PASS/FAIL line per criterion, each with its time
// limit. Exit status is non-zero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "semideriv/semideriv.hpp"

using namespace semideriv;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

using Clock = std::chrono::steady_clock;

bool run_criterion(int id, const char* title, double limit_seconds, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome outcome = body();
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  if (seconds >= limit_seconds) {
    outcome.fail("took " + std::to_string(seconds) + " s, limit " + std::to_string(limit_seconds) + " s");
  }
  std::printf("%s [%2d] %s (%.3f s, limit %.0f s)%s%s\n", outcome.ok ? "PASS" : "FAIL", id, title, seconds,
              limit_seconds, outcome.ok ? "" : ": ", outcome.detail.c_str());
  std::fflush(stdout);
  return outcome.ok;
}

MaxPlusValue finite_sample(std::mt19937_64& rng) {
  for (;;) {
    auto v = MaxPlus::sample(rng);
    if (v.is_finite()) return v;
  }
}

// ---------------------------------------------------------------------------

Outcome axioms() {
  Outcome out;
  const auto check = [&]<class S>(S) {
    const auto report = check_axioms<S>(10'000, 42);
    if (!report.passed()) out.fail(std::string(S::name) + ": " + report.violation->statement);
  };
  check(Boolean{});
  check(MaxPlus{});
  check(MinPlus{});
  check(Fuzzy{});
  return out;
}

Outcome selector_agreement() {
  Outcome out;
  std::mt19937_64 rng(2);
  for (std::size_t n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 200; ++trial) {
      const auto a = random_matrix<MaxPlus>(n, rng);
      for (std::size_t k = 1; k <= n; ++k) {
        const auto dk = dbar<MaxPlus>(n, k);
        const auto masked = delta_k(n, k)(a);
        if (!(masked == jordan(a, dk) && masked == dk * a)) out.fail("delta_k n=" + std::to_string(n) + " k=" + std::to_string(k));
        const auto dm = dunder<MaxPlus>(n, k);
        const auto kept = d_m(n, k)(a);
        if (!(kept == jordan(a, dm) && kept == a * dm)) out.fail("d_m n=" + std::to_string(n) + " m=" + std::to_string(k));
      }
    }
  }
  return out;
}

template <Semiring S>
void check_family_masks(std::size_t n, std::mt19937_64& rng, Outcome& out) {
  for (const auto& mask : enumerate_family_derivations(n)) {
    for (int pair = 0; pair < 50; ++pair) {
      const auto a = random_matrix<S>(n, rng);
      const auto b = random_matrix<S>(n, rng);
      if (auto w = leibniz_check<S>(mask, a, b)) {
        out.fail(std::string(S::name) + " leibniz Z=" + format_zero_set(mask) + " " + w->to_string());
      }
      if (auto w = linearity_check<S>(mask, a, b)) {
        out.fail(std::string(S::name) + " linearity Z=" + format_zero_set(mask) + " " + w->to_string());
      }
    }
  }
}

Outcome family_sufficiency() {
  Outcome out;
  std::mt19937_64 rng(3);
  for (std::size_t n = 2; n <= 6; ++n) {
    check_family_masks<MaxPlus>(n, rng, out);
    check_family_masks<Boolean>(n, rng, out);
  }
  return out;
}

Outcome counts() {
  Outcome out;
  for (std::size_t n = 1; n <= 10; ++n) {
    if (enumerate_interval_derivations(n).size() != n * (n + 1) / 2) out.fail("intervals n=" + std::to_string(n));
    if (enumerate_family_derivations(n).size() != (std::size_t{1} << n)) out.fail("families n=" + std::to_string(n));
  }
  return out;
}

Outcome composed_selectors() {
  Outcome out;
  for (std::size_t k = 1; k <= 3; ++k) {
    for (std::size_t m = 1; m <= 3; ++m) {
      const bool observed = !exhaustive_leibniz_check(compose(delta_k(3, k), d_m(3, m)), 3);
      if (observed != (k + m >= 3)) out.fail("boolean n=3 k=" + std::to_string(k) + " m=" + std::to_string(m));
    }
  }
  for (std::size_t n = 4; n <= 5; ++n) {
    std::vector<std::pair<UpperTriangular<MaxPlus>, UpperTriangular<MaxPlus>>> pairs;
    for (std::size_t t = 0; t < 1000; ++t) {
      std::mt19937_64 rng(1000 + t);
      auto a = random_matrix<MaxPlus>(n, rng);
      auto b = random_matrix<MaxPlus>(n, rng);
      pairs.emplace_back(std::move(a), std::move(b));
    }
    for (std::size_t k = 1; k <= n; ++k) {
      for (std::size_t m = 1; m <= n; ++m) {
        const auto f = compose(delta_k(n, k), d_m(n, m));
        bool witnessed = false;
        for (const auto& [a, b] : pairs) {
          if (leibniz_check<MaxPlus>(f, a, b)) {
            witnessed = true;
            break;
          }
        }
        if (witnessed == (k + m >= n)) {
          out.fail("maxplus n=" + std::to_string(n) + " k=" + std::to_string(k) + " m=" + std::to_string(m));
        }
      }
    }
  }
  return out;
}

Outcome counterexample() {
  Outcome out;
  UpperTriangular<MaxPlus> a(3), b(3);
  for (std::size_t i = 1; i <= 3; ++i) {
    for (std::size_t j = i; j <= 3; ++j) {
      a.set(i, j, MaxPlusValue(0));
      b.set(i, j, MaxPlusValue(0));
    }
  }
  a.set(1, 2, MaxPlusValue(5));
  b.set(2, 3, MaxPlusValue(5));
  const auto f = compose(delta_k(3, 1), d_m(3, 1));
  const auto lhs = f(a * b);
  const auto rhs = f(a) * b + a * f(b);
  if (!(lhs(1, 3) == MaxPlusValue(10))) out.fail("f(AB)_13 = " + MaxPlus::format(lhs(1, 3)));
  if (!(rhs(1, 3) == MaxPlusValue(0))) out.fail("(f(A)B + Af(B))_13 = " + MaxPlus::format(rhs(1, 3)));
  const auto w = leibniz_check<MaxPlus>(f, a, b);
  if (!w || w->row != 1 || w->col != 3) out.fail("witness is not at (1,3)");
  return out;
}

Outcome oracle() {
  Outcome out;
  const auto two = brute_force_classify(2);
  if (two.derivation_patterns.size() != 5 || two.interval_form != 4) out.fail("n=2 counts");
  const auto three = brute_force_classify(3);
  if (three.total_patterns != 64 || !three.agrees()) out.fail("n=3 disagrees with is_derivation_pattern");
  const auto contains = [&](const ZeroPattern& p) {
    for (const auto& q : three.derivation_patterns)
      if (q == p) return true;
    return false;
  };
  for (const auto& mask : enumerate_family_derivations(3))
    if (!contains(mask.pattern())) out.fail("missing Z=" + format_zero_set(mask));
  if (!contains(strip_diagonal(3))) out.fail("missing strip-diagonal pattern");
  if (out.ok) out.detail = "";
  return out;
}

Outcome strip_diagonal_sum() {
  Outcome out;
  std::mt19937_64 rng(8);
  for (std::size_t n = 2; n <= 8; ++n) {
    const auto strip = strip_diagonal(n);
    for (int trial = 0; trial < 100; ++trial) {
      const auto a = random_matrix<MaxPlus>(n, rng);
      UpperTriangular<MaxPlus> sum(n);
      for (std::size_t k = 1; k < n; ++k) sum = sum + d_m(n, n - k)(delta_k(n, k)(a));
      if (!(sum == strip(a))) out.fail("n=" + std::to_string(n));
    }
  }
  return out;
}

Outcome decomposition() {
  Outcome out;
  std::mt19937_64 rng(9);
  for (std::size_t n = 2; n <= 8; ++n) {
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<std::size_t> z;
      for (std::size_t i = 1; i <= n; ++i)
        if (rng() % 2) z.push_back(i);
      const MaskDerivation mask(n, z);
      const auto expr = decompose(mask);
      for (int m = 0; m < 20; ++m) {
        const auto a = random_matrix<MaxPlus>(n, rng);
        if (!(expr(a) == mask(a))) out.fail("Z=" + format_zero_set(mask) + " expr=" + expr.to_string(true));
      }
    }
  }
  return out;
}

Outcome scalar_suite() {
  Outcome out;
  std::mt19937_64 rng(10);
  for (int i = 0; i < 10'000; ++i) {
    const ShiftDerivation d(MaxPlus::sample(rng));
    const auto a = MaxPlus::sample(rng);
    const auto b = MaxPlus::sample(rng);
    if (!(d(MaxPlus::plus(a, b)) == MaxPlus::plus(d(a), d(b)))) out.fail("additivity");
    if (!(d(MaxPlus::times(a, b)) == MaxPlus::plus(MaxPlus::times(d(a), b), MaxPlus::times(a, d(b))))) {
      out.fail("scalar Leibniz");
    }
  }
  const ShiftDerivation identity(MaxPlusValue(0));
  for (int i = 0; i < 1000; ++i) {
    const ShiftDerivation x(finite_sample(rng)), y(finite_sample(rng)), z(finite_sample(rng));
    if (!(compose(compose(x, y), z) == compose(x, compose(y, z)))) out.fail("associativity");
    if (!(compose(x, y) == compose(y, x))) out.fail("commutativity");
    if (!(compose(identity, x) == x && compose(x, identity) == x)) out.fail("identity");
    if (!(compose(x, x.inverse()) == identity)) out.fail("inverse");
    if (!(x + x == x)) out.fail("sum idempotency");
  }
  for (std::size_t n = 1; n <= 5; ++n) {
    for (int trial = 0; trial < 500; ++trial) {
      const Hereditary f{ShiftDerivation(MaxPlus::sample(rng))};
      const auto a = random_matrix<MaxPlus>(n, rng);
      const auto b = random_matrix<MaxPlus>(n, rng);
      if (auto w = leibniz_check<MaxPlus>(f, a, b)) out.fail("hereditary n=" + std::to_string(n) + " " + w->to_string());
    }
  }
  return out;
}

Outcome sum_closure() {
  using Map = std::function<UpperTriangular<MaxPlus>(const UpperTriangular<MaxPlus>&)>;
  Outcome out;
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + trial % 4;
    const auto masks = enumerate_family_derivations(n);
    const auto draw = [&]() -> Map {
      if (rng() % 2 == 0) return masks[rng() % masks.size()];
      return Hereditary{ShiftDerivation(MaxPlus::sample(rng))};
    };
    const Map f = draw();
    const Map g = draw();
    const auto sum = pointwise_sum(f, g);
    for (int pair = 0; pair < 50; ++pair) {
      const auto a = random_matrix<MaxPlus>(n, rng);
      const auto b = random_matrix<MaxPlus>(n, rng);
      if (auto w = leibniz_check<MaxPlus>(sum, a, b)) out.fail("trial " + std::to_string(trial) + " " + w->to_string());
    }
  }
  return out;
}

}  // namespace

int main() {
  bool all = true;
  all &= run_criterion(1, "semiring axioms, 10000 triples per instance", 5, axioms);
  all &= run_criterion(2, "delta_k / d_m agree with Jordan products and selector products", 10, selector_agreement);
  all &= run_criterion(3, "every family mask is a derivation (max-plus and boolean)", 60, family_sufficiency);
  all &= run_criterion(4, "interval count n(n+1)/2 and family count 2^n, n = 1..10", 1, counts);
  all &= run_criterion(5, "delta_k d_m is a derivation iff k + m >= n", 120, composed_selectors);
  all &= run_criterion(6, "non-derivation composition witness at (1,3): 10 vs 0", 1, counterexample);
  all &= run_criterion(7, "brute-force oracle classification n = 2, 3", 120, oracle);
  all &= run_criterion(8, "strip-diagonal map equals sum of complementary products", 10, strip_diagonal_sum);
  all &= run_criterion(9, "decomposition evaluates to the mask", 60, decomposition);
  all &= run_criterion(10, "max-plus shift derivations and hereditary lift", 10, scalar_suite);
  all &= run_criterion(11, "sums of derivations stay derivations", 30, sum_closure);
  std::printf("%s\n", all ? "ALL ACCEPTANCE CRITERIA PASSED" : "SOME ACCEPTANCE CRITERIA FAILED");
  return all ? 0 : 1;
}
