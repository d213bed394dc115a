#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "semideriv/mask.hpp"

namespace semideriv {

/// One summand: δ_k, d_m, or the product δ_k·d_m (apply δ_k, then d_m).
/// Index 0 on either factor stands for the constant-zero map.
struct DecompositionTerm {
  std::optional<std::size_t> delta;
  std::optional<std::size_t> d;

  friend bool operator==(const DecompositionTerm&, const DecompositionTerm&) = default;
};

/// A pointwise sum of δ / d / δ·d terms over n×n matrices.
class DecompositionExpr {
 public:
  DecompositionExpr(std::size_t n, std::vector<DecompositionTerm> terms) : n_(n), terms_(std::move(terms)) {
    if (terms_.empty()) throw std::invalid_argument("decomposition needs at least one term");
    for (const auto& t : terms_) {
      if (!t.delta && !t.d) throw std::invalid_argument("decomposition term without factors");
      if ((t.delta && *t.delta > n) || (t.d && *t.d > n)) throw ShapeError("decomposition index exceeds n");
    }
  }

  std::size_t size() const { return n_; }
  const std::vector<DecompositionTerm>& terms() const { return terms_; }

  /// Zero pattern of the whole sum as a mask map.
  ZeroPattern pattern() const {
    ZeroPattern acc = ZeroPattern::full(n_);
    for (const auto& t : terms_) acc = intersect(acc, term_pattern(t));
    return acc;
  }

  template <Semiring S>
  UpperTriangular<S> operator()(const UpperTriangular<S>& a) const {
    std::optional<UpperTriangular<S>> sum;
    for (const auto& t : terms_) {
      UpperTriangular<S> value = a;
      if (t.delta) value = delta_k(n_, *t.delta)(value);
      if (t.d) value = d_m(n_, *t.d)(value);
      sum = sum ? *sum + value : value;
    }
    return *sum;
  }

  /// "δ1 + δ3·d2 + d1", or "delta1 + delta3*d2 + d1" with ascii = true.
  std::string to_string(bool ascii = false) const {
    const std::string delta = ascii ? "delta" : "δ";
    const std::string dot = ascii ? "*" : "·";
    std::string out;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (i > 0) out += " + ";
      const auto& t = terms_[i];
      if (t.delta) out += delta + std::to_string(*t.delta);
      if (t.delta && t.d) out += dot;
      if (t.d) out += "d" + std::to_string(*t.d);
    }
    return out;
  }

  friend bool operator==(const DecompositionExpr&, const DecompositionExpr&) = default;

 private:
  ZeroPattern term_pattern(const DecompositionTerm& t) const {
    ZeroPattern p(n_);
    if (t.delta) p = unite(p, delta_k(n_, *t.delta).pattern());
    if (t.d) p = unite(p, d_m(n_, *t.d).pattern());
    return p;
  }

  std::size_t n_;
  std::vector<DecompositionTerm> terms_;
};

/// Writes a family mask as a sum of δ / d / δ·d terms, one per maximal run
/// [p, q] of diagonal indices outside Z:
///   run starting at 1        -> δ_q
///   run ending at n          -> d_{n-p+1}
///   interior run             -> δ_q·d_{n-p+1}
/// The run [p, q] keeps exactly the entries (r, c) with r <= q and c >= p,
/// which is what δ_q·d_{n-p+1} keeps. When Z covers the whole diagonal the
/// single block gives δ_n·d_0, the zero map.
inline DecompositionExpr decompose(const MaskDerivation& mask) {
  const std::size_t n = mask.size();
  std::vector<DecompositionTerm> terms;
  std::size_t i = 1;
  while (i <= n) {
    if (mask.in_zero_set(i)) {
      ++i;
      continue;
    }
    const std::size_t first = i;
    while (i <= n && !mask.in_zero_set(i)) ++i;
    const std::size_t last = i - 1;
    if (first == 1) {
      terms.push_back({last, std::nullopt});
    } else if (last == n) {
      terms.push_back({std::nullopt, n - first + 1});
    } else {
      terms.push_back({last, n - first + 1});
    }
  }
  if (terms.empty()) terms.push_back({n, 0});
  return DecompositionExpr(n, std::move(terms));
}

}  // namespace semideriv
