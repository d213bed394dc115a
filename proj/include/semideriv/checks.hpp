#pragma once

#include <concepts>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>

#include "semideriv/errors.hpp"
#include "semideriv/matrix.hpp"

namespace semideriv {

/// A map UTM_n(S) -> UTM_n(S).
template <class F, class S>
concept MatrixMap = Semiring<S> && requires(const F& f, const UpperTriangular<S>& a) {
  { f(a) } -> std::convertible_to<UpperTriangular<S>>;
};

/// First (row-major) position where two sides of an identity disagree.
template <Semiring S>
struct Witness {
  std::size_t row = 0;
  std::size_t col = 0;
  Elem<S> lhs;
  Elem<S> rhs;

  std::string to_string() const {
    return "at (" + std::to_string(row) + "," + std::to_string(col) + "): lhs=" + S::format(lhs) +
           " rhs=" + S::format(rhs);
  }
};

template <Semiring S>
std::optional<Witness<S>> first_difference(const UpperTriangular<S>& lhs, const UpperTriangular<S>& rhs) {
  const std::size_t n = lhs.size();
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i; j <= n; ++j) {
      const auto l = lhs(i, j);
      const auto r = rhs(i, j);
      if (!(l == r)) return Witness<S>{i, j, l, r};
    }
  }
  return std::nullopt;
}

namespace detail {

template <Semiring S>
void check_pair(const UpperTriangular<S>& a, const UpperTriangular<S>& b) {
  if (a.size() != b.size()) {
    throw ShapeError("dimension mismatch " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
  }
}

}  // namespace detail

/// Compares f(AB) (lhs) with f(A)B + Af(B) (rhs). nullopt means the rule holds.
template <Semiring S, MatrixMap<S> F>
std::optional<Witness<S>> leibniz_check(const F& f, const UpperTriangular<S>& a, const UpperTriangular<S>& b) {
  detail::check_pair(a, b);
  return first_difference<S>(f(a * b), f(a) * b + a * f(b));
}

/// Compares f(A + B) (lhs) with f(A) + f(B) (rhs).
template <Semiring S, MatrixMap<S> F>
std::optional<Witness<S>> linearity_check(const F& f, const UpperTriangular<S>& a, const UpperTriangular<S>& b) {
  detail::check_pair(a, b);
  return first_difference<S>(f(a + b), f(a) + f(b));
}

/// (f + g)(A) = f(A) + g(A).
template <class F, class G>
auto pointwise_sum(F f, G g) {
  return [f = std::move(f), g = std::move(g)](const auto& a) { return f(a) + g(a); };
}

}  // namespace semideriv
