#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "semideriv/errors.hpp"
#include "semideriv/semiring.hpp"

namespace semideriv {

/// Number of stored positions (i, j), i <= j, of an n×n upper-triangular matrix.
constexpr std::size_t triangle_size(std::size_t n) { return n * (n + 1) / 2; }

/// Row-major index of position (i, j) in packed triangular storage, 1-based.
constexpr std::size_t packed_index(std::size_t n, std::size_t i, std::size_t j) {
  return (i - 1) * (2 * n - i + 2) / 2 + (j - i);
}

/// n×n upper-triangular matrix over S. Only positions with i <= j exist, so
/// sums and products stay upper-triangular by construction. Indices are
/// 1-based throughout to match the usual (i, j) notation.
template <Semiring S>
class UpperTriangular {
 public:
  using semiring = S;
  using value_type = Elem<S>;

  /// The zero matrix of dimension n.
  explicit UpperTriangular(std::size_t n) : n_(n), entries_(triangle_size(n), S::zero()) {
    if (n == 0) throw ShapeError("matrix dimension must be at least 1");
  }

  static UpperTriangular identity(std::size_t n) {
    UpperTriangular m(n);
    for (std::size_t i = 1; i <= n; ++i) m.set(i, i, S::one());
    return m;
  }

  /// Matrix unit E_ij: one at (i, j), zero elsewhere.
  static UpperTriangular unit(std::size_t n, std::size_t i, std::size_t j) {
    UpperTriangular m(n);
    m.set(i, j, S::one());
    return m;
  }

  std::size_t size() const { return n_; }

  value_type operator()(std::size_t i, std::size_t j) const {
    check_position(i, j);
    return entries_[packed_index(n_, i, j)];
  }

  void set(std::size_t i, std::size_t j, value_type value) {
    check_position(i, j);
    entries_[packed_index(n_, i, j)] = std::move(value);
  }

  /// Row-major packed entries, (1,1), (1,2), ..., (n,n).
  const std::vector<value_type>& entries() const { return entries_; }

  friend bool operator==(const UpperTriangular& a, const UpperTriangular& b) {
    return a.n_ == b.n_ && a.entries_ == b.entries_;
  }

  friend UpperTriangular operator+(const UpperTriangular& a, const UpperTriangular& b) {
    check_same_shape(a, b, "matrix sum");
    UpperTriangular sum(a.n_);
    for (std::size_t p = 0; p < a.entries_.size(); ++p) sum.entries_[p] = S::plus(a.entries_[p], b.entries_[p]);
    return sum;
  }

  /// (AB)_ij = ⊕_{i <= k <= j} a_ik ⊙ b_kj.
  friend UpperTriangular operator*(const UpperTriangular& a, const UpperTriangular& b) {
    check_same_shape(a, b, "matrix product");
    const std::size_t n = a.n_;
    UpperTriangular product(n);
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = i; j <= n; ++j) {
        value_type acc = S::zero();
        for (std::size_t k = i; k <= j; ++k) {
          acc = S::plus(acc, S::times(a.entries_[packed_index(n, i, k)], b.entries_[packed_index(n, k, j)]));
        }
        product.entries_[packed_index(n, i, j)] = std::move(acc);
      }
    }
    return product;
  }

 private:
  void check_position(std::size_t i, std::size_t j) const {
    if (i < 1 || j > n_ || i > j) {
      throw ShapeError("position (" + std::to_string(i) + "," + std::to_string(j) +
                       ") is not in the upper triangle of a " + std::to_string(n_) + "x" + std::to_string(n_) +
                       " matrix");
    }
  }

  static void check_same_shape(const UpperTriangular& a, const UpperTriangular& b, const char* what) {
    if (a.n_ != b.n_) {
      throw ShapeError(std::string(what) + ": dimension mismatch " + std::to_string(a.n_) + " vs " +
                       std::to_string(b.n_));
    }
  }

  std::size_t n_;
  std::vector<value_type> entries_;
};

/// D̄_k = E_11 + ... + E_kk.
template <Semiring S>
UpperTriangular<S> dbar(std::size_t n, std::size_t k) {
  if (k < 1 || k > n) throw ShapeError("dbar: k=" + std::to_string(k) + " outside [1," + std::to_string(n) + "]");
  UpperTriangular<S> m(n);
  for (std::size_t i = 1; i <= k; ++i) m.set(i, i, S::one());
  return m;
}

/// D_m = E_{n-m+1,n-m+1} + ... + E_nn.
template <Semiring S>
UpperTriangular<S> dunder(std::size_t n, std::size_t m) {
  if (m < 1 || m > n) throw ShapeError("dunder: m=" + std::to_string(m) + " outside [1," + std::to_string(n) + "]");
  UpperTriangular<S> d(n);
  for (std::size_t i = n - m + 1; i <= n; ++i) d.set(i, i, S::one());
  return d;
}

/// Jordan product AB + BA (the addition is idempotent, so no halving).
template <Semiring S>
UpperTriangular<S> jordan(const UpperTriangular<S>& a, const UpperTriangular<S>& b) {
  return a * b + b * a;
}

/// Every stored entry drawn independently from S::sample.
template <Semiring S>
UpperTriangular<S> random_matrix(std::size_t n, std::mt19937_64& rng) {
  UpperTriangular<S> m(n);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i; j <= n; ++j) m.set(i, j, S::sample(rng));
  }
  return m;
}

}  // namespace semideriv
