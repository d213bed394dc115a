#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "semideriv/checks.hpp"
#include "semideriv/errors.hpp"
#include "semideriv/mask.hpp"
#include "semideriv/matrix.hpp"

namespace semideriv {

inline constexpr std::size_t kMaxMatrixEnumerationDimension = 4;
inline constexpr std::size_t kMaxClassifyDimension = 3;

/// All boolean n×n upper-triangular matrices, 2^(n(n+1)/2) of them. Matrix
/// number b has entry (i, j) set iff bit packed_index(n, i, j) of b is set.
inline std::vector<UpperTriangular<Boolean>> enumerate_matrices(std::size_t n) {
  if (n == 0) throw ShapeError("dimension must be at least 1");
  if (n > kMaxMatrixEnumerationDimension) {
    throw CapacityError("matrix enumeration is limited to n <= " + std::to_string(kMaxMatrixEnumerationDimension));
  }
  const std::size_t positions = triangle_size(n);
  std::vector<UpperTriangular<Boolean>> out;
  out.reserve(std::size_t{1} << positions);
  for (std::size_t bits = 0; bits < (std::size_t{1} << positions); ++bits) {
    UpperTriangular<Boolean> m(n);
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = i; j <= n; ++j) {
        if ((bits >> packed_index(n, i, j)) & 1) m.set(i, j, true);
      }
    }
    out.push_back(std::move(m));
  }
  return out;
}

/// A Leibniz failure found by exhaustive search, with the matrix pair.
struct ExhaustiveWitness {
  UpperTriangular<Boolean> a;
  UpperTriangular<Boolean> b;
  Witness<Boolean> where;
};

/// Checks the Leibniz rule for f on every boolean matrix pair of dimension n.
template <MatrixMap<Boolean> F>
std::optional<ExhaustiveWitness> exhaustive_leibniz_check(const F& f, std::size_t n) {
  if (n > kMaxClassifyDimension) {
    throw CapacityError("exhaustive checks are limited to n <= " + std::to_string(kMaxClassifyDimension));
  }
  const auto matrices = enumerate_matrices(n);
  for (const auto& a : matrices) {
    for (const auto& b : matrices) {
      if (auto w = leibniz_check<Boolean>(f, a, b)) return ExhaustiveWitness{a, b, *w};
    }
  }
  return std::nullopt;
}

struct OracleReport {
  std::size_t n = 0;
  std::size_t total_patterns = 0;
  /// Patterns passing Leibniz on every pair, in binary-counter order.
  std::vector<ZeroPattern> derivation_patterns;
  std::size_t interval_form = 0;
  std::size_t other = 0;
  /// Patterns where the exhaustive verdict differs from is_derivation_pattern.
  std::vector<ZeroPattern> disagreements;

  bool agrees() const { return disagreements.empty(); }
};

/// Classifies every zero pattern of dimension n by brute force over all
/// boolean matrix pairs. Pattern number b zeroes position (i, j) iff bit
/// packed_index(n, i, j) of b is set.
inline OracleReport brute_force_classify(std::size_t n) {
  if (n == 0) throw ShapeError("dimension must be at least 1");
  if (n > kMaxClassifyDimension) {
    throw CapacityError("oracle classification is limited to n <= " + std::to_string(kMaxClassifyDimension));
  }
  const auto matrices = enumerate_matrices(n);
  OracleReport report;
  report.n = n;
  report.total_patterns = std::size_t{1} << triangle_size(n);
  for (std::size_t bits = 0; bits < report.total_patterns; ++bits) {
    ZeroPattern p(n);
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = i; j <= n; ++j) {
        if ((bits >> packed_index(n, i, j)) & 1) p.insert(i, j);
      }
    }
    bool passes = true;
    for (std::size_t x = 0; x < matrices.size() && passes; ++x) {
      for (std::size_t y = 0; y < matrices.size() && passes; ++y) {
        passes = !leibniz_check<Boolean>(p, matrices[x], matrices[y]).has_value();
      }
    }
    if (passes != is_derivation_pattern(p)) report.disagreements.push_back(p);
    if (!passes) continue;
    if (as_mask_derivation(p)) {
      ++report.interval_form;
    } else {
      ++report.other;
    }
    report.derivation_patterns.push_back(std::move(p));
  }
  return report;
}

/// One line per derivation pattern, then the count summary.
inline std::string format_report(const OracleReport& report) {
  std::string out;
  for (const auto& p : report.derivation_patterns) {
    const auto mask = as_mask_derivation(p);
    out += "pattern=" + format_pattern(p) + (mask ? " form=interval Z=" + format_zero_set(*mask) : " form=other") +
           "\n";
  }
  for (const auto& p : report.disagreements) {
    out += "FAIL characterization disagrees on pattern=" + format_pattern(p) + "\n";
  }
  out += "total=" + std::to_string(report.derivation_patterns.size()) +
         " interval_form=" + std::to_string(report.interval_form) + " other=" + std::to_string(report.other) + "\n";
  return out;
}

}  // namespace semideriv
