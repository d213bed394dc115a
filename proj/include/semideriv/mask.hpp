#pragma once

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "semideriv/errors.hpp"
#include "semideriv/matrix.hpp"

namespace semideriv {

using Position = std::pair<std::size_t, std::size_t>;

/// An arbitrary set of upper-triangular positions, read as the linear map
/// that replaces the entries at those positions with zero.
class ZeroPattern {
 public:
  explicit ZeroPattern(std::size_t n) : n_(n), zeroed_(triangle_size(n), false) {
    if (n == 0) throw ShapeError("pattern dimension must be at least 1");
  }

  ZeroPattern(std::size_t n, const std::vector<Position>& positions) : ZeroPattern(n) {
    for (const auto& [i, j] : positions) insert(i, j);
  }

  static ZeroPattern full(std::size_t n) {
    ZeroPattern p(n);
    std::fill(p.zeroed_.begin(), p.zeroed_.end(), true);
    return p;
  }

  std::size_t size() const { return n_; }

  bool contains(std::size_t i, std::size_t j) const {
    check_position(i, j);
    return zeroed_[packed_index(n_, i, j)];
  }

  void insert(std::size_t i, std::size_t j) {
    check_position(i, j);
    zeroed_[packed_index(n_, i, j)] = true;
  }

  bool empty() const { return std::none_of(zeroed_.begin(), zeroed_.end(), [](bool b) { return b; }); }

  /// Positions in row-major order.
  std::vector<Position> positions() const {
    std::vector<Position> out;
    for (std::size_t i = 1; i <= n_; ++i) {
      for (std::size_t j = i; j <= n_; ++j) {
        if (zeroed_[packed_index(n_, i, j)]) out.emplace_back(i, j);
      }
    }
    return out;
  }

  /// Map composition: a position is zeroed iff either factor zeroes it.
  friend ZeroPattern unite(const ZeroPattern& a, const ZeroPattern& b) {
    check_same_size(a.n_, b.n_);
    ZeroPattern out(a.n_);
    for (std::size_t p = 0; p < out.zeroed_.size(); ++p) out.zeroed_[p] = a.zeroed_[p] || b.zeroed_[p];
    return out;
  }

  /// Pointwise map sum: a position is zeroed iff both summands zero it.
  friend ZeroPattern intersect(const ZeroPattern& a, const ZeroPattern& b) {
    check_same_size(a.n_, b.n_);
    ZeroPattern out(a.n_);
    for (std::size_t p = 0; p < out.zeroed_.size(); ++p) out.zeroed_[p] = a.zeroed_[p] && b.zeroed_[p];
    return out;
  }

  friend bool operator==(const ZeroPattern&, const ZeroPattern&) = default;

  template <Semiring S>
  UpperTriangular<S> operator()(const UpperTriangular<S>& a) const {
    check_same_size(n_, a.size());
    UpperTriangular<S> out = a;
    for (std::size_t i = 1; i <= n_; ++i) {
      for (std::size_t j = i; j <= n_; ++j) {
        if (zeroed_[packed_index(n_, i, j)]) out.set(i, j, S::zero());
      }
    }
    return out;
  }

  static void check_same_size(std::size_t a, std::size_t b) {
    if (a != b) throw ShapeError("dimension mismatch " + std::to_string(a) + " vs " + std::to_string(b));
  }

 private:
  void check_position(std::size_t i, std::size_t j) const {
    if (i < 1 || j > n_ || i > j) {
      throw ShapeError("position (" + std::to_string(i) + "," + std::to_string(j) + ") outside the upper triangle");
    }
  }

  std::size_t n_;
  std::vector<bool> zeroed_;
};

/// A derivation that zeroes a family of pairwise disjoint principal dense
/// submatrices. Stored canonically as the set Z of diagonal indices it
/// zeroes; the family is the set of maximal runs of Z, and entry (r, c) is
/// zeroed iff every index in [r, c] lies in Z.
class MaskDerivation {
 public:
  /// The identity map on n×n matrices (Z = ∅).
  explicit MaskDerivation(std::size_t n) : n_(n), zero_(n, false) {
    if (n == 0) throw ShapeError("mask dimension must be at least 1");
  }

  MaskDerivation(std::size_t n, const std::vector<std::size_t>& zero_set) : MaskDerivation(n) {
    for (std::size_t i : zero_set) {
      if (i < 1 || i > n) {
        throw ShapeError("zero-set index " + std::to_string(i) + " outside [1," + std::to_string(n) + "]");
      }
      zero_[i - 1] = true;
    }
  }

  static MaskDerivation identity(std::size_t n) { return MaskDerivation(n); }

  static MaskDerivation zero_map(std::size_t n) {
    MaskDerivation d(n);
    std::fill(d.zero_.begin(), d.zero_.end(), true);
    return d;
  }

  std::size_t size() const { return n_; }

  bool in_zero_set(std::size_t i) const { return zero_.at(i - 1); }

  std::vector<std::size_t> zero_set() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 1; i <= n_; ++i) {
      if (zero_[i - 1]) out.push_back(i);
    }
    return out;
  }

  /// Maximal runs [first, last] of consecutive indices in Z, ascending.
  std::vector<std::pair<std::size_t, std::size_t>> blocks() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 1; i <= n_; ++i) {
      if (!zero_[i - 1]) continue;
      if (!out.empty() && out.back().second == i - 1) {
        out.back().second = i;
      } else {
        out.emplace_back(i, i);
      }
    }
    return out;
  }

  bool is_identity() const { return std::none_of(zero_.begin(), zero_.end(), [](bool b) { return b; }); }
  bool is_zero_map() const { return std::all_of(zero_.begin(), zero_.end(), [](bool b) { return b; }); }

  bool zeroes(std::size_t r, std::size_t c) const {
    for (std::size_t t = r; t <= c; ++t) {
      if (!zero_[t - 1]) return false;
    }
    return true;
  }

  ZeroPattern pattern() const {
    ZeroPattern p(n_);
    for (std::size_t r = 1; r <= n_; ++r) {
      for (std::size_t c = r; c <= n_ && zero_[c - 1]; ++c) p.insert(r, c);
    }
    return p;
  }

  template <Semiring S>
  UpperTriangular<S> operator()(const UpperTriangular<S>& a) const {
    ZeroPattern::check_same_size(n_, a.size());
    UpperTriangular<S> out = a;
    for (std::size_t r = 1; r <= n_; ++r) {
      for (std::size_t c = r; c <= n_ && zero_[c - 1]; ++c) out.set(r, c, S::zero());
    }
    return out;
  }

  friend bool operator==(const MaskDerivation&, const MaskDerivation&) = default;

  /// Pointwise sum; keeps an entry if either operand keeps it, so Z = Z1 ∩ Z2.
  friend MaskDerivation operator+(const MaskDerivation& a, const MaskDerivation& b) {
    ZeroPattern::check_same_size(a.n_, b.n_);
    MaskDerivation out(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i) out.zero_[i] = a.zero_[i] && b.zero_[i];
    return out;
  }

 private:
  std::size_t n_;
  std::vector<bool> zero_;
};

/// δ_k: keeps the first k rows. δ_0 is the zero map, δ_n the identity.
inline MaskDerivation delta_k(std::size_t n, std::size_t k) {
  if (k > n) throw ShapeError("delta_k: k=" + std::to_string(k) + " outside [0," + std::to_string(n) + "]");
  std::vector<std::size_t> z;
  for (std::size_t i = k + 1; i <= n; ++i) z.push_back(i);
  return MaskDerivation(n, z);
}

/// d_m: keeps the last m columns. d_0 is the zero map, d_n the identity.
inline MaskDerivation d_m(std::size_t n, std::size_t m) {
  if (m > n) throw ShapeError("d_m: m=" + std::to_string(m) + " outside [0," + std::to_string(n) + "]");
  std::vector<std::size_t> z;
  for (std::size_t i = 1; i + m <= n; ++i) z.push_back(i);
  return MaskDerivation(n, z);
}

/// Composition "apply first, then second". Zeroes a position iff either
/// factor does. The result is generally not of the form pattern(Z).
inline ZeroPattern compose(const MaskDerivation& first, const MaskDerivation& second) {
  return unite(first.pattern(), second.pattern());
}

/// Natural order of the idempotent operator sum: a <= b iff a + b == b,
/// i.e. Z_a ⊇ Z_b.
inline bool leq(const MaskDerivation& a, const MaskDerivation& b) {
  ZeroPattern::check_same_size(a.size(), b.size());
  for (std::size_t i = 1; i <= a.size(); ++i) {
    if (b.in_zero_set(i) && !a.in_zero_set(i)) return false;
  }
  return true;
}

/// Local characterization of mask maps satisfying the Leibniz rule. For every
/// (i, j) and every i <= k <= j: if (i, j) is zeroed then (i, k) and (k, j)
/// are zeroed; if (i, j) is kept then (i, k) or (k, j) is kept.
inline bool is_derivation_pattern(const ZeroPattern& p) {
  const std::size_t n = p.size();
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i; j <= n; ++j) {
      const bool zeroed = p.contains(i, j);
      for (std::size_t k = i; k <= j; ++k) {
        const bool left = p.contains(i, k);
        const bool right = p.contains(k, j);
        if (zeroed && !(left && right)) return false;
        if (!zeroed && left && right) return false;
      }
    }
  }
  return true;
}

/// The MaskDerivation whose pattern equals p, if there is one.
inline std::optional<MaskDerivation> as_mask_derivation(const ZeroPattern& p) {
  std::vector<std::size_t> z;
  for (std::size_t i = 1; i <= p.size(); ++i) {
    if (p.contains(i, i)) z.push_back(i);
  }
  MaskDerivation candidate(p.size(), z);
  if (candidate.pattern() == p) return candidate;
  return std::nullopt;
}

/// δ_k d_m is a derivation iff δ_k + d_m is the identity, i.e. k + m >= n.
inline bool composition_is_derivation(std::size_t n, std::size_t k, std::size_t m) {
  if (k < 1 || k > n || m < 1 || m > n) {
    throw ShapeError("k and m must lie in [1," + std::to_string(n) + "]");
  }
  return k + m >= n;
}

/// Zeroes the main diagonal only.
inline ZeroPattern strip_diagonal(std::size_t n) {
  ZeroPattern p(n);
  for (std::size_t i = 1; i <= n; ++i) p.insert(i, i);
  return p;
}

/// Single-block masks: the identity, then every interval Z = [a, a+s-1] for
/// s = 1 .. n-1 in order of s then a. The full interval (the zero map) is
/// left out, which gives n(n+1)/2 maps.
inline std::vector<MaskDerivation> enumerate_interval_derivations(std::size_t n) {
  if (n == 0) throw ShapeError("dimension must be at least 1");
  std::vector<MaskDerivation> out;
  out.reserve(triangle_size(n));
  out.emplace_back(n);
  for (std::size_t s = 1; s < n; ++s) {
    for (std::size_t first = 1; first + s - 1 <= n; ++first) {
      std::vector<std::size_t> z;
      for (std::size_t i = first; i < first + s; ++i) z.push_back(i);
      out.emplace_back(n, z);
    }
  }
  return out;
}

inline constexpr std::size_t kMaxFamilyDimension = 20;

/// One mask per subset Z ⊆ {1..n}, 2^n in total, ordered as a binary counter
/// with index i on bit i-1.
inline std::vector<MaskDerivation> enumerate_family_derivations(std::size_t n) {
  if (n == 0) throw ShapeError("dimension must be at least 1");
  if (n > kMaxFamilyDimension) {
    throw CapacityError("family enumeration is limited to n <= " + std::to_string(kMaxFamilyDimension));
  }
  std::vector<MaskDerivation> out;
  out.reserve(std::size_t{1} << n);
  for (std::size_t bits = 0; bits < (std::size_t{1} << n); ++bits) {
    std::vector<std::size_t> z;
    for (std::size_t i = 1; i <= n; ++i) {
      if ((bits >> (i - 1)) & 1) z.push_back(i);
    }
    out.emplace_back(n, z);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Text forms: zero sets "2,3,5" and patterns "1,1;2,2".

namespace detail {

inline std::size_t parse_index(std::string_view text, std::string_view context) {
  std::size_t value = 0;
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || end != text.data() + text.size()) {
    throw ParseError("invalid index '" + std::string(text) + "' in '" + std::string(context) + "'");
  }
  return value;
}

inline std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const auto end = text.find(sep, start);
    parts.push_back(text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return parts;
}

}  // namespace detail

/// Parses "2,3,5" (empty text is the empty set).
inline MaskDerivation parse_zero_set(std::size_t n, std::string_view text) {
  std::vector<std::size_t> z;
  if (!text.empty()) {
    for (auto part : detail::split(text, ',')) z.push_back(detail::parse_index(part, text));
  }
  for (std::size_t i : z) {
    if (i < 1 || i > n) {
      throw ParseError("zero-set index " + std::to_string(i) + " outside [1," + std::to_string(n) + "]");
    }
  }
  return MaskDerivation(n, z);
}

/// Parses "1,1;2,2" (empty text is the empty pattern).
inline ZeroPattern parse_pattern(std::size_t n, std::string_view text) {
  ZeroPattern p(n);
  if (text.empty()) return p;
  for (auto pair : detail::split(text, ';')) {
    const auto ij = detail::split(pair, ',');
    if (ij.size() != 2) throw ParseError("pattern entry '" + std::string(pair) + "' is not 'i,j'");
    const auto i = detail::parse_index(ij[0], text);
    const auto j = detail::parse_index(ij[1], text);
    if (i < 1 || j > n || i > j) {
      throw ParseError("pattern position (" + std::to_string(i) + "," + std::to_string(j) +
                       ") outside the upper triangle");
    }
    p.insert(i, j);
  }
  return p;
}

inline std::string format_zero_set(const MaskDerivation& d) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i : d.zero_set()) {
    if (!first) out += ',';
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

inline std::string format_pattern(const ZeroPattern& p) {
  std::string out = "{";
  bool first = true;
  for (const auto& [i, j] : p.positions()) {
    if (!first) out += ';';
    out += std::to_string(i) + "," + std::to_string(j);
    first = false;
  }
  return out + "}";
}

}  // namespace semideriv
