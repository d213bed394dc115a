#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <utility>

#include "semideriv/errors.hpp"
#include "semideriv/rational.hpp"

namespace semideriv {

/// A semiring given as a stateless policy type: carrier, the two operations,
/// their neutral elements, a literal syntax, and a sampler for randomized
/// checks. Elements of different policies have different C++ types, so mixing
/// operands of two semirings does not compile.
template <class S>
concept Semiring =
    std::equality_comparable<typename S::value_type> &&
    requires(const typename S::value_type& a, std::string_view text, std::mt19937_64& rng) {
      { S::name } -> std::convertible_to<std::string_view>;
      { S::zero() } -> std::same_as<typename S::value_type>;
      { S::one() } -> std::same_as<typename S::value_type>;
      { S::plus(a, a) } -> std::same_as<typename S::value_type>;
      { S::times(a, a) } -> std::same_as<typename S::value_type>;
      { S::parse(text) } -> std::same_as<typename S::value_type>;
      { S::format(a) } -> std::convertible_to<std::string>;
      { S::sample(rng) } -> std::same_as<typename S::value_type>;
    };

template <Semiring S>
using Elem = typename S::value_type;

/// Exact rational extended by a single infinite element. With
/// `PositiveInfinity == false` the extra element is -inf (the max-plus
/// bottom); otherwise it is +inf (the min-plus bottom).
template <bool PositiveInfinity>
class ExtendedRational {
 public:
  /// Default value is the infinite element.
  constexpr ExtendedRational() = default;
  explicit ExtendedRational(Rational value) : finite_(true), value_(value) {}
  explicit ExtendedRational(std::int64_t value) : finite_(true), value_(value) {}

  static ExtendedRational infinity() { return ExtendedRational{}; }

  bool is_finite() const { return finite_; }
  bool is_infinite() const { return !finite_; }

  /// Requires is_finite().
  const Rational& value() const { return value_; }

  friend bool operator==(const ExtendedRational& a, const ExtendedRational& b) {
    if (a.finite_ != b.finite_) return false;
    return !a.finite_ || a.value_ == b.value_;
  }

  friend std::strong_ordering operator<=>(const ExtendedRational& a, const ExtendedRational& b) {
    if (!a.finite_ || !b.finite_) {
      if (a.finite_ == b.finite_) return std::strong_ordering::equal;
      // Exactly one side is infinite.
      const bool a_is_inf = !a.finite_;
      if constexpr (PositiveInfinity) {
        return a_is_inf ? std::strong_ordering::greater : std::strong_ordering::less;
      } else {
        return a_is_inf ? std::strong_ordering::less : std::strong_ordering::greater;
      }
    }
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ == b.value_) return std::strong_ordering::equal;
    return std::strong_ordering::greater;
  }

  /// Ordinary addition; the infinite element absorbs.
  friend ExtendedRational operator+(const ExtendedRational& a, const ExtendedRational& b) {
    if (!a.finite_ || !b.finite_) return infinity();
    return ExtendedRational(a.value_ + b.value_);
  }

  static constexpr std::string_view infinity_literal() { return PositiveInfinity ? "+inf" : "-inf"; }

  std::string to_string() const {
    return finite_ ? format_rational(value_) : std::string(infinity_literal());
  }

  static ExtendedRational parse(std::string_view text) {
    if (text == infinity_literal()) return infinity();
    if (!PositiveInfinity && text == "+inf") throw ParseError("+inf is not an element of max-plus");
    if (PositiveInfinity && text == "-inf") throw ParseError("-inf is not an element of min-plus");
    return ExtendedRational(parse_rational(text));
  }

 private:
  bool finite_ = false;
  Rational value_{0};
};

using MaxPlusValue = ExtendedRational<false>;
using MinPlusValue = ExtendedRational<true>;

/// Exact rational in [0, 1].
class FuzzyValue {
 public:
  constexpr FuzzyValue() = default;
  explicit FuzzyValue(Rational value) : value_(value) {
    if (value < 0 || value > 1) {
      throw DomainError("fuzzy value " + format_rational(value) + " outside [0,1]");
    }
  }
  explicit FuzzyValue(std::int64_t num, std::int64_t den = 1) : FuzzyValue(Rational(num, den)) {}

  const Rational& value() const { return value_; }

  friend bool operator==(const FuzzyValue& a, const FuzzyValue& b) { return a.value_ == b.value_; }
  friend bool operator<(const FuzzyValue& a, const FuzzyValue& b) { return a.value_ < b.value_; }

 private:
  Rational value_{0};
};

// ---------------------------------------------------------------------------
// Shipped instances

/// ({0,1}, OR, AND).
struct Boolean {
  using value_type = bool;
  static constexpr std::string_view name = "boolean";

  static bool zero() { return false; }
  static bool one() { return true; }
  static bool plus(bool a, bool b) { return a || b; }
  static bool times(bool a, bool b) { return a && b; }

  static bool parse(std::string_view text) {
    if (text == "0") return false;
    if (text == "1") return true;
    throw ParseError("invalid boolean literal '" + std::string(text) + "'");
  }
  static std::string format(bool a) { return a ? "1" : "0"; }
  static bool sample(std::mt19937_64& rng) { return std::uniform_int_distribution<int>(0, 1)(rng) == 1; }
};

/// (Q ∪ {-inf}, max, +).
struct MaxPlus {
  using value_type = MaxPlusValue;
  static constexpr std::string_view name = "maxplus";

  static MaxPlusValue zero() { return MaxPlusValue::infinity(); }
  static MaxPlusValue one() { return MaxPlusValue(0); }
  static MaxPlusValue plus(const MaxPlusValue& a, const MaxPlusValue& b) { return a < b ? b : a; }
  static MaxPlusValue times(const MaxPlusValue& a, const MaxPlusValue& b) { return a + b; }

  static MaxPlusValue parse(std::string_view text) { return MaxPlusValue::parse(text); }
  static std::string format(const MaxPlusValue& a) { return a.to_string(); }

  /// Integer in [-20, 20], or -inf with probability 1/20.
  static MaxPlusValue sample(std::mt19937_64& rng) {
    if (std::uniform_int_distribution<int>(0, 99)(rng) < 5) return zero();
    return MaxPlusValue(std::uniform_int_distribution<std::int64_t>(-20, 20)(rng));
  }
};

/// (Q ∪ {+inf}, min, +).
struct MinPlus {
  using value_type = MinPlusValue;
  static constexpr std::string_view name = "minplus";

  static MinPlusValue zero() { return MinPlusValue::infinity(); }
  static MinPlusValue one() { return MinPlusValue(0); }
  static MinPlusValue plus(const MinPlusValue& a, const MinPlusValue& b) { return b < a ? b : a; }
  static MinPlusValue times(const MinPlusValue& a, const MinPlusValue& b) { return a + b; }

  static MinPlusValue parse(std::string_view text) { return MinPlusValue::parse(text); }
  static std::string format(const MinPlusValue& a) { return a.to_string(); }

  static MinPlusValue sample(std::mt19937_64& rng) {
    if (std::uniform_int_distribution<int>(0, 99)(rng) < 5) return zero();
    return MinPlusValue(std::uniform_int_distribution<std::int64_t>(-20, 20)(rng));
  }
};

/// ([0,1] ∩ Q, max, min).
struct Fuzzy {
  using value_type = FuzzyValue;
  static constexpr std::string_view name = "fuzzy";

  static FuzzyValue zero() { return FuzzyValue(0); }
  static FuzzyValue one() { return FuzzyValue(1); }
  static FuzzyValue plus(const FuzzyValue& a, const FuzzyValue& b) { return a < b ? b : a; }
  static FuzzyValue times(const FuzzyValue& a, const FuzzyValue& b) { return a < b ? a : b; }

  static FuzzyValue parse(std::string_view text) {
    const Rational r = parse_rational(text);
    if (r < 0 || r > 1) throw ParseError("fuzzy literal '" + std::string(text) + "' outside [0,1]");
    return FuzzyValue(r);
  }
  static std::string format(const FuzzyValue& a) { return format_rational(a.value()); }

  /// k/16 for k uniform in [0, 16].
  static FuzzyValue sample(std::mt19937_64& rng) {
    return FuzzyValue(std::uniform_int_distribution<std::int64_t>(0, 16)(rng), 16);
  }
};

/// Natural order of an idempotent addition: a <= b iff a ⊕ b == b.
template <Semiring S>
bool natural_leq(const Elem<S>& a, const Elem<S>& b) {
  return S::plus(a, b) == b;
}

/// Invokes `fn(S{})` for the shipped semiring called `name`.
/// Throws DomainError for an unknown name.
template <class F>
decltype(auto) dispatch_semiring(std::string_view name, F&& fn) {
  if (name == Boolean::name) return std::forward<F>(fn)(Boolean{});
  if (name == MaxPlus::name) return std::forward<F>(fn)(MaxPlus{});
  if (name == MinPlus::name) return std::forward<F>(fn)(MinPlus{});
  if (name == Fuzzy::name) return std::forward<F>(fn)(Fuzzy{});
  throw DomainError("unknown semiring '" + std::string(name) + "' (expected boolean|maxplus|minplus|fuzzy)");
}

}  // namespace semideriv
