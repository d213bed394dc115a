#pragma once

#include "semideriv/errors.hpp"
#include "semideriv/matrix.hpp"
#include "semideriv/semiring.hpp"

namespace semideriv {

/// δ_x(a) = a ⊙ x on max-plus. δ_0 is the identity and δ_{-inf} the
/// constant -inf map.
class ShiftDerivation {
 public:
  explicit ShiftDerivation(MaxPlusValue x) : x_(std::move(x)) {}

  const MaxPlusValue& shift() const { return x_; }

  MaxPlusValue operator()(const MaxPlusValue& a) const { return MaxPlus::times(a, x_); }

  /// δ_{-x}; only finite shifts have an inverse.
  ShiftDerivation inverse() const {
    if (x_.is_infinite()) throw DomainError("δ_{-inf} has no compositional inverse");
    return ShiftDerivation(MaxPlusValue(-x_.value()));
  }

  /// δ_x ∘ δ_y = δ_{x ⊙ y}.
  friend ShiftDerivation compose(const ShiftDerivation& a, const ShiftDerivation& b) {
    return ShiftDerivation(MaxPlus::times(a.x_, b.x_));
  }

  /// Pointwise ⊕: δ_x + δ_y = δ_{x ⊕ y}.
  friend ShiftDerivation operator+(const ShiftDerivation& a, const ShiftDerivation& b) {
    return ShiftDerivation(MaxPlus::plus(a.x_, b.x_));
  }

  friend bool operator==(const ShiftDerivation&, const ShiftDerivation&) = default;

 private:
  MaxPlusValue x_;
};

/// Entrywise lift of a scalar shift to upper-triangular max-plus matrices.
struct Hereditary {
  ShiftDerivation scalar;

  UpperTriangular<MaxPlus> operator()(const UpperTriangular<MaxPlus>& a) const {
    UpperTriangular<MaxPlus> out(a.size());
    for (std::size_t i = 1; i <= a.size(); ++i) {
      for (std::size_t j = i; j <= a.size(); ++j) out.set(i, j, scalar(a(i, j)));
    }
    return out;
  }
};

inline UpperTriangular<MaxPlus> hereditary_apply(const ShiftDerivation& shift, const UpperTriangular<MaxPlus>& a) {
  return Hereditary{shift}(a);
}

}  // namespace semideriv
