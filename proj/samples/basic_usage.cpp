// Applies a few derivations to a 3x3 max-plus matrix and checks the Leibniz
// rule on a random pair.
#include <iostream>
#include <random>

#include "semideriv/semideriv.hpp"

using namespace semideriv;

int main() {
  const auto a = parse_matrix<MaxPlus>(
      "utm n=3 semiring=maxplus\n"
      "1 2 3\n"
      ". 4 5\n"
      ". . 6\n");

  std::cout << "A =\n" << format_matrix(a);
  std::cout << "delta_1(A) =\n" << format_matrix(delta_k(3, 1)(a));
  std::cout << "Z={2} applied =\n" << format_matrix(MaskDerivation(3, {2})(a));
  std::cout << "hereditary shift by 2 =\n" << format_matrix(hereditary_apply(ShiftDerivation(MaxPlusValue(2)), a));

  const MaskDerivation z(5, {2, 4, 5});
  std::cout << "Z=" << format_zero_set(z) << " decomposes as " << decompose(z).to_string() << "\n";

  std::mt19937_64 rng(7);
  const auto x = random_matrix<MaxPlus>(5, rng);
  const auto y = random_matrix<MaxPlus>(5, rng);
  const auto witness = leibniz_check<MaxPlus>(z, x, y);
  std::cout << "Leibniz on a random pair: " << (witness ? "FAIL " + witness->to_string() : "PASS") << "\n";

  const auto product = compose(delta_k(3, 1), d_m(3, 1));
  std::cout << "delta_1 then d_1 is a derivation: " << std::boolalpha << is_derivation_pattern(product) << "\n";
}
