// Compares the frustum formulas on the excavation from BM 85194 and on
// a few regular-polygon frustums.

#include "sexa/metrology.hpp"
#include "sexa/solid.hpp"
#include "sexa/solids.hpp"

#include <iomanip>
#include <iostream>

int main() {
  using namespace sexa;

  const SexRational depth = convert(parse_quantity("18 kus"), Unit::nindan()).value;
  const SquareFrustum pit{SexRational(10), SexRational(7), depth};
  const auto [mean_square, correction] = babylonian_terms(pit);

  std::cout << "square frustum a=10 b=7 h=" << format_sex(depth) << " nindan\n"
            << "  mean square " << format_sex(mean_square) << ", correction "
            << format_sex(correction) << '\n';
  for (const auto formula : {FrustumFormula::egyptian, FrustumFormula::babylonian}) {
    const Quantity v{*volume_of(pit, formula).exact, Unit::nindan3()};
    std::cout << "  " << (formula == FrustumFormula::egyptian ? "egyptian   " : "babylonian ")
              << format_quantity(convert(v, Unit::sar())) << '\n';
  }

  std::cout << "\nn-gon frustums with a=2 b=1 h=3\n" << std::setprecision(20);
  for (int n = 3; n <= 8; ++n) {
    const NgonFrustum f{n, SexRational(2), SexRational(1), SexRational(3)};
    const auto v = volume_frustum_ngon<Decimal50>(f);
    std::cout << "  n=" << n << "  " << v.value << (v.exact ? "  (exact " + format_sex(*v.exact) + ")" : "")
              << '\n';
  }
}
