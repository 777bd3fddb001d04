// A short tour of the library: expand a fraction, list the length-2
// families for a numerator, and build the families over a fixed prefix.

#include <iostream>

#include "oddgreedy/oddgreedy.hpp"

int main() {
  using namespace oddgreedy;

  const Expansion e = odd_greedy_expand(Fraction{7, 15});
  std::cout << "7/15 =";
  for (const auto& x : e.denominators) std::cout << " 1/" << x.value();
  std::cout << '\n';

  std::cout << "\nlength-2 families with numerator 6:\n";
  for (const auto& f : length2_families(6, true)) {
    std::cout << "  r=" << f.witness.r.value() << "  " << to_string(f.family) << '\n';
  }

  const std::vector<OddInt> prefix{5, 9};
  const auto fam = prefix_family(prefix);
  std::cout << "\n[5, 9, x3] is greedy for odd x3 >= " << fam.b.value() << "; values "
            << to_string(fam.family) << '\n';
  for (int t = 0; t < 3; ++t) {
    std::cout << "  t=" << t << ": " << family_member(fam.family, t).reduced().str() << '\n';
  }

  const BiFamily two = two_step_family(std::vector<OddInt>{5});
  const XmPolynomial p = two.xm_polynomial();
  std::cout << "\n[5, x2, x3]: x2 = " << two.b.value() << "+2t1, x3 = " << p.constant << "+"
            << p.t1 << "t1+" << p.t1_squared << "t1^2+" << p.t2 << "t2\n";

  const OddInt w = construct_extremal_xm(std::vector<OddInt>{3}, Extreme::Upper);
  std::cout << "\ngcd(3 + x2, 3 x2) reaches 9 at x2 = " << w.value() << '\n';
}
