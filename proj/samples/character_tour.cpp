// Builds generators for Gamma0(13), evaluates one character on a product of them,
// and prints beta(13) together with the surjectivity verdict.

#include <iostream>

#include "gamma0/gamma0.hpp"

int main() {
  using namespace gamma0;
  const std::int64_t n = 13;
  const GeneratorSet gs = generators(n);
  std::cout << "Gamma0(" << n << "): r=" << gs.r() << " e2=" << gs.e2() << " e3=" << gs.e3() << '\n';

  const UniModular g = gs.free[0] * gs.elliptic3[0] * gs.elliptic2[1].inverse();
  const Word w = decompose(Gamma0Element(g, n), gs);
  std::cout << "element " << g << " has " << w.letters.size() << " letters, sign " << w.sign << '\n';

  const CharacterParams params(DirichletCharacter::from_id(n, 4), 5, {{13, Rational(1, 3)}});
  std::cout << "character value exponent: " << eval_character(params, Gamma0Element(g, n)) << '\n';

  std::cout << "beta(13) = " << beta(gs, n) << ", verdict " << to_string(verify_surjectivity(gs).verdict) << '\n';
}
