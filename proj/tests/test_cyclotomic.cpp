#include <doctest.h>

#include "bredon/cyclotomic.hpp"

using bredon::Cyclotomic;
using bredon::Rational;

TEST_CASE("rational embedding and arithmetic") {
  Cyclotomic a(Rational(1, 2)), b(Rational(1, 3));
  CHECK((a + b).rational_value() == Rational(5, 6));
  CHECK((a * b).rational_value() == Rational(1, 6));
  CHECK((a - a).is_zero());
  CHECK(Cyclotomic(3).is_integer());
  CHECK_FALSE(a.is_integer());
}

TEST_CASE("roots of unity reduce to canonical conductor") {
  auto z6 = Cyclotomic::root_of_unity(6, 1);
  CHECK(z6.conductor() == 3);  // Q(zeta_6) = Q(zeta_3)
  auto z4sq = Cyclotomic::root_of_unity(4, 2);
  CHECK(z4sq == Cyclotomic(-1));
  CHECK(Cyclotomic::root_of_unity(5, 0) == Cyclotomic(1));
  CHECK(Cyclotomic::root_of_unity(2, 1) == Cyclotomic(-1));
}

TEST_CASE("sum of all n-th roots of unity vanishes") {
  for (long n : {2, 3, 4, 6, 8, 12}) {
    Cyclotomic acc;
    for (long k = 0; k < n; ++k) acc += Cyclotomic::root_of_unity(n, k);
    CHECK(acc.is_zero());
  }
}

TEST_CASE("multiplication works across conductors") {
  auto z3 = Cyclotomic::root_of_unity(3, 1);
  auto z4 = Cyclotomic::root_of_unity(4, 1);
  CHECK(z3 * z4 == Cyclotomic::root_of_unity(12, 7));
  CHECK((z3 * z3 * z3) == Cyclotomic(1));
  CHECK((z4 * z4) == Cyclotomic(-1));
}

TEST_CASE("conjugation and galois action") {
  auto z8 = Cyclotomic::root_of_unity(8, 1);
  CHECK(z8.conjugate() == Cyclotomic::root_of_unity(8, 7));
  CHECK((z8 * z8.conjugate()) == Cyclotomic(1));
  CHECK(z8.galois(3) == Cyclotomic::root_of_unity(8, 3));
  CHECK(Cyclotomic(Rational(7)).conjugate() == Cyclotomic(7));
  // real subfield element is fixed by conjugation
  auto real = z8 + z8.conjugate();  // sqrt 2
  CHECK(real.conjugate() == real);
  CHECK((real * real) == Cyclotomic(2));
}

TEST_CASE("equality is decidable through the canonical form") {
  // 1 + zeta_3 + zeta_3^2 = 0, so zeta_3^2 = -1 - zeta_3
  auto z3 = Cyclotomic::root_of_unity(3, 1);
  auto z3sq = Cyclotomic::root_of_unity(3, 2);
  CHECK(z3sq == Cyclotomic(-1) - z3);
  // zeta_12^2 has conductor 6 as a field element, i.e. canonical conductor 3
  CHECK(Cyclotomic::root_of_unity(12, 2).conductor() == 3);
  CHECK(Cyclotomic::root_of_unity(12, 3) == Cyclotomic::root_of_unity(4, 1));
}

TEST_CASE("deterministic value order") {
  // lower conductor first; within a conductor the larger coefficient first
  CHECK(Cyclotomic::compare(Cyclotomic(1), Cyclotomic(-1)) < 0);
  CHECK(Cyclotomic::compare(Cyclotomic(1), Cyclotomic::root_of_unity(4, 1)) < 0);
  CHECK(Cyclotomic::compare(Cyclotomic::root_of_unity(4, 1),
                            Cyclotomic::root_of_unity(4, 3)) < 0);
  CHECK(Cyclotomic::compare(Cyclotomic(0), Cyclotomic(0)) == 0);
}

TEST_CASE("printing is stable") {
  CHECK(Cyclotomic(Rational(1, 2)).str() == "1/2");
  CHECK(Cyclotomic::root_of_unity(4, 1).str() == "z4");
  CHECK((Cyclotomic::root_of_unity(4, 1).scaled(Rational(-1))).str() == "-z4");
  CHECK(Cyclotomic(0).str() == "0");
}
