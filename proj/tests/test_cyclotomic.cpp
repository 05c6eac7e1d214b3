#include "doctest.h"
#include "wappell/cyclotomic.hpp"

#include <stdexcept>
#include <vector>

using namespace wappell;

TEST_CASE("cyclotomic polynomials by exact division") {
  CHECK(cyclotomic_polynomial(1) == std::vector<Int>{-1, 1});           // x - 1
  CHECK(cyclotomic_polynomial(2) == std::vector<Int>{1, 1});            // x + 1
  CHECK(cyclotomic_polynomial(3) == std::vector<Int>{1, 1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<Int>{1, 0, 1});         // x^2 + 1
  CHECK(cyclotomic_polynomial(6) == std::vector<Int>{1, -1, 1});        // x^2 - x + 1
  CHECK(cyclotomic_polynomial(12) == std::vector<Int>{1, 0, -1, 0, 1});
  CHECK(cyclotomic_polynomial(
            105)[7] == -2);  // first index with a coefficient outside {-1,0,1}
  CHECK_THROWS_AS(cyclotomic_polynomial(0), std::invalid_argument);
}

TEST_CASE("field degree is Euler phi of the order") {
  CHECK(CyclotomicField(1).degree() == 1);
  CHECK(CyclotomicField(4).degree() == 2);
  CHECK(CyclotomicField(6).degree() == 2);
  CHECK(CyclotomicField(12).degree() == 4);
}

TEST_CASE("powers of i in the fourth cyclotomic field") {
  const CyclotomicField field(4);
  const Cyclo i = field.zeta();
  CHECK(i * i == field.from_rat(Rat(-1)));
  CHECK(i.pow(4) == field.one());
  CHECK(i.pow(3) == -i);
  CHECK(field.zeta(-1) == -i);      // 1/i = -i
  CHECK(field.zeta(7) == field.zeta(3));
  CHECK((i * i).is_rational());
  CHECK((i * i).as_rational() == Rat(-1));
  CHECK_FALSE(i.is_rational());
  CHECK_THROWS_AS(i.as_rational(), std::invalid_argument);
}

TEST_CASE("arithmetic reduces modulo the minimal polynomial") {
  const CyclotomicField field(6);
  const Cyclo z = field.zeta();
  // Phi_6 = x^2 - x + 1, so zeta^2 = zeta - 1.
  CHECK(z * z == z - field.one());
  // zeta^3 = -1 in Q(zeta_6).
  CHECK(z.pow(3) == field.from_rat(Rat(-1)));
  CHECK(z.pow(6) == field.one());
}

TEST_CASE("bare zero absorbs into any field") {
  const CyclotomicField field(4);
  Cyclo acc;  // no field attached yet
  CHECK(acc.is_zero());
  CHECK(acc.is_rational());
  acc += field.zeta();
  CHECK(acc == field.zeta());
  CHECK((Cyclo() * field.zeta()).is_zero());
}

TEST_CASE("elements of different fields cannot be mixed") {
  const CyclotomicField f4(4);
  const CyclotomicField f6(6);
  CHECK_THROWS_AS(f4.zeta() + f6.zeta(), std::invalid_argument);
}

TEST_CASE("linear algebra identities used by the conjugation transform") {
  // In Q(zeta_{2r}) the r-th power of zeta is -1; this is what makes the
  // transform below well defined.
  for (int r = 2; r <= 5; ++r) {
    const CyclotomicField field(2 * r);
    CHECK(field.zeta().pow(static_cast<long>(r)) == field.from_rat(Rat(-1)));
  }
}
