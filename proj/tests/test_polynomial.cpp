#include "doctest.h"
#include "wappell/polynomial.hpp"
#include "wappell/rational.hpp"

#include <stdexcept>
#include <vector>

using namespace wappell;

namespace {
Poly from_ints(const std::vector<int>& low_to_high) {
  std::vector<Rat> c;
  for (int v : low_to_high) c.emplace_back(v);
  return Poly(c);
}
}  // namespace

TEST_CASE("construction trims trailing zeros; zero polynomial has no degree") {
  Poly p(std::vector<Rat>{Rat(1), Rat(0), Rat(0)});
  CHECK(p.degree() == 0);
  CHECK(Poly().is_zero());
  CHECK_FALSE(Poly().degree().has_value());
  CHECK(Poly(Rat(0)).is_zero());
  CHECK(Poly::one().degree() == 0);
  CHECK(Poly::x().degree() == 1);
  CHECK(Poly::monomial(5).degree() == 5);
  CHECK(Poly::monomial(5).leading_coeff() == 1);
}

TEST_CASE("arithmetic follows ring axioms on small cases") {
  const Poly xp1 = from_ints({1, 1});               // x + 1
  CHECK(xp1 * xp1 == from_ints({1, 2, 1}));         // x^2 + 2x + 1
  CHECK(xp1 + Poly::one() == from_ints({2, 1}));
  CHECK(xp1 - xp1 == Poly());
  CHECK(-xp1 == from_ints({-1, -1}));
  CHECK(xp1 * Rat(0) == Poly());
  const Poly p = from_ints({-3, 0, 1});             // x^2 - 3
  CHECK(p(Rat(2)) == Rat(1));
  CHECK(p(make_rat(1, 2)) == make_rat(-11, 4));
}

TEST_CASE("coefficient access beyond the degree returns zero") {
  const Poly p = from_ints({1, 2});
  CHECK(p.coeff(0) == 1);
  CHECK(p.coeff(1) == 2);
  CHECK(p.coeff(7) == 0);
}

TEST_CASE("monic detection") {
  CHECK(from_ints({-3, 0, 1}).is_monic());
  CHECK_FALSE(from_ints({1, 2}).is_monic());
  CHECK_FALSE(Poly().is_monic());
  CHECK(Poly::one().is_monic());
}

TEST_CASE("derivatives of any order") {
  const Poly x3 = Poly::monomial(3);
  CHECK(derivative(x3) == from_ints({0, 0, 3}));
  CHECK(derivative(x3, 2) == from_ints({0, 6}));
  CHECK(derivative(x3, 3) == Poly(Rat(6)));
  CHECK(derivative(x3, 4) == Poly());
  CHECK(derivative(Poly::one()) == Poly());
}

TEST_CASE("wronskian of x and x^3-3x is 2x^3") {
  // | x      x^3-3x  |
  // | 1      3x^2-3  |  ->  x(3x^2-3) - (x^3-3x) = 2x^3
  const Poly a = Poly::x();
  const Poly b = from_ints({0, -3, 0, 1});
  CHECK(wronskian({a, b}) == from_ints({0, 0, 0, 2}));
  CHECK(wronskian({b}) == b);
  CHECK_THROWS_AS(wronskian({}), std::invalid_argument);
}

TEST_CASE("wronskian of three polynomials") {
  // Wr[1, x, x^2] = det [[1,x,x^2],[0,1,2x],[0,0,2]] = 2.
  CHECK(wronskian({Poly::one(), Poly::x(), Poly::monomial(2)}) == Poly(Rat(2)));
}

TEST_CASE("scalar division is exact and rejects zero") {
  const Poly p = from_ints({2, 4});
  CHECK(exact_div_scalar(p, Rat(2)) == from_ints({1, 2}));
  CHECK_THROWS_AS(exact_div_scalar(p, Rat(0)), std::invalid_argument);
}

TEST_CASE("composition and argument shifts") {
  const Poly inner = from_ints({1, 1});                  // x + 1
  const Poly outer = from_ints({1, 0, 1});               // x^2 + 1
  CHECK(compose(outer, inner) == from_ints({2, 2, 1}));  // (x+1)^2 + 1
  CHECK(shift_argument(Poly::monomial(2), Rat(1)) == from_ints({1, 2, 1}));
  CHECK(shift_argument(outer, Rat(0)) == outer);
  // p((x+1)^2) with p = x: x^2 + 2x + 1.
  CHECK(square_shift_argument(Poly::x(), Rat(1)) == from_ints({1, 2, 1}));
  // p(x^2) with p = x^2 - 3: x^4 - 3.
  CHECK(square_shift_argument(from_ints({-3, 0, 1}), Rat(0)) ==
        from_ints({-3, 0, 0, 0, 1}));
}

TEST_CASE("integer-coefficient detection") {
  CHECK(is_integer_poly(from_ints({-3, 0, 1})));
  CHECK(is_integer_poly(Poly()));
  CHECK_FALSE(is_integer_poly(Poly(std::vector<Rat>{make_rat(1, 2)})));
}

TEST_CASE("polynomial powers") {
  CHECK(poly_pow(from_ints({1, 1}), 3) == from_ints({1, 3, 3, 1}));
  CHECK(poly_pow(from_ints({1, 1}), 0) == Poly::one());
  CHECK(poly_pow(Poly(), 2) == Poly());
}

TEST_CASE("plain-text rendering") {
  CHECK(poly_to_string(Poly()) == "0");
  CHECK(poly_to_string(Poly(Rat(-3))) == "-3");
  CHECK(poly_to_string(Poly::x()) == "x");
  CHECK(poly_to_string(from_ints({1, 0, -1})) == "-x^2 + 1");
  const Poly mixed(std::vector<Rat>{Rat(1), make_rat(-1, 2), Rat(0), Rat(1)});
  CHECK(poly_to_string(mixed) == "x^3 - 1/2*x + 1");
  CHECK(poly_to_string(from_ints({0, 2})) == "2*x");
}

TEST_CASE("latex rendering uses frac and braced exponents") {
  const Poly mixed(std::vector<Rat>{Rat(1), make_rat(-1, 2), Rat(0), Rat(1)});
  CHECK(poly_to_latex(mixed) == "x^{3} - \\frac{1}{2}x + 1");
  CHECK(poly_to_latex(from_ints({0, 0, 3})) == "3x^{2}");
}
