#include "fglab/cyclotomic.hpp"
#include "fglab/polynomial.hpp"

#include <doctest.h>

using namespace fglab;

TEST_CASE("polynomial arithmetic") {
  const Polynomial t = Polynomial::variable();
  Polynomial p = t * t - Polynomial(1);
  CHECK(p.degree() == 2);
  CHECK(p.to_string() == "t^2 - 1");
  CHECK(p.evaluate(3) == 8);
  CHECK((p - p).is_zero());
  CHECK(Polynomial(0).degree() == -1);

  auto [q, r] = divmod(p, t - Polynomial(1));
  CHECK(q == t + Polynomial(1));
  CHECK(r.is_zero());
  auto [q2, r2] = divmod(p, t * t * t);
  CHECK(q2.is_zero());
  CHECK(r2 == p);
  CHECK_THROWS_AS(divmod(p, Polynomial()), std::domain_error);

  CHECK(Polynomial::binomial_power(1, -1, 3).to_string("L") == "-L^3 + 3*L^2 - 3*L + 1");
}

TEST_CASE("determinant") {
  const Polynomial t = Polynomial::variable();
  using Row = std::vector<Polynomial>;
  CHECK(determinant({}) == Polynomial(1));
  CHECK(determinant({Row{t}}) == t);
  // [[t, 1], [1, t]] -> t^2 - 1
  CHECK(determinant({Row{t, Polynomial(1)}, Row{Polynomial(1), t}}) == t * t - Polynomial(1));
  // zero leading pivot forces a row swap: [[0, 1], [1, 0]] -> -1
  CHECK(determinant({Row{Polynomial(0), Polynomial(1)}, Row{Polynomial(1), Polynomial(0)}}) ==
        Polynomial(-1));
  // singular
  CHECK(determinant({Row{t, t}, Row{t, t}}).is_zero());
  // interior zero pivot after one step: det = 1*(6-2) - 2*(3-0) = -2
  CHECK(determinant({Row{Polynomial(1), Polynomial(2), Polynomial(0)},
                     Row{Polynomial(3), Polynomial(6), Polynomial(2)},
                     Row{Polynomial(0), Polynomial(1), Polynomial(1)}}) == Polynomial(-2));
  CHECK_THROWS_AS(determinant({Row{t, t}}), std::invalid_argument);
}

TEST_CASE("cyclotomic group ring") {
  auto t = CyclotomicElement::t_power(3, 1);
  CHECK(t * t * t == CyclotomicElement::constant(3, 1));
  CHECK(CyclotomicElement::t_power(3, -1) == t * t);
  CHECK((CyclotomicElement::constant(3, 1) - t * t * t).is_zero());
  auto e = CyclotomicElement::constant(4, Rational(1, 2)) + CyclotomicElement::t_power(4, 3);
  CHECK(e.to_string() == "1/2 + t^3");
  CHECK((Rational(2) * e)[0] == 1);
  CHECK_THROWS_AS(t + CyclotomicElement::t_power(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(CyclotomicElement(0), std::invalid_argument);
}
