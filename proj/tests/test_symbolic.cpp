#include <doctest.h>

#include "support.hpp"

using namespace dkt;

TEST_CASE("chart validation") {
  CHECK_THROWS_AS(Chart::make({"x", "x"}), Error);
  CHECK_THROWS_AS(Chart::make({}), Error);
  auto c = chart({"x", "y", "z"});
  CHECK(c.require_index("z") == 2);
  CHECK_THROWS_AS(c.require_index("w"), Error);
  std::vector<std::size_t> drop{1};
  CHECK(c.without(drop).names() == std::vector<std::string>{"x", "z"});
}

TEST_CASE("polynomial printing is canonical") {
  auto c = chart({"x", "y"});
  CHECK(P(c, "y + x^2 - 3").to_string() == "x^2 + y - 3");
  CHECK(P(c, "(x + y)^2").to_string() == "x^2 + 2*x*y + y^2");
  CHECK(P(c, "x/2 - 1/3").to_string() == "1/2*x - 1/3");
  CHECK(P(c, "0").to_string() == "0");
  CHECK(P(c, "-x*y").to_string() == "-x*y");
}

TEST_CASE("polynomial ring laws on random inputs") {
  auto c = chart({"x", "y", "z"});
  Rng r(11);
  for (int t = 0; t < 40; ++t) {
    Poly a = r.poly(c, 3), b = r.poly(c, 3), d = r.poly(c, 2);
    CHECK(a * (b + d) == a * b + a * d);
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
    Rational third(r.integer(-4, 4), 3);
    third.canonicalize();
    std::vector<Rational> pt{r.integer(-4, 4), r.integer(-4, 4), third};
    CHECK((a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt));
    // Leibniz rule for partials
    for (std::size_t i = 0; i < 3; ++i)
      CHECK(partial_derivative(a * b, i) == partial_derivative(a, i) * b + a * partial_derivative(b, i));
  }
}

TEST_CASE("exact division") {
  auto c = chart({"x", "y"});
  Rng r(12);
  for (int t = 0; t < 40; ++t) {
    Poly a = r.poly(c, 3), b = r.poly(c, 2);
    if (b.is_zero()) continue;
    auto q = exact_divide(a * b, b);
    REQUIRE(q.has_value());
    CHECK(*q == a);
  }
  CHECK_FALSE(exact_divide(P(c, "x + 1"), P(c, "x")).has_value());
  CHECK_THROWS_AS(exact_divide(P(c, "x"), P(c, "0")), Error);
}

TEST_CASE("gcd against constructed common factors") {
  auto c = chart({"x", "y", "z"});
  Rng r(13);
  for (int t = 0; t < 30; ++t) {
    Poly g = r.poly(c, 2), a = r.poly(c, 2), b = r.poly(c, 2);
    if (g.is_zero() || a.is_zero() || b.is_zero()) continue;
    Poly h = gcd(g * a, g * b);
    // the constructed factor divides the gcd, and the gcd divides both inputs
    CHECK(exact_divide(h, normalized(g)).has_value());
    CHECK(exact_divide(g * a, h).has_value());
    CHECK(exact_divide(g * b, h).has_value());
    CHECK(h == normalized(h));
  }
  CHECK(gcd(P(c, "x^2 - y^2"), P(c, "x^2 + 2*x*y + y^2")) == P(c, "x + y"));
  CHECK(gcd(P(c, "0"), P(c, "0")).is_zero());
  CHECK(gcd(P(c, "6*x"), P(c, "0")) == P(c, "x"));
}

TEST_CASE("squarefree part") {
  auto c = chart({"x", "y"});
  CHECK(squarefree_part(P(c, "x^3*(x^2 + y^2)^2")) == P(c, "x^3 + x*y^2"));
  CHECK(squarefree_part(P(c, "4*x^2")) == P(c, "x"));
  CHECK_THROWS_AS(squarefree_part(P(c, "0")), Error);
  Rng r(14);
  for (int t = 0; t < 20; ++t) {
    Poly f = r.poly(c, 2);
    if (f.total_degree() < 1) continue;
    Poly s = squarefree_part(f);
    CHECK(squarefree_part(f * f) == s);
    CHECK(exact_divide(f, s).has_value());
  }
}

TEST_CASE("content and normalization") {
  auto c = chart({"x", "y"});
  CHECK(content(P(c, "6*x + 4/3*y")) == Rational(2, 3));
  CHECK(normalized(P(c, "-6*x + 4*y")) == P(c, "3*x - 2*y"));
}

TEST_CASE("localized fractions") {
  auto c = chart({"x", "y"});
  Poly x = P(c, "x");
  Localized a(P(c, "y"), x, 2);
  CHECK(a.to_string() == "y/x^2");
  Localized b = a * Localized(x * x);
  CHECK(b.is_polynomial());
  CHECK(b.as_poly() == P(c, "y"));
  Localized red(P(c, "x*y"), x, 1);
  CHECK(red.is_polynomial());
  CHECK((a - a).is_zero());
  CHECK(partial_derivative(Localized(Poly::constant(c, 1), x, 1), 0) == Localized(P(c, "-1"), x, 2));
}

TEST_CASE("print then parse reproduces random polynomials") {
  auto c = chart({"x", "y", "z"});
  Rng r(15);
  for (int t = 0; t < 50; ++t) {
    Poly a = r.poly(c, 4, 4) * Rational(1, r.integer(1, 5));
    CHECK(P(c, a.to_string()) == a);
  }
}
