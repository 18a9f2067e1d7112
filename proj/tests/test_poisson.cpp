#include <doctest.h>

#include "core/linalg.hpp"
#include "core/poisson.hpp"
#include "support.hpp"

using namespace dkt;

namespace {

Multivector pi4(const Chart& c) { return M(c, "x*Dx^^Dy + Dz^^Dw + Dx^^Dw"); }

DivisorTypeReport dtype(const Multivector& pi) {
  auto r = divisor_type(pi);
  REQUIRE(std::holds_alternative<DivisorTypeReport>(r));
  return std::get<DivisorTypeReport>(r);
}

LiftCertificate lifted(const Multivector& pi, const AnchorFrame& f) {
  auto r = lift(pi, f);
  REQUIRE(std::holds_alternative<LiftCertificate>(r));
  return std::get<LiftCertificate>(r);
}

// Divergence of a vector field against dx_1^...^dx_n.
Poly divergence(const Multivector& v) {
  Poly s(v.chart());
  for (std::size_t i = 0; i < v.chart().dimension(); ++i) s += partial_derivative(v.coefficient({int(i)}), i);
  return s;
}

}  // namespace

TEST_CASE("Jacobiator of the four-dimensional example") {
  auto c = chart({"x", "y", "z", "w"});
  auto r = check_poisson(pi4(c));
  CHECK_FALSE(r.ok);
  CHECK(r.jacobiator.to_string() == "-2*Dx^^Dy^^Dw");
  CHECK(check_poisson(M(c, "x*Dx^^Dy + Dz^^Dw")).ok);
  CHECK_THROWS_AS(PoissonStruct(M(c, "Dx")), Error);
}

TEST_CASE("divisor type") {
  auto c = chart({"x", "y", "z", "w"});
  auto d = dtype(pi4(c));
  CHECK(d.m == 2);
  CHECK(d.ideal.generator() == P(c, "x"));
  CHECK(d.cls.to_string() == "Log");
  CHECK(d.constant_line);
  CHECK(d.warnings.size() == 1);

  auto c2 = chart({"x", "y"});
  auto b = dtype(M(c2, "x^3*Dx^^Dy"));
  CHECK(b.ideal.generator() == P(c2, "x^3"));
  CHECK(b.cls.to_string() == "BPower(3)");

  auto c3 = chart({"x", "y", "z"});
  auto s = dtype(M(c3, "x*z*Dx^^Dy + x*Dy^^Dz"));
  CHECK(s.m == 1);
  CHECK(s.ideal.generator() == P(c3, "x"));
  // z*Dx^^Dy + Dy^^Dz never vanishes, but not with constant coefficients
  CHECK_FALSE(s.constant_line);
  CHECK_FALSE(s.sample_points.empty());

  auto bad = divisor_type(M(c3, "x*Dx^^Dy + y*Dx^^Dz"));
  REQUIRE(std::holds_alternative<NotDivisorType>(bad));
  CHECK(std::get<NotDivisorType>(bad).point == std::vector<Rational>{0, 0, 0});
}

TEST_CASE("degeneracy ideals") {
  auto c = chart({"x", "y", "z", "w"});
  auto levels = degeneracy_ideals(pi4(c));
  REQUIRE(levels.size() == 2);
  CHECK(levels[0].k == 1);
  CHECK(levels[0].generators.size() == 3);
  CHECK(levels[0].principal.has_value());
  CHECK(levels[1].generators == std::vector<Poly>{P(c, "x")});
}

TEST_CASE("lifting table") {
  auto c2 = chart({"x", "y"});
  auto a = lifted(M(c2, "x^2*Dx^^Dy"), F(c2, "log(x)"));
  CHECK(a.lifted.to_string() == "x*e1^^e2");
  CHECK_FALSE(a.nondegenerate);
  CHECK(a.residual.generator() == P(c2, "x"));

  auto c4 = chart({"x", "y", "z", "w"});
  auto b = lift(pi4(c4), F(c4, "log(x)"));
  REQUIRE(std::holds_alternative<NotLiftable>(b));
  CHECK(std::get<NotLiftable>(b).witness.to_string() == "1/x");

  auto ce = chart({"x", "y", "u", "v"});
  auto e = lifted(M(ce, "(x^2 + y^2)*Dx^^Dy + Du^^Dv"), F(ce, "elliptic(x, y)"));
  CHECK(e.nondegenerate);
  CHECK_FALSE(e.sampled);
  CHECK(e.pf_lift.is_constant());

  for (const char* f : {"bk(x, 3)", "scattering(x)"}) {
    auto l = lifted(M(c2, "x^3*Dx^^Dy"), F(c2, f));
    CHECK(l.lifted.to_string() == "e1^^e2");
    CHECK(l.nondegenerate);
  }
}

TEST_CASE("Pfaffian multiplicativity on pushed-forward lifts") {
  auto c = chart({"x", "y", "z", "w"});
  Rng r(51);
  std::vector<AnchorFrame> frames{F(c, "log(x)"), F(c, "bk(y, 2)"), F(c, "elliptic(x, y)"), F(c, "scattering(z)"),
                                  F(c, "elliptic_log(x, y)")};
  for (int t = 0; t < 25; ++t) {
    const auto& f = frames[std::size_t(t) % frames.size()];
    auto pa = r.frame_multivector(f, 2, 1);
    auto pi = pushforward(pa, f);
    auto l = lifted(pi, f);
    CHECK(l.lifted == pa);
    CHECK(l.pfaffian_identity);
    CHECK(pfaffian(bivector_matrix(pi)) == f.det() * pfaffian(bivector_matrix(pushforward(pa, F(c, "tangent()")))));
  }
}

TEST_CASE("modular vector fields") {
  auto c = chart({"x", "y", "z"});
  CHECK(modular_vf(M(c, "x*Dx^^Dy")).to_string() == "Dy");
  CHECK(modular_vf(M(c, "z*Dx^^Dy")).to_string() == "0");
  CHECK(modular_vf(M(c, "(z - x^2)*Dx^^Dy")).to_string() == "-2*x*Dy");
  auto c2 = chart({"x", "y"});
  // 2-d: V = f_x Dy - f_y Dx
  Rng r(52);
  for (int t = 0; t < 10; ++t) {
    Poly f = r.poly(c2, 3);
    auto v = modular_vf(Multivector::basis(c2, {0, 1}, f));
    CHECK(v.coefficient({1}) == partial_derivative(f, 0));
    CHECK(v.coefficient({0}) == -partial_derivative(f, 1));
  }
}

TEST_CASE("modular field defining property and Poisson invariance") {
  auto c = chart({"x", "y", "z"});
  Rng r(53);
  for (int t = 0; t < 10; ++t) {
    // f(x,y,z) Dx^^Dy is always Poisson in dimension three
    auto pi = Multivector::basis(c, {0, 1}, r.poly(c, 2));
    REQUIRE(check_poisson(pi).ok);
    auto v = modular_vf(pi);
    std::vector<Poly> fs{P(c, "x"), P(c, "y"), P(c, "z")};
    for (int q = 0; q < 3; ++q) fs.push_back(r.poly(c, 2));
    for (const auto& f : fs) {
      // L_X mu = div(X) mu for the coordinate volume
      CHECK(divergence(hamiltonian_vf(pi, f)) == -apply_vector(v, f));
    }
    CHECK(lie_derivative(v, pi).is_zero());
    CHECK(poisson_vf_check(pi, v));
  }
}

TEST_CASE("volume rescaling changes the modular field by a Hamiltonian field") {
  auto c = chart({"x", "y", "z"});
  auto pi = M(c, "(z - x^2)*Dx^^Dy + y*Dx^^Dz");
  auto v = modular_vf(pi);
  CHECK(scaled_modular_vf(pi, P(c, "5")) == v.scaled(Rational(5)));
  for (const char* g : {"1 + x^2", "2 + y^2 + z^4"}) {
    Poly gp = P(c, g);
    CHECK(scaled_modular_vf(pi, gp) - v.scaled(gp) == hamiltonian_vf(pi, gp));
  }
}

TEST_CASE("Poisson vector fields preserve the divisor ideal") {
  auto c = chart({"x", "y"});
  auto pi = M(c, "x^2*Dx^^Dy");
  auto ideal = DivisorIdeal::make(P(c, "x^2"));
  Rng r(54);
  for (int t = 0; t < 15; ++t) {
    Poly h = r.poly(c, 3);
    auto v = hamiltonian_vf(pi, h) + modular_vf(pi).scaled(Rational(r.integer(-2, 2)));
    REQUIRE(poisson_vf_check(pi, v));
    CHECK(preserves(v, ideal).preserved);
    CHECK(exact_divide(poisson_bracket(pi, h, P(c, "x^2")), P(c, "x^2")).has_value());
  }
  CHECK_FALSE(poisson_vf_check(pi, M(c, "Dx")));
}

TEST_CASE("hamiltonian and bracket conventions") {
  auto c = chart({"x", "y"});
  auto pi = M(c, "Dx^^Dy");
  CHECK(poisson_bracket(pi, P(c, "x"), P(c, "y")) == P(c, "1"));
  CHECK(hamiltonian_vf(pi, P(c, "x")).to_string() == "Dy");
}

TEST_CASE("modular foliation reports") {
  auto c = chart({"x", "y", "z"});
  auto r1 = modular_foliation_report(M(c, "x*Dx^^Dy"), F(c, "log(x)"));
  CHECK(r1.ok);
  CHECK(*r1.modular.coefficients == std::vector<Poly>{P(c, "0"), P(c, "1"), P(c, "0")});
  CHECK(modular_foliation_report(M(c, "z*Dx^^Dy"), F(c, "log(z)")).ok);
  CHECK(modular_foliation_report(M(c, "(z - x^2)*Dx^^Dy"), F(c, "custom(Dx + 2*x*Dz; Dy; (z - x^2)*Dz)")).ok);
  auto bad = modular_foliation_report(M(c, "z*Dx^^Dy"), F(c, "log(x)"));
  CHECK_FALSE(bad.ok);
  auto c2 = chart({"x", "y"});
  auto r2 = modular_foliation_report(M(c2, "x^2*Dx^^Dy"), F(c2, "log(x)"));
  CHECK(r2.ok);
  CHECK(*r2.modular.coefficients == std::vector<Poly>{P(c2, "0"), P(c2, "2*x")});
  CHECK(modular_foliation_report(M(c2, "Dx^^Dy"), F(c2, "tangent()")).ok);
}

TEST_CASE("distribution lifts") {
  auto c = chart({"x", "y", "z"});
  std::vector<Multivector> d{M(c, "Dx"), M(c, "Dy")};
  for (const char* f : {"x", "z", "z - x^2"}) {
    auto a = distribution_lift(Multivector::basis(c, {0, 1}, P(c, f)), d);
    REQUIRE(a.has_value());
    CHECK((*a)[0][1] == P(c, f));
  }
  CHECK_FALSE(distribution_lift(M(c, "Dx^^Dz"), d).has_value());
}

TEST_CASE("log liftability criterion") {
  auto c = chart({"x", "y", "z", "w"});
  auto logx = F(c, "log(x)");
  for (const auto& pi : {pi4(c), M(c, "x*Dx^^Dy + Dz^^Dw"), M(c, "x*Dx^^Dy + x*Dx^^Dz + Dz^^Dw")}) {
    auto h = hamiltonian_vf(pi, P(c, "x"));
    bool divisible = true;
    for (const auto& [idx, coef] : h.components()) divisible = divisible && exact_divide(coef, P(c, "x")).has_value();
    CHECK(divisible == std::holds_alternative<LiftCertificate>(lift(pi, logx)));
  }
}

TEST_CASE("Darboux catalog self-check") {
  for (std::size_t n : {2u, 4u, 6u}) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back(std::string(1, char('a' + i)));
    auto c = chart(names);
    std::vector<std::pair<std::string, int>> kinds{{"nondegenerate", 0}, {"log", 0}, {"bk", 2}, {"bk", 3}, {"scattering", 0}};
    kinds.push_back({"elliptic", 0});
    kinds.push_back({"elliptic_log", 0});
    if (n >= 4) kinds.push_back({"elliptic_zero", 0});
    for (const auto& [k, p] : kinds) {
      CAPTURE(k);
      CAPTURE(n);
      auto m = darboux_catalog(c, k, p);
      CHECK(check_poisson(m.pi).ok);
      auto d = dtype(m.pi);
      CHECK(d.cls == m.advertised);
      auto l = lifted(m.pi, m.frame);
      CHECK(l.nondegenerate);
      CHECK_FALSE(l.sampled);
    }
  }
  CHECK_THROWS_AS(darboux_catalog(chart({"x", "y", "z"}), "log"), Error);
  CHECK_THROWS_AS(darboux_catalog(chart({"x", "y"}), "elliptic_zero"), Error);
}

TEST_CASE("elliptic Darboux model and the b3 model lift to several frames") {
  auto c = chart({"x", "y", "u", "v"});
  auto m = darboux_catalog(c, "elliptic");
  CHECK(m.pi.to_string() == "(x^2 + y^2)*Dx^^Dy + Du^^Dv");
  auto c2 = chart({"x", "y"});
  auto b = darboux_catalog(c2, "bk", 3);
  CHECK(b.pi.to_string() == "x^3*Dx^^Dy");
  CHECK(lifted(b.pi, F(c2, "scattering(x)")).nondegenerate);
  CHECK(lifted(darboux_catalog(c, "log").pi, F(c, "log(x)")).nondegenerate);
}
