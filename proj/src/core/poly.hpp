#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chart.hpp"

namespace dk {

using Rational = mpq_class;
using Exponent = std::vector<std::uint32_t>;

/// Orders exponents by descending graded-lex, so the first term is leading.
struct GrlexDescending {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Exact multivariate polynomial with rational coefficients over a chart.
///
/// Terms are kept in a map keyed by exponent vectors in descending grlex
/// order with no zero coefficients stored, so structural equality is
/// mathematical equality.
class Poly {
 public:
  using TermMap = std::map<Exponent, Rational, GrlexDescending>;

  explicit Poly(Chart chart) : chart_(std::move(chart)) {}

  static Poly constant(const Chart& chart, const Rational& c);
  static Poly variable(const Chart& chart, std::size_t index);
  static Poly monomial(const Chart& chart, Exponent exp, const Rational& c);

  const Chart& chart() const { return chart_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term (zero when absent).
  Rational constant_term() const;
  /// Requires a nonzero polynomial.
  const Exponent& leading_exponent() const;
  const Rational& leading_coefficient() const;
  int total_degree() const;  // -1 for zero
  int degree_in(std::size_t var) const;  // -1 for zero
  bool depends_on(std::size_t var) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }

  Poly pow(unsigned k) const;

  bool operator==(const Poly& o) const;

  Rational evaluate(std::span<const Rational> point) const;

  /// Substitutes zero for the listed variables and moves the result onto
  /// the chart with those variables removed.
  Poly restrict_to_zero(std::span<const std::size_t> vars, const Chart& sub) const;
  /// Rewrites this polynomial on a chart containing all of its variables.
  Poly embed(const Chart& target) const;

  void add_term(const Exponent& e, const Rational& c);

  std::string to_string() const;

 private:
  Chart chart_;
  TermMap terms_;
};

Poly partial_derivative(const Poly& p, std::size_t var);
Poly partial_derivative(const Poly& p, std::string_view var);

/// q with f = q * g, or nothing. Throws DivisionByZero when g = 0.
std::optional<Poly> exact_divide(const Poly& f, const Poly& g);

/// Positive-rational content: gcd of numerators over lcm of denominators.
Rational content(const Poly& p);
/// Content 1 with positive leading coefficient; zero stays zero.
Poly normalized(const Poly& p);

/// Normalized gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);
/// Normalized gcd of a list. Throws AllZero.
Poly gcd_content(std::span<const Poly> polys);
/// f / gcd(f, df/dx_1, ..., df/dx_n), normalized. Throws ZeroPolynomial.
Poly squarefree_part(const Poly& f);

std::string rational_to_string(const Rational& r);

}  // namespace dk
