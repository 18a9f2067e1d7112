#pragma once

#include <string>

#include "poly.hpp"

namespace dk {

/// Fraction numerator / generator^power, where the generator is the single
/// declared localization element of the surrounding context (typically an
/// anchor determinant). Values are kept reduced: when power > 0 the
/// generator does not divide the numerator.
class Localized {
 public:
  explicit Localized(const Chart& chart) : num_(chart), gen_(Poly::constant(chart, 1)) {}
  Localized(Poly numerator);  // NOLINT(google-explicit-constructor)
  Localized(Poly numerator, Poly generator, unsigned power);

  const Poly& numerator() const { return num_; }
  const Poly& generator() const { return gen_; }
  unsigned power() const { return power_; }
  const Chart& chart() const { return num_.chart(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return power_ == 0; }
  /// Throws Internal unless the value is a polynomial.
  const Poly& as_poly() const;

  Localized operator-() const;
  Localized& operator+=(const Localized& o);
  Localized& operator-=(const Localized& o);
  friend Localized operator+(Localized a, const Localized& b) { return a += b; }
  friend Localized operator-(Localized a, const Localized& b) { return a -= b; }
  friend Localized operator*(const Localized& a, const Localized& b);
  friend Localized operator*(const Localized& a, const Poly& b) { return a * Localized(b); }

  bool operator==(const Localized& o) const;

  std::string to_string() const;

 private:
  void reduce();
  static Poly shared_generator(const Localized& a, const Localized& b);

  Poly num_;
  Poly gen_;
  unsigned power_ = 0;
};

Localized partial_derivative(const Localized& f, std::size_t var);

}  // namespace dk
