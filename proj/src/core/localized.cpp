#include "localized.hpp"

#include "error.hpp"

namespace dk {

Localized::Localized(Poly numerator) : num_(std::move(numerator)), gen_(Poly::constant(num_.chart(), 1)) {}

Localized::Localized(Poly numerator, Poly generator, unsigned power)
    : num_(std::move(numerator)), gen_(std::move(generator)), power_(power) {
  require_same_chart(num_.chart(), gen_.chart());
  if (gen_.is_zero()) fail(ErrorCode::DivisionByZero, "localization at the zero polynomial");
  reduce();
}

void Localized::reduce() {
  if (num_.is_zero()) {
    power_ = 0;
    gen_ = Poly::constant(num_.chart(), 1);
    return;
  }
  if (gen_.is_constant()) {
    const Rational c = gen_.constant_term();
    for (unsigned k = 0; k < power_; ++k) num_ *= Rational(1) / c;
    power_ = 0;
    gen_ = Poly::constant(num_.chart(), 1);
    return;
  }
  while (power_ > 0) {
    auto q = exact_divide(num_, gen_);
    if (!q) break;
    num_ = std::move(*q);
    --power_;
  }
  if (power_ == 0) gen_ = Poly::constant(num_.chart(), 1);
}

const Poly& Localized::as_poly() const {
  if (power_ != 0) fail(ErrorCode::Internal, "expected a polynomial, got " + to_string());
  return num_;
}

Poly Localized::shared_generator(const Localized& a, const Localized& b) {
  if (a.power_ == 0) return b.gen_;
  if (b.power_ == 0) return a.gen_;
  if (!(a.gen_ == b.gen_)) fail(ErrorCode::LocalizationMismatch, "fractions localized at different generators");
  return a.gen_;
}

Localized Localized::operator-() const {
  Localized r = *this;
  r.num_ = -r.num_;
  return r;
}

Localized& Localized::operator+=(const Localized& o) {
  Poly g = shared_generator(*this, o);
  const unsigned p = std::max(power_, o.power_);
  Poly n = num_ * g.pow(p - power_) + o.num_ * g.pow(p - o.power_);
  num_ = std::move(n);
  gen_ = std::move(g);
  power_ = p;
  reduce();
  return *this;
}

Localized& Localized::operator-=(const Localized& o) { return *this += -o; }

Localized operator*(const Localized& a, const Localized& b) {
  Poly g = Localized::shared_generator(a, b);
  return Localized(a.num_ * b.num_, std::move(g), a.power_ + b.power_);
}

bool Localized::operator==(const Localized& o) const {
  if (power_ != o.power_) return false;
  if (!(num_ == o.num_)) return false;
  return power_ == 0 || gen_ == o.gen_;
}

std::string Localized::to_string() const {
  if (power_ == 0) return num_.to_string();
  std::string num = num_.to_string();
  if (num_.term_count() > 1) num = "(" + num + ")";
  std::string den = gen_.to_string();
  bool bare = gen_.term_count() == 1 && gen_.leading_coefficient() == 1 && gen_.total_degree() == 1;
  if (!bare && (power_ > 1 || gen_.term_count() > 1 || gen_.leading_coefficient() != 1)) den = "(" + den + ")";
  if (power_ > 1) den += "^" + std::to_string(power_);
  return num + "/" + den;
}

Localized partial_derivative(const Localized& f, std::size_t var) {
  if (f.power() == 0) return Localized(partial_derivative(f.numerator(), var));
  // d(n / g^k) = (g dn - k n dg) / g^(k+1)
  const Poly& n = f.numerator();
  const Poly& g = f.generator();
  Poly top = g * partial_derivative(n, var) - n * partial_derivative(g, var) * Rational(f.power());
  return Localized(std::move(top), g, f.power() + 1);
}

}  // namespace dk
