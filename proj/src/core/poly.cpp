#include "poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "error.hpp"

namespace dk {

namespace {

unsigned exp_degree(const Exponent& e) {
  return std::accumulate(e.begin(), e.end(), 0u);
}

bool exp_divides(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Exponent exp_sub(const Exponent& b, const Exponent& a) {
  Exponent r(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = b[i] - a[i];
  return r;
}

Exponent exp_add(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

}  // namespace

bool GrlexDescending::operator()(const Exponent& a, const Exponent& b) const {
  unsigned da = exp_degree(a), db = exp_degree(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

Poly Poly::constant(const Chart& chart, const Rational& c) {
  Poly p(chart);
  p.add_term(Exponent(chart.dimension(), 0), c);
  return p;
}

Poly Poly::variable(const Chart& chart, std::size_t index) {
  Exponent e(chart.dimension(), 0);
  e.at(index) = 1;
  return monomial(chart, std::move(e), Rational(1));
}

Poly Poly::monomial(const Chart& chart, Exponent exp, const Rational& c) {
  Poly p(chart);
  p.add_term(exp, c);
  return p;
}

void Poly::add_term(const Exponent& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && exp_degree(terms_.begin()->first) == 0);
}

Rational Poly::constant_term() const {
  auto it = terms_.find(Exponent(chart_.dimension(), 0));
  return it == terms_.end() ? Rational(0) : it->second;
}

const Exponent& Poly::leading_exponent() const {
  if (terms_.empty()) fail(ErrorCode::ZeroPolynomial, "zero polynomial has no leading term");
  return terms_.begin()->first;
}

const Rational& Poly::leading_coefficient() const {
  if (terms_.empty()) fail(ErrorCode::ZeroPolynomial, "zero polynomial has no leading term");
  return terms_.begin()->second;
}

int Poly::total_degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(exp_degree(terms_.begin()->first));
}

int Poly::degree_in(std::size_t var) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[var]));
  return d;
}

bool Poly::depends_on(std::size_t var) const { return degree_in(var) > 0; }

Poly Poly::operator-() const {
  Poly r(*this);
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  require_same_chart(chart_, o.chart_);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  require_same_chart(chart_, o.chart_);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  require_same_chart(a.chart_, b.chart_);
  Poly r(a.chart_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) r.add_term(exp_add(ea, eb), ca * cb);
  }
  return r;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Poly Poly::pow(unsigned k) const {
  Poly result = constant(chart_, 1);
  Poly base = *this;
  while (k > 0) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return result;
}

bool Poly::operator==(const Poly& o) const { return chart_ == o.chart_ && terms_ == o.terms_; }

Rational Poly::evaluate(std::span<const Rational> point) const {
  if (point.size() != chart_.dimension()) fail(ErrorCode::DegreeMismatch, "evaluation point has wrong dimension");
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (unsigned k = 0; k < e[i]; ++k) t *= point[i];
    }
    sum += t;
  }
  return sum;
}

Poly Poly::restrict_to_zero(std::span<const std::size_t> vars, const Chart& sub) const {
  Poly r(sub);
  for (const auto& [e, c] : terms_) {
    bool vanishes = false;
    for (auto v : vars) vanishes = vanishes || e[v] > 0;
    if (vanishes) continue;
    Exponent out;
    out.reserve(sub.dimension());
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (std::find(vars.begin(), vars.end(), i) == vars.end()) out.push_back(e[i]);
    }
    r.add_term(out, c);
  }
  return r;
}

Poly Poly::embed(const Chart& target) const {
  std::vector<std::size_t> map(chart_.dimension());
  for (std::size_t i = 0; i < chart_.dimension(); ++i) {
    auto idx = target.index_of(chart_.name(i));
    if (!idx) {
      if (degree_in(i) > 0) fail(ErrorCode::ChartMismatch, "variable '" + chart_.name(i) + "' missing in target chart");
      map[i] = target.dimension();
    } else {
      map[i] = *idx;
    }
  }
  Poly r(target);
  for (const auto& [e, c] : terms_) {
    Exponent out(target.dimension(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i]) out[map[i]] = e[i];
    }
    r.add_term(out, c);
  }
  return r;
}

std::string rational_to_string(const Rational& r) {
  return r.get_str();
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c < 0;
    Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    std::ostringstream mono;
    bool any = false;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (any) mono << '*';
      mono << chart_.name(i);
      if (e[i] > 1) mono << '^' << e[i];
      any = true;
    }
    if (!any) {
      os << rational_to_string(mag);
    } else if (mag == 1) {
      os << mono.str();
    } else {
      os << rational_to_string(mag) << '*' << mono.str();
    }
  }
  return os.str();
}

Poly partial_derivative(const Poly& p, std::size_t var) {
  if (var >= p.chart().dimension()) fail(ErrorCode::UnknownVariable, "variable index out of range");
  Poly r(p.chart());
  for (const auto& [e, c] : p.terms()) {
    if (e[var] == 0) continue;
    Exponent d = e;
    d[var] -= 1;
    r.add_term(d, c * e[var]);
  }
  return r;
}

Poly partial_derivative(const Poly& p, std::string_view var) {
  return partial_derivative(p, p.chart().require_index(var));
}

std::optional<Poly> exact_divide(const Poly& f, const Poly& g) {
  require_same_chart(f.chart(), g.chart());
  if (g.is_zero()) fail(ErrorCode::DivisionByZero, "division by the zero polynomial");
  Poly q(f.chart());
  Poly r = f;
  const Exponent& lg = g.leading_exponent();
  const Rational& cg = g.leading_coefficient();
  while (!r.is_zero()) {
    const Exponent& lr = r.leading_exponent();
    if (!exp_divides(lg, lr)) return std::nullopt;
    Poly t = Poly::monomial(f.chart(), exp_sub(lr, lg), r.leading_coefficient() / cg);
    q += t;
    r -= t * g;
  }
  return q;
}

Rational content(const Poly& p) {
  mpz_class num = 0, den = 1;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    mpz_class n = abs(c.get_num());
    if (first) {
      num = n;
      den = c.get_den();
      first = false;
    } else {
      num = gcd(num, n);
      den = lcm(den, mpz_class(c.get_den()));
    }
  }
  if (first) return Rational(0);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Poly normalized(const Poly& p) {
  if (p.is_zero()) return p;
  Rational c = content(p);
  if (p.leading_coefficient() < 0) c = -c;
  Poly r = p;
  r *= Rational(1) / c;
  return r;
}

namespace {

// Coefficients of p viewed as a polynomial in `var` (keyed by degree).
std::map<unsigned, Poly> coefficients_in(const Poly& p, std::size_t var) {
  std::map<unsigned, Poly> out;
  for (const auto& [e, c] : p.terms()) {
    Exponent rest = e;
    unsigned d = rest[var];
    rest[var] = 0;
    out.try_emplace(d, p.chart()).first->second.add_term(rest, c);
  }
  return out;
}

Poly gcd_rec(const Poly& a, const Poly& b);

Poly content_in(const Poly& p, std::size_t var) {
  Poly g(p.chart());
  for (const auto& [d, c] : coefficients_in(p, var)) {
    g = gcd_rec(g, c);
    if (g.is_constant() && !g.is_zero()) break;
  }
  return g;
}

Poly divide_or_throw(const Poly& f, const Poly& g) {
  auto q = exact_divide(f, g);
  if (!q) fail(ErrorCode::Internal, "gcd: expected exact division");
  return *q;
}

Poly primitive_part(const Poly& p, std::size_t var) {
  return divide_or_throw(p, content_in(p, var));
}

Poly pseudo_remainder(Poly a, const Poly& b, std::size_t var) {
  const int db = b.degree_in(var);
  auto bc = coefficients_in(b, var);
  const Poly lb = bc.rbegin()->second;
  while (!a.is_zero() && a.degree_in(var) >= db) {
    const int da = a.degree_in(var);
    auto ac = coefficients_in(a, var);
    Exponent shift(a.chart().dimension(), 0);
    shift[var] = static_cast<std::uint32_t>(da - db);
    Poly t = ac.rbegin()->second * Poly::monomial(a.chart(), shift, 1);
    a = lb * a - t * b;
  }
  return a;
}

Poly gcd_rec(const Poly& a, const Poly& b) {
  if (a.is_zero()) return normalized(b);
  if (b.is_zero()) return normalized(a);
  if (a.is_constant() || b.is_constant()) return Poly::constant(a.chart(), 1);
  std::size_t var = a.chart().dimension();
  for (std::size_t i = 0; i < a.chart().dimension(); ++i) {
    if (a.depends_on(i) || b.depends_on(i)) {
      var = i;
      break;
    }
  }
  if (!a.depends_on(var)) return gcd_rec(a, content_in(b, var));
  if (!b.depends_on(var)) return gcd_rec(content_in(a, var), b);

  const Poly ca = content_in(a, var);
  const Poly cb = content_in(b, var);
  Poly pa = divide_or_throw(a, ca);
  Poly pb = divide_or_throw(b, cb);
  const Poly c = gcd_rec(ca, cb);
  if (pa.degree_in(var) < pb.degree_in(var)) std::swap(pa, pb);
  while (!pb.is_zero()) {
    Poly r = pseudo_remainder(pa, pb, var);
    pa = pb;
    if (r.is_zero()) break;
    if (r.degree_in(var) <= 0) {
      pa = Poly::constant(a.chart(), 1);
      break;
    }
    pb = normalized(primitive_part(r, var));
  }
  return normalized(primitive_part(pa, var) * c);
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  require_same_chart(a.chart(), b.chart());
  return gcd_rec(a, b);
}

Poly gcd_content(std::span<const Poly> polys) {
  if (polys.empty()) fail(ErrorCode::AllZero, "gcd of an empty list");
  Poly g(polys.front().chart());
  for (const auto& p : polys) g = gcd(g, p);
  if (g.is_zero()) fail(ErrorCode::AllZero, "gcd of all-zero inputs");
  return g;
}

Poly squarefree_part(const Poly& f) {
  if (f.is_zero()) fail(ErrorCode::ZeroPolynomial, "squarefree part of zero");
  Poly g = f;
  for (std::size_t i = 0; i < f.chart().dimension(); ++i) g = gcd(g, partial_derivative(f, i));
  return normalized(divide_or_throw(f, g));
}

}  // namespace dk
