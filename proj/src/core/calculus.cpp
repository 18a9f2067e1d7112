#include "calculus.hpp"

namespace dk {

int merge_sign(const IndexSet& a, const IndexSet& b, IndexSet& out) {
  out.clear();
  out.reserve(a.size() + b.size());
  int inversions = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i] < b[j])) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j] < a[i]) {
      inversions += static_cast<int>(a.size() - i);
      out.push_back(b[j++]);
    } else {
      return 0;
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

int sort_sign(IndexSet& seq) {
  int sign = 1;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    for (std::size_t j = 0; j + 1 < seq.size() - i; ++j) {
      if (seq[j] == seq[j + 1]) return 0;
      if (seq[j] > seq[j + 1]) {
        std::swap(seq[j], seq[j + 1]);
        sign = -sign;
      }
    }
  }
  for (std::size_t i = 1; i < seq.size(); ++i) {
    if (seq[i - 1] == seq[i]) return 0;
  }
  return sign;
}

Multivector vector_field(const Chart& chart, const std::vector<Poly>& components) {
  if (components.size() != chart.dimension()) fail(ErrorCode::DegreeMismatch, "vector field needs one component per variable");
  Multivector v(chart, 1);
  for (std::size_t i = 0; i < components.size(); ++i) v.add({static_cast<int>(i)}, components[i]);
  return v;
}

std::vector<Poly> vector_components(const Multivector& v) {
  if (v.degree() != 1 && !v.is_zero()) fail(ErrorCode::DegreeMismatch, "expected a vector field");
  std::vector<Poly> out(v.chart().dimension(), Poly(v.chart()));
  for (const auto& [idx, c] : v.components()) out[static_cast<std::size_t>(idx[0])] = c;
  return out;
}

Poly apply_vector(const Multivector& v, const Poly& f) {
  require_same_chart(v.chart(), f.chart());
  Poly r(f.chart());
  for (const auto& [idx, c] : v.components()) r += c * partial_derivative(f, static_cast<std::size_t>(idx[0]));
  return r;
}

DiffForm coordinate_volume(const Chart& chart) {
  IndexSet all(chart.dimension());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  return DiffForm::basis(chart, all, Localized(Poly::constant(chart, 1)));
}

DiffForm to_form(const CoframeForm& w) {
  DiffForm r(w.chart(), w.degree());
  for (const auto& [idx, c] : w.components()) r.add(idx, Localized(c));
  return r;
}

namespace {

// Right derivative with respect to the odd generator for slot i.
Multivector right_derivative(const Multivector& p, int i) {
  Multivector r(p.chart(), std::max(p.degree() - 1, 0));
  if (p.degree() == 0) return r;
  for (const auto& [idx, c] : p.components()) {
    auto it = std::find(idx.begin(), idx.end(), i);
    if (it == idx.end()) continue;
    const auto pos = static_cast<int>(it - idx.begin());
    IndexSet rest = idx;
    rest.erase(rest.begin() + pos);
    const bool odd = (static_cast<int>(idx.size()) - 1 - pos) % 2 != 0;
    r.add(rest, odd ? -c : c);
  }
  return r;
}

Multivector coefficient_derivative(const Multivector& p, std::size_t i) {
  return p.map_coefficients([i](const Poly& c) { return partial_derivative(c, i); });
}

}  // namespace

Multivector schouten_bracket(const Multivector& a, const Multivector& b) {
  require_same_chart(a.chart(), b.chart());
  const int p = a.degree(), q = b.degree();
  const int out_degree = p + q - 1;
  if (out_degree < 0) return Multivector(a.chart(), 0);
  Multivector r(a.chart(), out_degree);
  const bool flip = ((p - 1) * (q - 1)) % 2 != 0;
  for (std::size_t i = 0; i < a.chart().dimension(); ++i) {
    const int slot = static_cast<int>(i);
    if (p > 0) r += wedge(right_derivative(a, slot), coefficient_derivative(b, i));
    if (q > 0) {
      Multivector t = wedge(right_derivative(b, slot), coefficient_derivative(a, i));
      if (flip) r += t;
      else r -= t;
    }
  }
  return r;
}

Multivector lie_bracket(const Multivector& x, const Multivector& y) {
  require_same_chart(x.chart(), y.chart());
  const auto xs = vector_components(x), ys = vector_components(y);
  std::vector<Poly> out;
  for (std::size_t j = 0; j < xs.size(); ++j) out.push_back(apply_vector(x, ys[j]) - apply_vector(y, xs[j]));
  return vector_field(x.chart(), out);
}

Multivector lie_derivative(const Multivector& v, const Multivector& t) {
  if (v.degree() != 1) fail(ErrorCode::DegreeMismatch, "Lie derivative along a non-vector");
  return schouten_bracket(v, t);
}

DiffForm lie_derivative(const Multivector& v, const DiffForm& w) {
  if (v.degree() != 1) fail(ErrorCode::DegreeMismatch, "Lie derivative along a non-vector");
  DiffForm r = interior_product(v, exterior_derivative(w));
  if (w.degree() > 0) r += exterior_derivative(interior_product(v, w));
  return r;
}

Multivector partial_pfaffian(const Multivector& pi, int k) {
  if (pi.degree() != 2) fail(ErrorCode::DegreeError, "partial Pfaffian of a non-bivector");
  if (k < 0 || 2 * k > static_cast<int>(pi.chart().dimension())) fail(ErrorCode::BadParams, "Pfaffian index out of range");
  Multivector acc = Multivector::scalar(Poly::constant(pi.chart(), 1));
  for (int j = 1; j <= k; ++j) acc = wedge(acc, pi).scaled(Rational(1, j));
  return acc;
}

DiffForm exterior_derivative(const DiffForm& w) {
  const auto n = w.chart().dimension();
  DiffForm r(w.chart(), w.degree() + 1);
  if (w.degree() >= static_cast<int>(n)) return r;
  IndexSet merged;
  for (const auto& [idx, c] : w.components()) {
    for (std::size_t j = 0; j < n; ++j) {
      int s = merge_sign({static_cast<int>(j)}, idx, merged);
      if (s == 0) continue;
      Localized d = partial_derivative(c, j);
      r.add(merged, s > 0 ? d : -d);
    }
  }
  return r;
}

DiffForm interior_product(const Multivector& v, const DiffForm& w) {
  require_same_chart(v.chart(), w.chart());
  if (v.degree() != 1) fail(ErrorCode::DegreeMismatch, "interior product with a non-vector");
  if (w.degree() == 0) return DiffForm(w.chart(), 0);
  DiffForm r(w.chart(), w.degree() - 1);
  for (const auto& [idx, c] : w.components()) {
    for (std::size_t k = 0; k < idx.size(); ++k) {
      const Poly vk = v.coefficient({idx[k]});
      if (vk.is_zero()) continue;
      IndexSet rest = idx;
      rest.erase(rest.begin() + static_cast<long>(k));
      Localized t = c * vk;
      r.add(rest, k % 2 == 0 ? t : -t);
    }
  }
  return r;
}

Localized pairing(const DiffForm& w, const Multivector& m) {
  require_same_chart(w.chart(), m.chart());
  if (w.degree() != m.degree() && !(w.is_zero() || m.is_zero()))
    fail(ErrorCode::DegreeMismatch, "pairing of a " + std::to_string(w.degree()) + "-form with a " +
                                        std::to_string(m.degree()) + "-vector");
  Localized r(w.chart());
  for (const auto& [idx, c] : w.components()) {
    auto it = m.components().find(idx);
    if (it != m.components().end()) r += c * it->second;
  }
  return r;
}

std::vector<std::vector<Poly>> bivector_matrix(const Multivector& pi) {
  if (pi.degree() != 2 && !pi.is_zero()) fail(ErrorCode::DegreeError, "expected a bivector");
  const auto n = pi.chart().dimension();
  std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n, Poly(pi.chart())));
  for (const auto& [idx, c] : pi.components()) {
    const auto i = static_cast<std::size_t>(idx[0]), j = static_cast<std::size_t>(idx[1]);
    m[i][j] = c;
    m[j][i] = -c;
  }
  return m;
}

Multivector bivector_from_matrix(const Chart& chart, const std::vector<std::vector<Poly>>& m) {
  Multivector pi(chart, 2);
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) pi.add({static_cast<int>(i), static_cast<int>(j)}, m[i][j]);
  }
  return pi;
}

int max_degree(const Multivector& m) {
  int d = -1;
  for (const auto& [idx, c] : m.components()) d = std::max(d, c.total_degree());
  return d;
}

}  // namespace dk
