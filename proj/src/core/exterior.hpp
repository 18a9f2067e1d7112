#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "error.hpp"
#include "localized.hpp"
#include "poly.hpp"

namespace dk {

/// Strictly increasing basis index tuple.
using IndexSet = std::vector<int>;

/// Sign of merging two increasing tuples, or 0 when they overlap.
int merge_sign(const IndexSet& a, const IndexSet& b, IndexSet& out);

/// Parity sign of the permutation sorting `seq` (0 if it has repeats).
int sort_sign(IndexSet& seq);

struct CoordVectorTag {
  static std::string basis(const Chart& c, int i) { return "D" + c.name(static_cast<std::size_t>(i)); }
};
struct CoordFormTag {
  static std::string basis(const Chart& c, int i) { return "d" + c.name(static_cast<std::size_t>(i)); }
};
struct FrameVectorTag {
  static std::string basis(const Chart&, int i) { return "e" + std::to_string(i + 1); }
};
struct CoframeTag {
  static std::string basis(const Chart&, int i) { return "e" + std::to_string(i + 1); }
};

/// A homogeneous element of an exterior algebra on `chart.dimension()`
/// basis slots with coefficients in C.
template <class C, class Tag>
class Exterior {
 public:
  using Coefficient = C;
  using Components = std::map<IndexSet, C>;

  Exterior(Chart chart, int degree) : chart_(std::move(chart)), degree_(degree) {
    if (degree < 0) fail(ErrorCode::DegreeError, "negative degree");
  }

  static Exterior scalar(const C& c) {
    Exterior e(c.chart(), 0);
    e.add({}, c);
    return e;
  }

  static Exterior basis(const Chart& chart, IndexSet idx, const C& c) {
    Exterior e(chart, static_cast<int>(idx.size()));
    e.add(std::move(idx), c);
    return e;
  }

  const Chart& chart() const { return chart_; }
  int degree() const { return degree_; }
  const Components& components() const { return comps_; }
  bool is_zero() const { return comps_.empty(); }

  C coefficient(const IndexSet& idx) const {
    auto it = comps_.find(idx);
    return it == comps_.end() ? C(chart_) : it->second;
  }

  /// Accumulates c into the component at idx (idx must be increasing).
  void add(IndexSet idx, const C& c) {
    if (static_cast<int>(idx.size()) != degree_) fail(ErrorCode::DegreeMismatch, "component of wrong degree");
    for (std::size_t k = 0; k < idx.size(); ++k) {
      if (idx[k] < 0 || idx[k] >= static_cast<int>(chart_.dimension()) || (k > 0 && idx[k - 1] >= idx[k]))
        fail(ErrorCode::Internal, "invalid basis index tuple");
    }
    if (c.is_zero()) return;
    auto [it, inserted] = comps_.try_emplace(std::move(idx), c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) comps_.erase(it);
    }
  }

  Exterior operator-() const {
    Exterior r(chart_, degree_);
    for (const auto& [i, c] : comps_) r.comps_.emplace(i, -c);
    return r;
  }

  Exterior& operator+=(const Exterior& o) {
    require_same_chart(chart_, o.chart_);
    if (o.degree_ != degree_) {
      if (o.is_zero()) return *this;
      if (is_zero()) return *this = o;
      fail(ErrorCode::DegreeMismatch, "adding elements of different degree");
    }
    for (const auto& [i, c] : o.comps_) add(i, c);
    return *this;
  }
  Exterior& operator-=(const Exterior& o) { return *this += -o; }
  friend Exterior operator+(Exterior a, const Exterior& b) { return a += b; }
  friend Exterior operator-(Exterior a, const Exterior& b) { return a -= b; }

  template <class S>
  Exterior scaled(const S& s) const {
    Exterior r(chart_, degree_);
    for (const auto& [i, c] : comps_) r.add(i, c * s);
    return r;
  }

  template <class F>
  Exterior map_coefficients(F&& f) const {
    Exterior r(chart_, degree_);
    for (const auto& [i, c] : comps_) r.add(i, f(c));
    return r;
  }

  bool operator==(const Exterior& o) const {
    if (!(chart_ == o.chart_)) return false;
    if (is_zero() && o.is_zero()) return true;
    return degree_ == o.degree_ && comps_ == o.comps_;
  }

  std::string basis_string(const IndexSet& idx) const {
    return basis_string(idx, [this](int i) { return Tag::basis(chart_, i); });
  }

  template <class Namer>
  static std::string basis_string(const IndexSet& idx, Namer&& name) {
    std::string s;
    for (std::size_t k = 0; k < idx.size(); ++k) {
      if (k) s += "^^";
      s += name(idx[k]);
    }
    return s;
  }

  std::string to_string() const {
    return to_string_with([this](int i) { return Tag::basis(chart_, i); });
  }

  /// Printing with caller-chosen basis symbols.
  template <class Namer>
  std::string to_string_with(Namer&& name) const {
    auto basis_string = [&](const IndexSet& idx) { return Exterior::basis_string(idx, name); };
    if (comps_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [idx, c] : comps_) {
      std::string coef = c.to_string();
      std::string term;
      if (idx.empty()) {
        term = coef;
      } else if (coef == "1") {
        term = basis_string(idx);
      } else if (coef == "-1") {
        term = "-" + basis_string(idx);
      } else if (is_single_term(c)) {
        term = coef + "*" + basis_string(idx);
      } else {
        term = "(" + coef + ")*" + basis_string(idx);
      }
      if (first) {
        os << term;
      } else if (term[0] == '-') {
        os << " - " << term.substr(1);
      } else {
        os << " + " << term;
      }
      first = false;
    }
    return os.str();
  }

 private:
  static bool is_single_term(const Poly& p) { return p.term_count() == 1; }
  static bool is_single_term(const Localized& l) { return l.is_polynomial() && l.numerator().term_count() == 1; }

  Chart chart_;
  int degree_;
  Components comps_;
};

template <class C, class Tag>
Exterior<C, Tag> wedge(const Exterior<C, Tag>& a, const Exterior<C, Tag>& b) {
  require_same_chart(a.chart(), b.chart());
  Exterior<C, Tag> r(a.chart(), a.degree() + b.degree());
  IndexSet merged;
  for (const auto& [ia, ca] : a.components()) {
    for (const auto& [ib, cb] : b.components()) {
      int s = merge_sign(ia, ib, merged);
      if (s == 0) continue;
      C prod = ca * cb;
      r.add(merged, s > 0 ? prod : -prod);
    }
  }
  return r;
}

using Multivector = Exterior<Poly, CoordVectorTag>;
using DiffForm = Exterior<Localized, CoordFormTag>;
using FrameMultivector = Exterior<Poly, FrameVectorTag>;
using CoframeForm = Exterior<Poly, CoframeTag>;

}  // namespace dk
