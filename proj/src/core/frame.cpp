#include "frame.hpp"

#include <algorithm>
#include <set>

#include "calculus.hpp"

namespace dk {

Fraction Fraction::reduced(const Poly& num, const Poly& den) {
  if (den.is_zero()) fail(ErrorCode::DivisionByZero, "fraction with zero denominator");
  Poly g = gcd(num, den);
  Poly n = *exact_divide(num, g);
  Poly d = *exact_divide(den, g);
  Rational lc = d.leading_coefficient();
  return {n * (1 / lc), d * (1 / lc)};
}

std::string Fraction::to_string() const {
  auto wrap = [](const Poly& p) {
    std::string s = p.to_string();
    return p.term_count() > 1 ? "(" + s + ")" : s;
  };
  if (den.is_constant()) return num.to_string();
  return wrap(num) + "/" + wrap(den);
}

namespace {

std::string var_list(const Chart& c, const std::vector<std::size_t>& vars) {
  std::string s;
  for (std::size_t i = 0; i < vars.size(); ++i) s += (i ? "," : "") + c.name(vars[i]);
  return s;
}

std::vector<IndexSet> subsets(int n, int k) {
  std::vector<IndexSet> out;
  IndexSet cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// c = adj * v / det, componentwise; first non-polynomial entry is reported.
std::variant<std::vector<Poly>, NotInModule> solve_frame(const AnchorFrame& f, const std::vector<Poly>& v) {
  const std::size_t n = f.rank();
  std::vector<Poly> out;
  for (std::size_t j = 0; j < n; ++j) {
    Poly num(f.chart());
    for (std::size_t k = 0; k < n; ++k) {
      if (!v[k].is_zero() && !f.adjugate()[j][k].is_zero()) num += f.adjugate()[j][k] * v[k];
    }
    auto q = exact_divide(num, f.det());
    if (!q) return NotInModule{j, Fraction::reduced(num, f.det())};
    out.push_back(std::move(*q));
  }
  return out;
}

}  // namespace

AnchorFrame AnchorFrame::make(const Chart& chart, std::vector<Multivector> generators, FrameLabel label) {
  if (generators.size() != chart.dimension())
    fail(ErrorCode::DegreeMismatch, "a frame needs exactly " + std::to_string(chart.dimension()) + " generators");
  AnchorFrame f(chart);
  f.rho_ = zero_matrix(chart, chart.dimension(), chart.dimension());
  for (std::size_t j = 0; j < generators.size(); ++j) {
    require_same_chart(generators[j].chart(), chart);
    if (generators[j].degree() != 1 && !generators[j].is_zero())
      fail(ErrorCode::DegreeMismatch, "frame generators must be vector fields");
    auto comps = vector_components(generators[j]);
    for (std::size_t i = 0; i < comps.size(); ++i) f.rho_[i][j] = comps[i];
  }
  f.det_ = determinant(f.rho_);
  if (f.det_.is_zero()) fail(ErrorCode::DegenerateFrame, "the generators are not independent (anchor determinant is 0)");
  f.adj_ = dk::adjugate(f.rho_);
  f.gens_ = std::move(generators);
  if (label.text.empty()) label.text = "custom";
  f.label_ = std::move(label);
  return f;
}

const StructureTable& AnchorFrame::structure() const {
  if (!structure_) fail(ErrorCode::NotInvolutive, "frame has not been certified involutive");
  return *structure_;
}

AnchorFrame AnchorFrame::certify() const {
  if (structure_) return *this;
  auto r = check_involutive(*this);
  if (auto* w = std::get_if<NotInvolutiveWitness>(&r)) {
    fail(ErrorCode::NotInvolutive, "[e" + std::to_string(w->i + 1) + ",e" + std::to_string(w->j + 1) +
                                       "] has non-polynomial coefficient " + w->witness.to_string() + " on e" +
                                       std::to_string(w->k + 1));
  }
  AnchorFrame f = *this;
  f.structure_ = std::get<StructureTable>(std::move(r));
  return f;
}

bool AnchorFrame::same_generators(const AnchorFrame& o) const {
  return chart_ == o.chart_ && gens_ == o.gens_;
}

AnchorFrame with_label(const AnchorFrame& f, FrameLabel label) {
  AnchorFrame r = f;
  r.label_ = std::move(label);
  return r;
}

std::variant<StructureTable, NotInvolutiveWitness> check_involutive(const AnchorFrame& frame) {
  const std::size_t n = frame.rank();
  const Poly zero(frame.chart());
  StructureTable c(n, std::vector<std::vector<Poly>>(n, std::vector<Poly>(n, zero)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Multivector b = lie_bracket(frame.generators()[i], frame.generators()[j]);
      auto r = solve_frame(frame, vector_components(b.is_zero() ? Multivector(frame.chart(), 1) : b));
      if (auto* bad = std::get_if<NotInModule>(&r)) return NotInvolutiveWitness{i, j, bad->index, bad->witness};
      auto& coeffs = std::get<std::vector<Poly>>(r);
      for (std::size_t k = 0; k < n; ++k) {
        c[i][j][k] = coeffs[k];
        c[j][i][k] = -coeffs[k];
      }
    }
  }
  return c;
}

DivisorIdeal frame_divisor(const AnchorFrame& frame) { return DivisorIdeal::make(frame.det()); }

std::variant<std::vector<Poly>, NotInModule> expand_in_frame(const Multivector& v, const AnchorFrame& frame) {
  require_same_chart(v.chart(), frame.chart());
  if (v.degree() != 1 && !v.is_zero()) fail(ErrorCode::DegreeMismatch, "expected a vector field");
  return solve_frame(frame, vector_components(v.is_zero() ? Multivector(frame.chart(), 1) : v));
}

std::variant<FrameMultivector, NotInModule> expand_multivector(const Multivector& m, const AnchorFrame& frame) {
  require_same_chart(m.chart(), frame.chart());
  const int k = m.degree();
  const int n = static_cast<int>(frame.rank());
  Poly den = frame.det().pow(static_cast<unsigned>(k));
  FrameMultivector out(frame.chart(), k);
  std::size_t slot = 0;
  for (const auto& I : subsets(n, k)) {
    Poly num(frame.chart());
    for (const auto& [J, c] : m.components()) {
      Poly mi = minor(frame.adjugate(), I, J);
      if (!mi.is_zero()) num += c * mi;
    }
    auto q = exact_divide(num, den);
    if (!q) return NotInModule{slot, Fraction::reduced(num, den)};
    out.add(I, *q);
    ++slot;
  }
  return out;
}

Multivector pushforward(const FrameMultivector& m, const AnchorFrame& frame) {
  require_same_chart(m.chart(), frame.chart());
  Multivector out(frame.chart(), m.degree());
  for (const auto& J : subsets(static_cast<int>(frame.rank()), m.degree())) {
    Poly acc(frame.chart());
    for (const auto& [I, c] : m.components()) {
      Poly mi = minor(frame.anchor(), J, I);
      if (!mi.is_zero()) acc += c * mi;
    }
    out.add(J, acc);
  }
  return out;
}

DiffForm coframe_to_form(const CoframeForm& w, const AnchorFrame& frame) {
  require_same_chart(w.chart(), frame.chart());
  const int k = w.degree();
  DiffForm out(frame.chart(), k);
  for (const auto& J : subsets(static_cast<int>(frame.rank()), k)) {
    Poly num(frame.chart());
    for (const auto& [I, c] : w.components()) {
      Poly mi = minor(frame.adjugate(), I, J);
      if (!mi.is_zero()) num += c * mi;
    }
    out.add(J, Localized(num, frame.det(), static_cast<unsigned>(k)));
  }
  return out;
}

std::optional<CoframeForm> form_to_coframe(const DiffForm& w, const AnchorFrame& frame) {
  require_same_chart(w.chart(), frame.chart());
  CoframeForm out(frame.chart(), w.degree());
  for (const auto& I : subsets(static_cast<int>(frame.rank()), w.degree())) {
    Localized acc(frame.chart());
    for (const auto& [J, c] : w.components()) {
      Poly mi = minor(frame.anchor(), J, I);
      if (!mi.is_zero()) acc += c * mi;
    }
    if (!acc.is_polynomial()) return std::nullopt;
    out.add(I, acc.as_poly());
  }
  return out;
}

CoframeForm pullback_form(const DiffForm& w, const AnchorFrame& frame) {
  auto r = form_to_coframe(w, frame);
  if (!r) fail(ErrorCode::Internal, "pullback of a polynomial form left the frame module");
  return *r;
}

CoframeForm algebroid_d(const CoframeForm& w, const AnchorFrame& frame) {
  DiffForm d = exterior_derivative(coframe_to_form(w, frame));
  auto r = form_to_coframe(d, frame);
  if (!r) fail(ErrorCode::NotInvolutive, "algebroid differential is not polynomial; frame is not involutive");
  return *r;
}

AnchorFrame catalog(const Chart& chart, const CatalogSpec& spec) {
  const std::size_t n = chart.dimension();
  auto need = [&](std::size_t count, bool at_least = false) {
    if (at_least ? spec.vars.size() < count : spec.vars.size() != count)
      fail(ErrorCode::BadParams, spec.kind + " expects " + (at_least ? "at least " : "") + std::to_string(count) +
                                     " variable(s)");
    std::set<std::size_t> seen(spec.vars.begin(), spec.vars.end());
    if (seen.size() != spec.vars.size()) fail(ErrorCode::BadParams, spec.kind + " variables must be distinct");
    for (auto v : spec.vars) {
      if (v >= n) fail(ErrorCode::UnknownVariable, "variable index out of range");
    }
  };
  auto D = [&](std::size_t i, const Poly& c) {
    Multivector v(chart, 1);
    v.add({static_cast<int>(i)}, c);
    return v;
  };
  auto X = [&](std::size_t i) { return Poly::variable(chart, i); };
  const Poly one = Poly::constant(chart, 1);
  std::vector<Multivector> g;
  for (std::size_t i = 0; i < n; ++i) g.push_back(D(i, one));
  FrameLabel label{spec.kind, spec.vars, spec.k, ""};

  if (spec.kind == "tangent") {
    need(0);
    label.text = "tangent()";
  } else if (spec.kind == "log" || spec.kind == "bk") {
    need(1);
    int k = spec.kind == "log" ? 1 : spec.k;
    if (k < 1) fail(ErrorCode::BadParams, "bk needs a power k >= 1");
    std::size_t z = spec.vars[0];
    g[z] = D(z, X(z).pow(static_cast<unsigned>(k)));
    label.k = k;
    label.text = spec.kind == "log" ? "log(" + chart.name(z) + ")" : "bk(" + chart.name(z) + "," + std::to_string(k) + ")";
  } else if (spec.kind == "zero" || spec.kind == "scattering") {
    need(1);
    std::size_t z = spec.vars[0];
    for (std::size_t i = 0; i < n; ++i) g[i] = D(i, X(z));
    if (spec.kind == "scattering") g[z] = D(z, X(z) * X(z));
    label.text = spec.kind + "(" + chart.name(z) + ")";
  } else if (spec.kind == "normal_crossing") {
    need(1, true);
    for (auto z : spec.vars) g[z] = D(z, X(z));
    label.text = "normal_crossing(" + var_list(chart, spec.vars) + ")";
  } else if (spec.kind == "elliptic" || spec.kind == "elliptic_log") {
    need(2);
    std::size_t x = spec.vars[0], y = spec.vars[1];
    g[x] = D(x, X(x)) + D(y, X(y));
    if (spec.kind == "elliptic") g[y] = D(y, X(x)) - D(x, X(y));
    else g[y] = D(x, X(x) * X(y)) - D(y, X(x) * X(x));
    label.text = spec.kind + "(" + var_list(chart, spec.vars) + ")";
  } else if (spec.kind == "custom") {
    g = spec.custom;
    label.text = "custom";
  } else {
    fail(ErrorCode::BadParams, "unknown frame kind '" + spec.kind + "'");
  }
  return AnchorFrame::make(chart, std::move(g), std::move(label)).certify();
}

AnchorFrame lower_modify(const AnchorFrame& frame, const std::vector<std::size_t>& keep, const DivisorIdeal& ideal) {
  require_same_chart(frame.chart(), ideal.chart());
  const std::size_t n = frame.rank();
  std::vector<bool> kept(n, false);
  for (auto i : keep) {
    if (i >= n) fail(ErrorCode::BadParams, "generator index out of range");
    kept[i] = true;
  }
  const Poly& g = ideal.generator();
  for (std::size_t i = 0; i < n; ++i) {
    if (kept[i] && !preserves(frame.generators()[i], ideal).preserved)
      fail(ErrorCode::NotASubalgebroid, "e" + std::to_string(i + 1) + " is not tangent to " + ideal.to_string());
  }
  const AnchorFrame certified = frame.certify();
  const auto& c = certified.structure();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!kept[i] || !kept[j]) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (kept[k] || c[i][j][k].is_zero()) continue;
        if (!exact_divide(c[i][j][k], g))
          fail(ErrorCode::NotASubalgebroid, "[e" + std::to_string(i + 1) + ",e" + std::to_string(j + 1) +
                                                "] leaves the kept span along e" + std::to_string(k + 1));
      }
    }
  }
  std::vector<Multivector> gens;
  std::string keep_text;
  for (std::size_t i = 0; i < n; ++i) {
    gens.push_back(kept[i] ? frame.generators()[i] : frame.generators()[i].scaled(g));
    if (kept[i]) keep_text += (keep_text.empty() ? "" : ",") + std::to_string(i + 1);
  }
  FrameLabel label{"lower", {}, 0, "lower(" + frame.describe() + ",{" + keep_text + "}," + g.to_string() + ")"};
  AnchorFrame out = AnchorFrame::make(frame.chart(), std::move(gens), std::move(label));
  try {
    return out.certify();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotInvolutive) fail(ErrorCode::InvolutivityLost, e.what());
    throw;
  }
}

AnchorFrame upper_modify(const AnchorFrame& frame, const std::vector<std::size_t>& divide, const DivisorIdeal& ideal) {
  require_same_chart(frame.chart(), ideal.chart());
  const std::size_t n = frame.rank();
  std::vector<Multivector> gens = frame.generators();
  std::set<std::size_t> which(divide.begin(), divide.end());
  std::string text;
  for (auto i : which) {
    if (i >= n) fail(ErrorCode::BadParams, "generator index out of range");
    Multivector q(frame.chart(), 1);
    for (const auto& [idx, c] : gens[i].components()) {
      auto d = exact_divide(c, ideal.generator());
      if (!d) fail(ErrorCode::NotDivisible, "e" + std::to_string(i + 1) + " is not divisible by " + ideal.generator().to_string());
      q.add(idx, *d);
    }
    gens[i] = q;
    text += (text.empty() ? "" : ",") + std::to_string(i + 1);
  }
  FrameLabel label{"upper", {}, 0, "upper(" + frame.describe() + ",{" + text + "}," + ideal.generator().to_string() + ")"};
  return AnchorFrame::make(frame.chart(), std::move(gens), std::move(label)).certify();
}

namespace {

// Positions whose generator differs from the coordinate field, and every
// variable those generators touch.
void footprint(const AnchorFrame& f, std::set<std::size_t>& modified, std::set<std::size_t>& touched) {
  const Chart& c = f.chart();
  for (std::size_t i = 0; i < f.rank(); ++i) {
    Multivector coord(c, 1);
    coord.add({static_cast<int>(i)}, Poly::constant(c, 1));
    if (f.generators()[i] == coord) continue;
    modified.insert(i);
    touched.insert(i);
    for (const auto& [idx, coef] : f.generators()[i].components()) {
      touched.insert(static_cast<std::size_t>(idx[0]));
      for (std::size_t v = 0; v < c.dimension(); ++v) {
        if (coef.depends_on(v)) touched.insert(v);
      }
    }
  }
}

}  // namespace

AnchorFrame fiber_product(const AnchorFrame& a, const AnchorFrame& b) {
  require_same_chart(a.chart(), b.chart());
  std::set<std::size_t> ma, ta, mb, tb;
  footprint(a, ma, ta);
  footprint(b, mb, tb);
  for (auto v : ta) {
    if (tb.count(v)) fail(ErrorCode::UnsupportedOverlap, "frames share variable " + a.chart().name(v));
  }
  std::vector<Multivector> gens = a.generators();
  for (auto i : mb) gens[i] = b.generators()[i];

  FrameLabel label{"fiber", {}, 0, ""};
  auto nc_vars = [](const AnchorFrame& f, std::vector<std::size_t>& out) {
    const auto& l = f.label();
    if (l.kind == "tangent") return true;
    if (l.kind == "log" || l.kind == "normal_crossing") {
      out.insert(out.end(), l.vars.begin(), l.vars.end());
      return true;
    }
    return false;
  };
  std::vector<std::size_t> vars;
  if (nc_vars(a, vars) && nc_vars(b, vars)) {
    std::sort(vars.begin(), vars.end());
    if (vars.empty()) label = {"tangent", {}, 0, "tangent()"};
    else if (vars.size() == 1) label = {"log", vars, 1, "log(" + a.chart().name(vars[0]) + ")"};
    else label = {"normal_crossing", vars, 0, "normal_crossing(" + var_list(a.chart(), vars) + ")"};
  } else if (mb.empty()) {
    label = a.label();
  } else if (ma.empty()) {
    label = b.label();
  } else {
    label.text = "fiber(" + a.describe() + "," + b.describe() + ")";
  }
  return AnchorFrame::make(a.chart(), std::move(gens), std::move(label)).certify();
}

IdealAlgebroidReport verify_ideal_algebroid(const AnchorFrame& frame, const DivisorIdeal& ideal) {
  require_same_chart(frame.chart(), ideal.chart());
  IdealAlgebroidReport r;
  auto inv = check_involutive(frame);
  r.involutive = std::holds_alternative<StructureTable>(inv);
  if (!r.involutive) r.failure = std::get<NotInvolutiveWitness>(inv);
  r.divisor_matches = frame_divisor(frame) == ideal;
  bool all = true;
  for (const auto& g : frame.generators()) {
    bool p = preserves(g, ideal).preserved;
    r.generator_preserves.push_back(p);
    all = all && p;
  }
  r.ok = r.involutive && r.divisor_matches && all;
  return r;
}

}  // namespace dk
