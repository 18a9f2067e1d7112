#include "residue.hpp"

#include <algorithm>

#include "calculus.hpp"

namespace dk {

std::string flavor_name(ResidueFlavor f) {
  switch (f) {
    case ResidueFlavor::LogRes: return "LogRes";
    case ResidueFlavor::EllipticQ: return "EllipticQ";
    case ResidueFlavor::EllipticR: return "EllipticR";
    case ResidueFlavor::EllipticTheta: return "EllipticTheta";
    case ResidueFlavor::EllLogZ: return "EllLogZ";
    case ResidueFlavor::EllLogD: return "EllLogD";
  }
  return "?";
}

std::optional<ResidueFlavor> parse_flavor(std::string_view name) {
  for (auto f : {ResidueFlavor::LogRes, ResidueFlavor::EllipticQ, ResidueFlavor::EllipticR, ResidueFlavor::EllipticTheta,
                 ResidueFlavor::EllLogZ, ResidueFlavor::EllLogD}) {
    if (flavor_name(f) == name) return f;
  }
  return std::nullopt;
}

namespace {

bool contains(const std::vector<std::size_t>& v, std::size_t x) { return std::find(v.begin(), v.end(), x) != v.end(); }

Multivector restrict_field(const Multivector& v, const ResidueSpec& spec) {
  Multivector out(spec.sub_chart, 1);
  const Chart& chart = v.chart();
  for (const auto& [idx, c] : v.components()) {
    Poly r = c.restrict_to_zero(spec.locus, spec.sub_chart);
    auto var = static_cast<std::size_t>(idx[0]);
    if (contains(spec.locus, var)) {
      if (!r.is_zero()) fail(ErrorCode::Internal, "residual generator is not tangent to the locus");
      continue;
    }
    out.add({static_cast<int>(spec.sub_chart.require_index(chart.name(var)))}, r);
  }
  return out;
}

std::vector<std::string> basis_names(const ResidueSpec& spec) {
  std::vector<std::string> names;
  for (std::size_t p = 0; p < spec.residual_slots.size(); ++p) {
    const Multivector& g = spec.residual_frame->generators()[p];
    Multivector coord = Multivector::basis(spec.sub_chart, {static_cast<int>(p)}, Poly::constant(spec.sub_chart, 1));
    names.push_back(g == coord ? "d" + spec.sub_chart.name(p) : "e" + std::to_string(spec.residual_slots[p] + 1));
  }
  return names;
}

RestrictedForm empty_form(const ResidueSpec& spec, int degree) {
  std::vector<std::string> names = spec.residual_frame ? basis_names(spec) : std::vector<std::string>{};
  return {spec.sub_chart, std::move(names), CoframeForm(spec.sub_chart, std::max(degree, 0))};
}

}  // namespace

ResidueSpec make_residue_spec(const AnchorFrame& frame, ResidueFlavor flavor, std::optional<std::size_t> locus_var) {
  const FrameLabel& label = frame.label();
  auto mismatch = [&]() -> void {
    fail(ErrorCode::FlavorMismatch, flavor_name(flavor) + " does not apply to frame " + frame.describe());
  };
  ResidueSpec s{frame, flavor, {}, {}, {}, frame.chart(), {}, std::nullopt, {}};
  const Chart& chart = frame.chart();
  std::size_t x = 0, y = 0;
  switch (flavor) {
    case ResidueFlavor::LogRes: {
      if (label.kind != "log" && label.kind != "bk" && label.kind != "normal_crossing") mismatch();
      std::size_t z = label.vars.at(0);
      if (locus_var) {
        if (!contains(label.vars, *locus_var)) mismatch();
        z = *locus_var;
      } else if (label.vars.size() > 1) {
        fail(ErrorCode::FlavorMismatch, "normal crossing residue needs a hypersurface variable");
      }
      s.singular = {z};
      s.locus = {z};
      break;
    }
    case ResidueFlavor::EllipticQ:
    case ResidueFlavor::EllipticR:
    case ResidueFlavor::EllipticTheta:
      if (label.kind != "elliptic") mismatch();
      x = label.vars[0];
      y = label.vars[1];
      s.locus = {std::min(x, y), std::max(x, y)};
      if (flavor == ResidueFlavor::EllipticQ) s.singular = {x, y};
      else if (flavor == ResidueFlavor::EllipticR) s.singular = {x}, s.excluded = {y};
      else s.singular = {y}, s.excluded = {x};
      break;
    case ResidueFlavor::EllLogZ:
    case ResidueFlavor::EllLogD:
      if (label.kind != "elliptic_log") mismatch();
      x = label.vars[0];
      y = label.vars[1];
      if (flavor == ResidueFlavor::EllLogZ) {
        s.singular = {y};
        s.locus = {x};
      } else {
        s.singular = {y, x};
        s.locus = {std::min(x, y), std::max(x, y)};
      }
      break;
  }
  s.sub_chart = chart.without(s.locus);
  for (std::size_t p = 0; p < s.sub_chart.dimension(); ++p) {
    std::size_t var = chart.require_index(s.sub_chart.name(p));
    // The hypersurface residue keeps the radial generator at y's place.
    s.residual_slots.push_back(flavor == ResidueFlavor::EllLogZ && var == y ? x : var);
  }
  if (s.sub_chart.dimension() == 0) return s;

  std::vector<Multivector> gens;
  for (auto slot : s.residual_slots) gens.push_back(restrict_field(frame.generators()[slot], s));
  FrameLabel rl{"custom", {}, 0, "custom"};
  bool coordinate = true;
  for (std::size_t p = 0; p < gens.size(); ++p) {
    coordinate = coordinate &&
                 gens[p] == Multivector::basis(s.sub_chart, {static_cast<int>(p)}, Poly::constant(s.sub_chart, 1));
  }
  if (coordinate) rl = {"tangent", {}, 0, "tangent()"};
  if (flavor == ResidueFlavor::EllLogZ) {
    std::size_t p = s.sub_chart.require_index(chart.name(y));
    rl = {"log", {p}, 1, "log(" + chart.name(y) + ")"};
  }
  s.residual_frame = AnchorFrame::make(s.sub_chart, std::move(gens), std::move(rl)).certify();

  const AnchorFrame certified = frame.certify();
  const auto& c = certified.structure();
  for (auto r : s.residual_slots) {
    Poly t(chart);
    for (auto sg : s.singular) t += c[sg][r][sg];
    s.twist.push_back(t.restrict_to_zero(s.locus, s.sub_chart));
  }
  return s;
}

std::string RestrictedForm::to_string() const {
  return form.to_string_with([this](int i) { return basis.at(static_cast<std::size_t>(i)); });
}

int residue_sign(const ResidueSpec& spec) { return spec.singular.size() % 2 == 0 ? 1 : -1; }

RestrictedForm residue(const CoframeForm& w, const ResidueSpec& spec, bool force) {
  require_same_chart(w.chart(), spec.frame.chart());
  const int l = static_cast<int>(spec.singular.size());
  if (!force && (spec.flavor == ResidueFlavor::EllipticR || spec.flavor == ResidueFlavor::EllipticTheta)) {
    for (const auto& [I, c] : w.components()) {
      bool both = std::includes(I.begin(), I.end(), spec.locus.begin(), spec.locus.end());
      // locus = {x, y} as chart variables, which coincide with the singular slots here
      if (both && !c.restrict_to_zero(spec.locus, spec.sub_chart).is_zero())
        fail(ErrorCode::NonzeroHigherResidue, "EllipticQ residue is nonzero; pass force to proceed");
    }
  }
  RestrictedForm out = empty_form(spec, w.degree() - l);
  if (w.degree() < l) return out;
  std::vector<int> position(spec.frame.rank(), -1);
  for (std::size_t p = 0; p < spec.residual_slots.size(); ++p) position[spec.residual_slots[p]] = static_cast<int>(p);

  for (const auto& [I, c] : w.components()) {
    bool skip = false;
    for (auto e : spec.excluded) skip = skip || std::binary_search(I.begin(), I.end(), static_cast<int>(e));
    for (auto sg : spec.singular) skip = skip || !std::binary_search(I.begin(), I.end(), static_cast<int>(sg));
    if (skip) continue;
    // e^I = sign * e^S ^ e^J
    IndexSet seq;
    for (auto sg : spec.singular) seq.push_back(static_cast<int>(sg));
    IndexSet rest;
    for (int i : I) {
      if (!contains(spec.singular, static_cast<std::size_t>(i))) rest.push_back(i);
    }
    seq.insert(seq.end(), rest.begin(), rest.end());
    int sign = sort_sign(seq);
    IndexSet target;
    for (int i : rest) {
      int p = position[static_cast<std::size_t>(i)];
      if (p < 0) fail(ErrorCode::Internal, "residual slot missing");
      target.push_back(p);
    }
    sign *= sort_sign(target);
    Poly r = c.restrict_to_zero(spec.locus, spec.sub_chart);
    out.form.add(target, sign > 0 ? r : -r);
  }
  return out;
}

RestrictedForm residual_d(const RestrictedForm& r, const ResidueSpec& spec) {
  RestrictedForm out = empty_form(spec, r.form.degree() + 1);
  if (!spec.residual_frame) return out;
  out.form = algebroid_d(r.form, *spec.residual_frame);
  CoframeForm theta(spec.sub_chart, 1);
  for (std::size_t p = 0; p < spec.twist.size(); ++p) theta.add({static_cast<int>(p)}, spec.twist[p]);
  out.form += wedge(theta, r.form);
  return out;
}

CochainResult cochain_check(const CoframeForm& w, const ResidueSpec& spec, bool force) {
  RestrictedForm lhs = residue(algebroid_d(w, spec.frame), spec, force);
  RestrictedForm rhs = residual_d(residue(w, spec, force), spec);
  if (residue_sign(spec) < 0) rhs.form = -rhs.form;
  bool ok = lhs.form == rhs.form;
  return {ok, std::move(lhs), std::move(rhs)};
}

CoframeForm symplectic_dual(const FrameMultivector& lifted) {
  const Chart& chart = lifted.chart();
  const std::size_t n = chart.dimension();
  PolyMatrix m = zero_matrix(chart, n, n);
  for (const auto& [idx, c] : lifted.components()) {
    m[static_cast<std::size_t>(idx[0])][static_cast<std::size_t>(idx[1])] = c;
    m[static_cast<std::size_t>(idx[1])][static_cast<std::size_t>(idx[0])] = -c;
  }
  Poly pf = pfaffian(m);
  if (pf.is_zero() || !pf.is_constant())
    fail(ErrorCode::DegenerateSpinor, "lifted bivector is not invertible over polynomials (Pfaffian " + pf.to_string() + ")");
  PolyMatrix adj = adjugate(m);
  Rational det = pf.constant_term() * pf.constant_term();
  CoframeForm w(chart, 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) w.add({static_cast<int>(i), static_cast<int>(j)}, adj[i][j] * (-1 / det));
  }
  return w;
}

namespace {

CoframeForm wedge_power(const CoframeForm& w, int k) {
  CoframeForm acc = CoframeForm::scalar(Poly::constant(w.chart(), 1));
  for (int i = 0; i < k; ++i) acc = wedge(acc, w);
  return acc;
}

Rational factorial(int k) {
  Rational f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

// Terms of w free of the listed slots, restricted to the locus.
RestrictedForm regular_part(const CoframeForm& w, const ResidueSpec& spec, const std::vector<std::size_t>& slots) {
  RestrictedForm out = empty_form(spec, w.degree());
  std::vector<int> position(spec.frame.rank(), -1);
  for (std::size_t p = 0; p < spec.residual_slots.size(); ++p) position[spec.residual_slots[p]] = static_cast<int>(p);
  for (const auto& [I, c] : w.components()) {
    bool skip = false;
    for (auto s : slots) skip = skip || std::binary_search(I.begin(), I.end(), static_cast<int>(s));
    if (skip) continue;
    IndexSet target;
    for (int i : I) target.push_back(position[static_cast<std::size_t>(i)]);
    int sign = sort_sign(target);
    Poly r = c.restrict_to_zero(spec.locus, spec.sub_chart);
    out.form.add(target, sign > 0 ? r : -r);
  }
  return out;
}

}  // namespace

SpinorReport cosymplectic_spinor(const CoframeForm& omega, const AnchorFrame& frame, bool elliptic) {
  if (omega.degree() != 2) fail(ErrorCode::DegreeError, "spinor needs a 2-form");
  const int n = static_cast<int>(frame.rank()) / 2;
  ResidueSpec spec = make_residue_spec(frame, elliptic ? ResidueFlavor::EllipticQ : ResidueFlavor::LogRes);
  RestrictedForm q = residue(omega, spec);
  if (elliptic && !q.form.is_zero())
    fail(ErrorCode::NonzeroEllipticResidue, "EllipticQ residue of omega is " + q.to_string() + ", not 0");

  std::vector<std::size_t> sing = spec.singular;
  RestrictedForm beta = regular_part(omega, spec, sing);
  SpinorReport r{spec.flavor, {}, q, std::nullopt, beta, true, false, false, ""};

  for (int k = 1; k <= n; ++k) {
    CoframeForm pk = wedge_power(omega, k).scaled(1 / factorial(k));
    r.components.push_back(residue(pk, spec));
    r.closed = r.closed && residual_d(r.components.back(), spec).form.is_zero();
  }
  const RestrictedForm& top = r.components.back();
  r.top_nonzero = !top.form.is_zero();

  auto beta_pow = [&](int k) { return wedge_power(beta.form, k); };
  if (!elliptic) {
    r.alpha = q;
    CoframeForm expect = wedge(r.alpha.form, beta_pow(n - 1)).scaled(1 / factorial(n - 1));
    r.identity = top.form == expect;
    r.identity_text = "Res(w^n/n!) = a^b^(n-1)/(n-1)!";
  } else {
    r.alpha = residue(omega, make_residue_spec(frame, ResidueFlavor::EllipticR));
    r.alpha2 = residue(omega, make_residue_spec(frame, ResidueFlavor::EllipticTheta));
    CoframeForm a12 = wedge(r.alpha.form, r.alpha2->form);
    bool quad = n >= 2 && r.components[1].form == -a12;
    bool topid = n >= 2 && top.form == -wedge(a12, beta_pow(n - 2)).scaled(1 / factorial(n - 2));
    r.identity = quad && topid;
    r.identity_text = "Res_q(w^2/2!) = -a1^a2 and Res_q(w^n/n!) = -a1^a2^b^(n-2)/(n-2)!";
  }
  if (!r.top_nonzero) fail(ErrorCode::DegenerateSpinor, "top component of the spinor vanishes");
  return r;
}

}  // namespace dk
