#include "poisson.hpp"

#include "calculus.hpp"

namespace dk {

std::vector<std::vector<Rational>> SampleGrid::points(std::size_t n) const {
  std::vector<std::vector<Rational>> out;
  if (values.empty()) return out;
  std::size_t cap = 1;
  for (std::size_t i = 0; i < n; ++i) cap *= 3;
  std::vector<std::size_t> idx(n, 0);
  while (out.size() < cap) {
    std::vector<Rational> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = values[idx[i]];
    out.push_back(std::move(p));
    std::size_t pos = n;
    while (pos > 0) {
      --pos;
      if (++idx[pos] < values.size()) break;
      idx[pos] = 0;
      if (pos == 0) return out;
    }
    if (n == 0) break;
  }
  return out;
}

PoissonStruct::PoissonStruct(Multivector pi) : pi_(std::move(pi)), jac_(pi_.chart(), 3) {
  if (pi_.degree() != 2) fail(ErrorCode::DegreeError, "a Poisson structure is a bivector");
  jac_ = schouten_bracket(pi_, pi_);
}

PoissonCheck check_poisson(const Multivector& pi) {
  PoissonStruct p(pi);
  return {p.is_poisson(), p.jacobiator()};
}

namespace {

std::vector<Poly> component_list(const Multivector& m) {
  std::vector<Poly> out;
  for (const auto& [idx, c] : m.components()) out.push_back(c);
  return out;
}

bool all_constant(const Multivector& m) {
  for (const auto& [idx, c] : m.components()) {
    if (!c.is_constant()) return false;
  }
  return true;
}

}  // namespace

std::vector<DegeneracyLevel> degeneracy_ideals(const Multivector& pi) {
  std::vector<DegeneracyLevel> out;
  const int n = static_cast<int>(pi.chart().dimension());
  for (int k = 1; 2 * k <= n; ++k) {
    DegeneracyLevel lvl{k, component_list(partial_pfaffian(pi, k)), std::nullopt};
    for (const auto& cand : lvl.generators) {
      bool ok = true;
      for (const auto& other : lvl.generators) {
        if (!exact_divide(other, cand)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        lvl.principal = normalized(cand);
        break;
      }
    }
    out.push_back(std::move(lvl));
  }
  return out;
}

std::variant<DivisorTypeReport, NotDivisorType> divisor_type(const Multivector& pi, const SampleGrid& grid) {
  PoissonStruct ps(pi);
  const Chart& chart = pi.chart();
  int m = 0;
  Multivector top = partial_pfaffian(pi, 0);
  for (int k = 1; 2 * k <= static_cast<int>(chart.dimension()); ++k) {
    Multivector p = partial_pfaffian(pi, k);
    if (p.is_zero()) break;
    m = k;
    top = std::move(p);
  }
  auto comps = component_list(top);
  Poly g = gcd_content(comps);
  Multivector w = top.map_coefficients([&](const Poly& c) { return *exact_divide(c, g); });
  DivisorIdeal ideal = DivisorIdeal::make(g);
  Classification cls = classify(ideal);
  DivisorTypeReport r{m, cls.ideal, cls.cls, w, false, {}, {}};
  if (!ps.is_poisson()) r.warnings.push_back("bivector is not Poisson; divisor type computed for the bivector");
  if (all_constant(w)) {
    r.constant_line = true;
    return r;
  }
  // the origin first, then the grid
  auto pts = grid.points(chart.dimension());
  pts.insert(pts.begin(), std::vector<Rational>(chart.dimension(), Rational(0)));
  for (const auto& pt : pts) {
    bool vanishes = true;
    for (const auto& [idx, c] : w.components()) {
      if (c.evaluate(pt) != 0) {
        vanishes = false;
        break;
      }
    }
    if (vanishes) return NotDivisorType{"line part vanishes at a sample point", pt};
    r.sample_points.push_back(pt);
  }
  r.warnings.push_back("line condition certified by sampling only");
  return r;
}

std::variant<FrameMultivector, NotLiftable> lift_bivector(const Multivector& pi, const AnchorFrame& frame) {
  require_same_chart(pi.chart(), frame.chart());
  if (pi.degree() != 2 && !pi.is_zero()) fail(ErrorCode::DegreeError, "lift expects a bivector");
  const std::size_t n = frame.rank();
  PolyMatrix p = bivector_matrix(pi);
  PolyMatrix num = multiply(multiply(frame.adjugate(), p), transpose(frame.adjugate()));
  Poly den = frame.det() * frame.det();
  FrameMultivector out(frame.chart(), 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      auto q = exact_divide(num[i][j], den);
      if (!q) return NotLiftable{i, j, Fraction::reduced(num[i][j], den)};
      out.add({static_cast<int>(i), static_cast<int>(j)}, *q);
    }
  }
  return out;
}

std::variant<LiftCertificate, NotLiftable> lift(const Multivector& pi, const AnchorFrame& frame, const SampleGrid& grid) {
  auto lifted = lift_bivector(pi, frame);
  if (auto* bad = std::get_if<NotLiftable>(&lifted)) return *bad;
  const auto& pa = std::get<FrameMultivector>(lifted);
  const Chart& chart = frame.chart();
  const std::size_t n = frame.rank();

  if (!(pushforward(pa, frame) == pi)) fail(ErrorCode::Internal, "lift does not push forward to the input");

  // Top nonzero partial Pfaffian of the lift determines the residual ideal.
  Multivector as_coord(chart, 2);
  for (const auto& [idx, c] : pa.components()) as_coord.add(idx, c);
  Multivector top = partial_pfaffian(as_coord, 0);
  int m = 0;
  for (int k = 1; 2 * k <= static_cast<int>(n); ++k) {
    Multivector p = partial_pfaffian(as_coord, k);
    if (p.is_zero()) break;
    top = std::move(p);
    m = k;
  }
  std::vector<Poly> comps = component_list(top);
  DivisorIdeal residual = DivisorIdeal::make(gcd_content(comps));

  LiftCertificate c{frame, pa, residual, false, false, "", Poly(chart), Poly(chart), false};
  if (n % 2 == 0) {
    c.pf_pi = pfaffian(bivector_matrix(pi));
    c.pf_lift = pfaffian(bivector_matrix(as_coord));
    c.pfaffian_identity = c.pf_pi == frame.det() * c.pf_lift;
  } else {
    // No top Pfaffian in odd rank: compare the highest partial Pfaffians.
    FrameMultivector ftop(chart, top.degree());
    for (const auto& [idx, cc] : top.components()) ftop.add(idx, cc);
    c.pfaffian_identity = pushforward(ftop, frame) == partial_pfaffian(pi, m);
  }
  if (!c.pfaffian_identity) fail(ErrorCode::Internal, "Pfaffian identity failed for a lift");

  if (2 * static_cast<std::size_t>(m) != n) {
    c.evidence = "lift has rank " + std::to_string(2 * m) + " < " + std::to_string(n);
    return c;
  }
  if (c.pf_lift.is_constant()) {
    c.nondegenerate = true;
    c.evidence = "Pfaffian of lift is the nonzero constant " + c.pf_lift.to_string();
    return c;
  }
  std::vector<Rational> origin(n, Rational(0));
  Rational first = c.pf_lift.evaluate(origin);
  if (first == 0) {
    c.evidence = "Pfaffian of lift vanishes at the origin";
    return c;
  }
  for (const auto& pt : grid.points(n)) {
    Rational v = c.pf_lift.evaluate(pt);
    if (v == 0 || (v > 0) != (first > 0)) {
      std::string at;
      for (std::size_t i = 0; i < pt.size(); ++i) at += (i ? "," : "") + rational_to_string(pt[i]);
      c.evidence = "Pfaffian of lift " + std::string(v == 0 ? "vanishes" : "changes sign") + " at (" + at + ")";
      return c;
    }
  }
  c.nondegenerate = true;
  c.sampled = true;
  c.evidence = "Pfaffian of lift nonvanishing on sample points";
  return c;
}

Multivector hamiltonian_vf(const Multivector& pi, const Poly& f) {
  require_same_chart(pi.chart(), f.chart());
  const std::size_t n = pi.chart().dimension();
  PolyMatrix m = bivector_matrix(pi);
  std::vector<Poly> comps(n, Poly(pi.chart()));
  for (std::size_t i = 0; i < n; ++i) {
    Poly di = partial_derivative(f, i);
    if (di.is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (!m[i][j].is_zero()) comps[j] += di * m[i][j];
    }
  }
  return vector_field(pi.chart(), comps);
}

Poly poisson_bracket(const Multivector& pi, const Poly& f, const Poly& g) {
  return apply_vector(hamiltonian_vf(pi, f), g);
}

namespace {

Multivector raw_modular(const Multivector& pi, const Poly& g) {
  const std::size_t n = pi.chart().dimension();
  PolyMatrix m = bivector_matrix(pi);
  std::vector<Poly> comps(n, Poly(pi.chart()));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (!m[k][i].is_zero()) comps[i] += partial_derivative(g * m[k][i], k);
    }
  }
  return vector_field(pi.chart(), comps);
}

}  // namespace

Multivector modular_vf(const Multivector& pi) {
  if (pi.degree() != 2 && !pi.is_zero()) fail(ErrorCode::DegreeError, "modular field of a non-bivector");
  const Chart& chart = pi.chart();
  Multivector v = raw_modular(pi, Poly::constant(chart, 1));
  DiffForm mu = coordinate_volume(chart);
  for (std::size_t i = 0; i < chart.dimension(); ++i) {
    Poly f = Poly::variable(chart, i);
    DiffForm lhs = lie_derivative(hamiltonian_vf(pi, f), mu);
    DiffForm rhs = mu.scaled(Localized(-apply_vector(v, f)));
    if (!(lhs == rhs)) fail(ErrorCode::ConventionCheckFailed, "modular field fails its defining identity");
  }
  return v;
}

Multivector scaled_modular_vf(const Multivector& pi, const Poly& g) { return raw_modular(pi, g); }

bool poisson_vf_check(const Multivector& pi, const Multivector& v) { return lie_derivative(v, pi).is_zero(); }

namespace {

FoliationItem expand_item(std::string name, const Multivector& v, const AnchorFrame& frame) {
  FoliationItem it{std::move(name), v, std::nullopt, std::nullopt};
  auto r = expand_in_frame(v, frame);
  if (auto* c = std::get_if<std::vector<Poly>>(&r)) it.coefficients = *c;
  else it.witness = std::get<NotInModule>(r).witness;
  return it;
}

}  // namespace

ModularFoliationReport modular_foliation_report(const Multivector& pi, const AnchorFrame& frame) {
  const Chart& chart = pi.chart();
  ModularFoliationReport r{true, {}, expand_item("modular", modular_vf(pi), frame), {}};
  for (std::size_t i = 0; i < chart.dimension(); ++i) {
    r.hamiltonians.push_back(expand_item("H_" + chart.name(i), hamiltonian_vf(pi, Poly::variable(chart, i)), frame));
    r.ok = r.ok && r.hamiltonians.back().coefficients.has_value();
  }
  r.ok = r.ok && r.modular.coefficients.has_value();
  for (const auto& lvl : degeneracy_ideals(pi)) {
    if (!lvl.principal || lvl.principal->is_constant()) continue;
    DivisorIdeal I = DivisorIdeal::make(*lvl.principal);
    PreservesResult p = preserves(r.modular.field, I);
    r.ok = r.ok && p.preserved;
    r.ideals.emplace_back(I, std::move(p));
  }
  return r;
}

std::optional<std::vector<std::vector<Poly>>> distribution_lift(const Multivector& pi,
                                                                const std::vector<Multivector>& distribution) {
  const Chart& chart = pi.chart();
  const std::size_t n = chart.dimension(), r = distribution.size();
  if (r == 0 || r > n) fail(ErrorCode::BadParams, "distribution rank out of range");
  PolyMatrix d = zero_matrix(chart, n, r);
  for (std::size_t j = 0; j < r; ++j) {
    auto comps = vector_components(distribution[j]);
    for (std::size_t i = 0; i < n; ++i) d[i][j] = comps[i];
  }
  IndexSet cols;
  for (std::size_t j = 0; j < r; ++j) cols.push_back(static_cast<int>(j));
  // Find r rows with a nonzero minor.
  IndexSet rows;
  Poly det(chart);
  auto search = [&](auto&& self, int start) -> bool {
    if (rows.size() == r) {
      det = minor(d, rows, cols);
      return !det.is_zero();
    }
    for (int i = start; i < static_cast<int>(n); ++i) {
      rows.push_back(i);
      if (self(self, i + 1)) return true;
      rows.pop_back();
    }
    return false;
  };
  if (!search(search, 0)) fail(ErrorCode::DegenerateFrame, "distribution generators are dependent");
  PolyMatrix sq = zero_matrix(chart, r, r);
  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t b = 0; b < r; ++b) sq[a][b] = d[static_cast<std::size_t>(rows[a])][b];
  }
  PolyMatrix adj = adjugate(sq);
  PolyMatrix full = bivector_matrix(pi);
  PolyMatrix p = zero_matrix(chart, r, r);
  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t b = 0; b < r; ++b) p[a][b] = full[static_cast<std::size_t>(rows[a])][static_cast<std::size_t>(rows[b])];
  }
  PolyMatrix num = multiply(multiply(adj, p), transpose(adj));
  Poly den = det * det;
  std::vector<std::vector<Poly>> a(r, std::vector<Poly>(r, Poly(chart)));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      auto q = exact_divide(num[i][j], den);
      if (!q) return std::nullopt;
      a[i][j] = *q;
    }
  }
  // The restricted solve only sees r rows; confirm the whole bivector.
  Multivector back(chart, 2);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) {
      if (!a[i][j].is_zero()) back += wedge(distribution[i], distribution[j]).scaled(a[i][j]);
    }
  }
  if (!(back == pi)) return std::nullopt;
  return a;
}

namespace {

Multivector standard_pairs(const Chart& chart, std::size_t from) {
  Multivector w(chart, 2);
  for (std::size_t i = from; i + 1 < chart.dimension(); i += 2)
    w.add({static_cast<int>(i), static_cast<int>(i + 1)}, Poly::constant(chart, 1));
  return w;
}

// Scattering model in dimension 2n >= 4: the dual of
// omega = e1^e2 + sum_a x_{2a} e1^e_{2a+1} - 1/2 sum_a e_{2a}^e_{2a+1},
// the frame form of dz/z^3 ^ alpha0 - omega0/(2 z^2).
Multivector scattering_model(const Chart& chart, const AnchorFrame& frame) {
  const std::size_t n = chart.dimension();
  PolyMatrix om = zero_matrix(chart, n, n);
  auto set = [&](std::size_t i, std::size_t j, const Poly& v) {
    om[i][j] += v;
    om[j][i] -= v;
  };
  set(0, 1, Poly::constant(chart, 1));
  for (std::size_t a = 2; a + 1 < n; a += 2) {
    set(0, a + 1, Poly::variable(chart, a));
    set(a, a + 1, Poly::constant(chart, Rational(-1, 2)));
  }
  Poly det = determinant(om);
  if (!det.is_constant()) fail(ErrorCode::Internal, "scattering model form is degenerate");
  PolyMatrix inv = adjugate(om);
  FrameMultivector pa(chart, 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      // Pi_A = -omega^{-1}
      pa.add({static_cast<int>(i), static_cast<int>(j)}, inv[i][j] * (-1 / det.constant_term()));
    }
  }
  return pushforward(pa, frame);
}

}  // namespace

DarbouxModel darboux_catalog(const Chart& chart, const std::string& kind, int k, const Rational& lambda) {
  using T = DivisorClass::Tag;
  const std::size_t n = chart.dimension();
  if (n % 2 != 0) fail(ErrorCode::BadParams, "Darboux models need an even-dimensional chart");
  auto X = [&](std::size_t i) { return Poly::variable(chart, i); };
  auto D2 = [&](std::size_t i, std::size_t j, const Poly& c) {
    return Multivector::basis(chart, {static_cast<int>(i), static_cast<int>(j)}, c);
  };
  auto Dv = [&](std::size_t i, const Poly& c) { return Multivector::basis(chart, {static_cast<int>(i)}, c); };
  auto frame_of = [&](const std::string& fk, std::vector<std::size_t> vars, int pk = 0) {
    return catalog(chart, CatalogSpec{fk, std::move(vars), pk, {}});
  };

  DarbouxModel out{kind, Multivector(chart, 2), frame_of("tangent", {}), DivisorClass::simple(T::Trivial)};
  if (kind == "nondegenerate") {
    out.pi = standard_pairs(chart, 0);
  } else if (kind == "log" || kind == "bk") {
    int power = kind == "log" ? 1 : k;
    if (power < 1) fail(ErrorCode::BadParams, "bk needs k >= 1");
    out.pi = D2(0, 1, X(0).pow(static_cast<unsigned>(power))) + standard_pairs(chart, 2);
    out.frame = kind == "log" ? frame_of("log", {0}) : frame_of("bk", {0}, power);
    out.advertised = power == 1 ? DivisorClass::simple(T::Log) : DivisorClass::simple(T::BPower, power);
    if (kind == "bk") out.name = "bk(" + std::to_string(power) + ")";
  } else if (kind == "scattering") {
    out.frame = frame_of("scattering", {0});
    out.pi = n == 2 ? D2(0, 1, X(0).pow(3)) : scattering_model(chart, out.frame);
    out.advertised = DivisorClass::simple(T::BPower, static_cast<int>(n) + 1);
  } else if (kind == "elliptic") {
    if (n < 2 || lambda == 0) fail(ErrorCode::BadParams, "elliptic model needs lambda != 0");
    out.pi = D2(0, 1, (X(0) * X(0) + X(1) * X(1)) * lambda) + standard_pairs(chart, 2);
    out.frame = frame_of("elliptic", {0, 1});
    out.advertised = DivisorClass::simple(T::Elliptic);
    if (lambda != 1) out.name = "elliptic(" + rational_to_string(lambda) + ")";
  } else if (kind == "elliptic_zero") {
    if (n < 4) fail(ErrorCode::BadParams, "zero-residue elliptic model needs dimension >= 4");
    Multivector euler = Dv(0, X(0)) + Dv(1, X(1));
    Multivector rot = Dv(1, X(0)) - Dv(0, X(1));
    Poly one = Poly::constant(chart, 1);
    out.pi = wedge(euler, Dv(2, one)) + wedge(rot, Dv(3, one)) + standard_pairs(chart, 4);
    out.frame = frame_of("elliptic", {0, 1});
    out.advertised = DivisorClass::simple(T::Elliptic);
  } else if (kind == "elliptic_log") {
    out.pi = D2(0, 1, X(0) * (X(0) * X(0) + X(1) * X(1))) + standard_pairs(chart, 2);
    out.frame = frame_of("elliptic_log", {0, 1});
    out.advertised = DivisorClass::simple(T::EllipticLog);
  } else {
    fail(ErrorCode::BadParams, "unknown Darboux model '" + kind + "'");
  }
  if (!check_poisson(out.pi).ok) fail(ErrorCode::Internal, "Darboux model " + kind + " is not Poisson");
  return out;
}

}  // namespace dk
