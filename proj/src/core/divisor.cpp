#include "divisor.hpp"

#include <algorithm>

#include "calculus.hpp"

namespace dk {

std::string DivisorClass::to_string() const {
  switch (tag) {
    case Tag::Trivial: return "Trivial";
    case Tag::Log: return "Log";
    case Tag::NormalCrossingLog: return "NormalCrossingLog(" + std::to_string(param) + ")";
    case Tag::BPower: return "BPower(" + std::to_string(param) + ")";
    case Tag::Elliptic: return "Elliptic";
    case Tag::EllipticLog: return "EllipticLog";
    case Tag::Unclassified: return "Unclassified";
    case Tag::Product: {
      std::string s = "Product(";
      for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? ", " : "") + parts[i].to_string();
      return s + ")";
    }
  }
  return "Unclassified";
}

DivisorIdeal DivisorIdeal::make(const Poly& generator) {
  if (generator.is_zero()) fail(ErrorCode::ZeroGenerator, "the zero function does not generate a divisor ideal");
  return DivisorIdeal(normalized(generator));
}

DivisorIdeal DivisorIdeal::with_atoms(std::vector<AtomFactor> atoms) const {
  DivisorIdeal r = *this;
  r.atoms_ = std::move(atoms);
  return r;
}

DivisorIdeal product(const DivisorIdeal& a, const DivisorIdeal& b) {
  require_same_chart(a.chart(), b.chart());
  return DivisorIdeal::make(a.generator() * b.generator());
}

bool divides(const DivisorIdeal& divisor, const DivisorIdeal& ideal) {
  require_same_chart(divisor.chart(), ideal.chart());
  return exact_divide(ideal.generator(), divisor.generator()).has_value();
}

DivisorIdeal radical(const DivisorIdeal& ideal) {
  return DivisorIdeal::make(squarefree_part(ideal.generator()));
}

DivisorIdeal power(const DivisorIdeal& ideal, unsigned k) {
  return DivisorIdeal::make(ideal.generator().pow(k));
}

bool is_positive_definite_quadratic(const Poly& q, std::size_t u, std::size_t v) {
  if (q.total_degree() != 2) return false;
  Rational a = 0, b = 0, c = 0;
  for (const auto& [e, coef] : q.terms()) {
    unsigned other = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i != u && i != v) other += e[i];
    }
    if (other != 0 || e[u] + e[v] != 2) return false;
    if (e[u] == 2) a = coef;
    else if (e[v] == 2) c = coef;
    else b = coef;
  }
  // [[a, b/2], [b/2, c]]: positive trace and determinant.
  return a + c > 0 && 4 * a * c - b * b > 0;
}

namespace {

bool is_linear_atom(const Poly& p) {
  if (p.total_degree() != 1) return false;
  return true;
}

bool is_graph(const Poly& p) {
  if (p.total_degree() < 1) return false;
  for (std::size_t i = 0; i < p.chart().dimension(); ++i) {
    Poly d = partial_derivative(p, i);
    if (d.is_constant() && !d.is_zero()) return true;
  }
  return false;
}

// Lowest-degree homogeneous part.
Poly lowest_part(const Poly& p) {
  int low = -1;
  for (const auto& [e, c] : p.terms()) {
    int d = 0;
    for (auto x : e) d += static_cast<int>(x);
    if (low < 0 || d < low) low = d;
  }
  Poly r(p.chart());
  for (const auto& [e, c] : p.terms()) {
    int d = 0;
    for (auto x : e) d += static_cast<int>(x);
    if (d == low) r.add_term(e, c);
  }
  return r;
}

unsigned divide_out(Poly& rest, const Poly& factor) {
  unsigned k = 0;
  if (factor.is_constant()) return 0;
  while (true) {
    auto q = exact_divide(rest, factor);
    if (!q) break;
    rest = std::move(*q);
    ++k;
  }
  return k;
}

std::vector<Rational> linear_part(const Poly& p) {
  std::vector<Rational> g(p.chart().dimension(), Rational(0));
  for (const auto& [e, c] : p.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 1) g[i] = c;
    }
  }
  return g;
}

std::size_t rank_of(std::vector<std::vector<Rational>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      Rational f = rows[r][col] / rows[rank][col];
      for (std::size_t k = 0; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

// A linear form vanishes on {u = v = 0} iff it is a combination of u and v.
bool vanishes_on_pair_zero(const Poly& linear, std::size_t u, std::size_t v) {
  if (linear.constant_term() != 0) return false;
  auto g = linear_part(linear);
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i != u && i != v && g[i] != 0) return false;
  }
  return true;
}

DivisorClass part_for(const AtomFactor& f) {
  using T = DivisorClass::Tag;
  if (f.atom.kind == Atom::Kind::LogLinear || f.atom.kind == Atom::Kind::SmoothGraph) {
    return f.multiplicity == 1 ? DivisorClass::simple(T::Log) : DivisorClass::simple(T::BPower, static_cast<int>(f.multiplicity));
  }
  return DivisorClass::simple(T::Elliptic);
}

}  // namespace

Classification classify(const DivisorIdeal& ideal, std::span<const Poly> candidates) {
  using T = DivisorClass::Tag;
  const Chart& chart = ideal.chart();
  Poly rest = ideal.generator();
  std::vector<AtomFactor> atoms;

  auto try_linear = [&](const Poly& cand) {
    Poly l = normalized(cand);
    for (const auto& a : atoms) {
      if (a.atom.poly == l) return;
    }
    unsigned k = divide_out(rest, l);
    if (k > 0) atoms.push_back({Atom{Atom::Kind::LogLinear, l}, k});
  };
  auto try_elliptic = [&](const Poly& cand, std::size_t u, std::size_t v) {
    Poly q = normalized(cand);
    for (const auto& a : atoms) {
      if (a.atom.poly == q) return false;
    }
    unsigned k = divide_out(rest, q);
    if (k > 0) atoms.push_back({Atom{Atom::Kind::EllipticQuadratic, q, u, v}, k});
    return k > 0;
  };

  if (rest.is_constant()) return {DivisorClass::simple(T::Trivial), ideal.with_atoms({})};

  for (const auto& cand : candidates) {
    require_same_chart(cand.chart(), chart);
    if (is_linear_atom(cand)) {
      try_linear(cand);
      continue;
    }
    bool matched = false;
    for (std::size_t u = 0; u < chart.dimension() && !matched; ++u) {
      for (std::size_t v = u + 1; v < chart.dimension() && !matched; ++v) {
        if (is_positive_definite_quadratic(normalized(cand), u, v)) matched = try_elliptic(cand, u, v) || true;
      }
    }
    if (!matched && !cand.is_constant()) {
      Poly o = normalized(cand);
      unsigned k = divide_out(rest, o);
      if (k > 0) atoms.push_back({Atom{is_graph(o) ? Atom::Kind::SmoothGraph : Atom::Kind::Opaque, o}, k});
    }
  }
  for (std::size_t i = 0; i < chart.dimension(); ++i) try_linear(Poly::variable(chart, i));

  bool progress = true;
  while (progress && !rest.is_constant()) {
    progress = false;
    for (std::size_t u = 0; u < chart.dimension() && !progress; ++u) {
      for (std::size_t v = u + 1; v < chart.dimension() && !progress; ++v) {
        std::vector<std::size_t> others;
        for (std::size_t i = 0; i < chart.dimension(); ++i) {
          if (i != u && i != v) others.push_back(i);
        }
        // Set the other variables to zero, keeping the chart.
        Poly slice(chart);
        for (const auto& [e, c] : rest.terms()) {
          bool keep = true;
          for (auto o : others) keep = keep && e[o] == 0;
          if (keep) slice.add_term(e, c);
        }
        if (slice.is_zero()) continue;
        Poly low = lowest_part(slice);
        if (low.total_degree() < 2) continue;
        Poly q = squarefree_part(low);
        if (is_positive_definite_quadratic(q, u, v)) progress = try_elliptic(q, u, v);
      }
    }
  }
  if (rest.total_degree() == 1) try_linear(rest);

  if (!rest.is_constant()) {
    Poly s = normalized(squarefree_part(rest));
    if (is_graph(s)) {
      unsigned k = divide_out(rest, s);
      atoms.push_back({Atom{Atom::Kind::SmoothGraph, s}, k});
    }
  }
  if (!rest.is_constant()) {
    atoms.push_back({Atom{Atom::Kind::Opaque, normalized(rest)}, 1});
  }
  DivisorIdeal decorated = ideal.with_atoms(atoms);

  std::vector<const AtomFactor*> logs, ells;
  bool opaque = false, curved = false;
  for (const auto& a : atoms) {
    curved = curved || a.atom.kind == Atom::Kind::SmoothGraph;
    if (a.atom.kind == Atom::Kind::LogLinear || a.atom.kind == Atom::Kind::SmoothGraph) logs.push_back(&a);
    else if (a.atom.kind == Atom::Kind::EllipticQuadratic) ells.push_back(&a);
    else opaque = true;
  }
  if (opaque) return {DivisorClass::simple(T::Unclassified), decorated};

  auto product_class = [&]() {
    DivisorClass p = DivisorClass::simple(T::Product);
    for (const auto& a : atoms) {
      for (unsigned k = 0; k < (a.atom.kind == Atom::Kind::EllipticQuadratic ? a.multiplicity : 1u); ++k)
        p.parts.push_back(part_for(a));
    }
    return p;
  };

  if (ells.empty()) {
    if (logs.size() == 1) {
      if (logs[0]->multiplicity == 1) return {DivisorClass::simple(T::Log), decorated};
      return {DivisorClass::simple(T::BPower, static_cast<int>(logs[0]->multiplicity)), decorated};
    }
    bool simple = !curved && std::all_of(logs.begin(), logs.end(), [](auto* a) { return a->multiplicity == 1; });
    std::vector<std::vector<Rational>> grads;
    for (auto* a : logs) grads.push_back(linear_part(a->atom.poly));
    if (simple && rank_of(grads) == logs.size())
      return {DivisorClass::simple(T::NormalCrossingLog, static_cast<int>(logs.size())), decorated};
    return {product_class(), decorated};
  }
  if (ells.size() == 1 && ells[0]->multiplicity == 1) {
    if (logs.empty()) return {DivisorClass::simple(T::Elliptic), decorated};
    if (logs.size() == 1 && logs[0]->multiplicity == 1 && !curved &&
        vanishes_on_pair_zero(logs[0]->atom.poly, ells[0]->atom.first, ells[0]->atom.second))
      return {DivisorClass::simple(T::EllipticLog), decorated};
  }
  return {product_class(), decorated};
}

PreservesResult preserves(const Multivector& v, const DivisorIdeal& ideal) {
  require_same_chart(v.chart(), ideal.chart());
  PreservesResult r{false, apply_vector(v, ideal.generator()), std::nullopt};
  r.certificate = exact_divide(r.derivative, ideal.generator());
  r.preserved = r.certificate.has_value();
  return r;
}

}  // namespace dk
