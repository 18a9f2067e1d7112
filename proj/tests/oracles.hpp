#pragma once

#include "core/linalg.hpp"
#include "support.hpp"

// Independent reference formulas used to cross-check the engine.
namespace dkt {

// [X,Y]^i = X^j d_j Y^i - Y^j d_j X^i, straight from the definition.
inline Multivector bracket_oracle(const Multivector& x, const Multivector& y) {
  const Chart& c = x.chart();
  Multivector r(c, 1);
  for (std::size_t i = 0; i < c.dimension(); ++i) {
    Poly s(c);
    for (std::size_t j = 0; j < c.dimension(); ++j) {
      s += x.coefficient({int(j)}) * partial_derivative(y.coefficient({int(i)}), j);
      s -= y.coefficient({int(j)}) * partial_derivative(x.coefficient({int(i)}), j);
    }
    r.add({int(i)}, s);
  }
  return r;
}

// w(e_{i1}, ..., e_{ik}) for an arbitrary index tuple.
inline Poly value(const CoframeForm& w, IndexSet seq) {
  int s = sort_sign(seq);
  if (s == 0) return Poly(w.chart());
  Poly c = w.coefficient(seq);
  return s > 0 ? c : -c;
}

// Koszul formula for d_A on a frame basis.
inline CoframeForm koszul(const CoframeForm& w, const AnchorFrame& f) {
  const int k = w.degree();
  const auto& c = f.structure();
  CoframeForm r(w.chart(), k + 1);
  for (unsigned mask = 0; mask < (1u << f.rank()); ++mask) {
    if (__builtin_popcount(mask) != k + 1) continue;
    IndexSet idx = combination(mask, f.rank());
    Poly s(w.chart());
    for (int i = 0; i <= k; ++i) {
      IndexSet rest = idx;
      rest.erase(rest.begin() + i);
      Poly t = apply_vector(f.generators()[std::size_t(idx[std::size_t(i)])], value(w, rest));
      s += sign_pow(i) == 1 ? t : -t;
    }
    for (int i = 0; i <= k; ++i) {
      for (int j = i + 1; j <= k; ++j) {
        IndexSet rest;
        for (int m = 0; m <= k; ++m)
          if (m != i && m != j) rest.push_back(idx[std::size_t(m)]);
        for (std::size_t m = 0; m < f.rank(); ++m) {
          const Poly& coef = c[std::size_t(idx[std::size_t(i)])][std::size_t(idx[std::size_t(j)])][m];
          if (coef.is_zero()) continue;
          IndexSet seq{int(m)};
          seq.insert(seq.end(), rest.begin(), rest.end());
          Poly t = coef * value(w, seq);
          s += sign_pow(i + j) == 1 ? t : -t;
        }
      }
    }
    r.add(idx, s);
  }
  return r;
}

// T(df, dg, dh) for a 3-vector T.
inline Poly evaluate3(const Multivector& t, const Poly& f, const Poly& g, const Poly& h) {
  Poly s(t.chart());
  for (const auto& [idx, coef] : t.components()) {
    PolyMatrix m;
    for (const Poly* p : {&f, &g, &h}) {
      std::vector<Poly> row;
      for (int i : idx) row.push_back(partial_derivative(*p, std::size_t(i)));
      m.push_back(row);
    }
    s += coef * determinant(m);
  }
  return s;
}

inline Poly pb(const Multivector& pi, const Poly& f, const Poly& g) {
  Poly s(pi.chart());
  for (const auto& [idx, coef] : pi.components()) {
    s += coef * (partial_derivative(f, idx[0]) * partial_derivative(g, idx[1]) -
                 partial_derivative(f, idx[1]) * partial_derivative(g, idx[0]));
  }
  return s;
}

}  // namespace dkt
