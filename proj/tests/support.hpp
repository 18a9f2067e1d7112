#pragma once

#include <random>
#include <string>
#include <vector>

#include "core/calculus.hpp"
#include "core/frame.hpp"
#include "dsl/evaluator.hpp"
#include "dsl/parser.hpp"

namespace dkt {

using namespace dk;

inline Chart chart(std::vector<std::string> names) { return Chart::make(std::move(names)); }

// Small readers so tests can state values as source text.
inline Poly P(const Chart& c, const std::string& src) {
  dsl::Evaluator ev(c, {});
  return ev.eval_poly(*dsl::parse_expression(src));
}

inline Multivector M(const Chart& c, const std::string& src, int degree = -1) {
  dsl::Evaluator ev(c, {});
  return ev.eval_multivector(*dsl::parse_expression(src), degree);
}

inline CoframeForm W(const AnchorFrame& f, const std::string& src) {
  dsl::Evaluator ev(f.chart(), {});
  return ev.eval_coframe(*dsl::parse_expression(src), f);
}

inline AnchorFrame F(const Chart& c, const std::string& src) {
  dsl::Evaluator ev(c, {});
  return ev.eval_frame(*dsl::parse_expression(src));
}

inline IndexSet combination(unsigned mask, std::size_t n) {
  IndexSet s;
  for (std::size_t i = 0; i < n; ++i) {
    if (mask & (1u << i)) s.push_back(static_cast<int>(i));
  }
  return s;
}

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen); }

  Poly poly(const Chart& c, int max_degree, int terms = 3) {
    Poly p(c);
    for (int t = 0; t < terms; ++t) {
      Exponent e(c.dimension(), 0);
      int budget = integer(0, max_degree);
      for (int k = 0; k < budget; ++k) e[static_cast<std::size_t>(integer(0, static_cast<int>(c.dimension()) - 1))]++;
      p.add_term(e, Rational(integer(-3, 3)));
    }
    return p;
  }

  template <class X>
  X element(const Chart& c, std::size_t slots, int degree, int max_coeff_degree) {
    X x(c, degree);
    for (unsigned mask = 0; mask < (1u << slots); ++mask) {
      if (__builtin_popcount(mask) != degree) continue;
      if (integer(0, 2) == 0) continue;
      x.add(combination(mask, slots), poly(c, max_coeff_degree, 2));
    }
    return x;
  }

  Multivector multivector(const Chart& c, int degree, int max_coeff_degree) {
    return element<Multivector>(c, c.dimension(), degree, max_coeff_degree);
  }
  CoframeForm coframe(const AnchorFrame& f, int degree, int max_coeff_degree) {
    return element<CoframeForm>(f.chart(), f.rank(), degree, max_coeff_degree);
  }
  FrameMultivector frame_multivector(const AnchorFrame& f, int degree, int max_coeff_degree) {
    return element<FrameMultivector>(f.chart(), f.rank(), degree, max_coeff_degree);
  }
};

inline int sign_pow(int e) { return e % 2 == 0 ? 1 : -1; }

}  // namespace dkt
