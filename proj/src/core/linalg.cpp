#include "linalg.hpp"

#include <unordered_map>

namespace dk {

PolyMatrix zero_matrix(const Chart& chart, std::size_t rows, std::size_t cols) {
  return PolyMatrix(rows, std::vector<Poly>(cols, Poly(chart)));
}

PolyMatrix transpose(const PolyMatrix& m) {
  if (m.empty()) return m;
  PolyMatrix t = zero_matrix(m[0][0].chart(), m[0].size(), m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  }
  return t;
}

PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.empty() || b.empty()) return {};
  if (a[0].size() != b.size()) fail(ErrorCode::DegreeMismatch, "matrix shapes do not match");
  PolyMatrix r = zero_matrix(a[0][0].chart(), a.size(), b[0].size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < b[0].size(); ++j) {
        if (!b[k][j].is_zero()) r[i][j] += a[i][k] * b[k][j];
      }
    }
  }
  return r;
}

namespace {

// Laplace expansion along successive rows, memoized on the set of used columns.
class MinorSolver {
 public:
  MinorSolver(const PolyMatrix& m, const IndexSet& rows, const IndexSet& cols) : m_(m), rows_(rows), cols_(cols) {}

  Poly solve() { return expand(0, 0); }

 private:
  Poly expand(std::size_t depth, unsigned used) {
    const Chart& chart = m_[0][0].chart();
    if (depth == rows_.size()) return Poly::constant(chart, 1);
    auto it = memo_.find(used);
    if (it != memo_.end()) return it->second;
    Poly acc(chart);
    int sign = 1;
    for (std::size_t c = 0; c < cols_.size(); ++c) {
      if (used & (1u << c)) continue;
      const Poly& entry = m_[static_cast<std::size_t>(rows_[depth])][static_cast<std::size_t>(cols_[c])];
      if (!entry.is_zero()) {
        Poly sub = expand(depth + 1, used | (1u << c));
        if (!sub.is_zero()) {
          if (sign > 0) acc += entry * sub;
          else acc -= entry * sub;
        }
      }
      sign = -sign;
    }
    memo_.emplace(used, acc);
    return acc;
  }

  const PolyMatrix& m_;
  const IndexSet& rows_;
  const IndexSet& cols_;
  std::unordered_map<unsigned, Poly> memo_;
};

IndexSet iota(std::size_t n) {
  IndexSet r(n);
  for (std::size_t i = 0; i < n; ++i) r[i] = static_cast<int>(i);
  return r;
}

}  // namespace

Poly minor(const PolyMatrix& m, const IndexSet& rows, const IndexSet& cols) {
  if (rows.size() != cols.size()) fail(ErrorCode::DegreeMismatch, "minor needs a square selection");
  if (m.empty()) fail(ErrorCode::Internal, "minor of an empty matrix");
  if (rows.empty()) return Poly::constant(m[0][0].chart(), 1);
  return MinorSolver(m, rows, cols).solve();
}

Poly determinant(const PolyMatrix& m) {
  const IndexSet all = iota(m.size());
  return minor(m, all, all);
}

PolyMatrix adjugate(const PolyMatrix& m) {
  const std::size_t n = m.size();
  PolyMatrix adj = zero_matrix(m[0][0].chart(), n, n);
  if (n == 1) {
    adj[0][0] = Poly::constant(m[0][0].chart(), 1);
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      IndexSet rows, cols;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) rows.push_back(static_cast<int>(k));
        if (k != i) cols.push_back(static_cast<int>(k));
      }
      Poly c = minor(m, rows, cols);
      adj[i][j] = (i + j) % 2 == 0 ? c : -c;
    }
  }
  return adj;
}

namespace {

Poly pfaffian_rec(const PolyMatrix& a, unsigned remaining, std::unordered_map<unsigned, Poly>& memo) {
  const Chart& chart = a[0][0].chart();
  if (remaining == 0) return Poly::constant(chart, 1);
  auto it = memo.find(remaining);
  if (it != memo.end()) return it->second;
  int first = 0;
  while (!(remaining & (1u << first))) ++first;
  Poly acc(chart);
  int sign = 1;
  for (std::size_t j = static_cast<std::size_t>(first) + 1; j < a.size(); ++j) {
    if (!(remaining & (1u << j))) continue;
    const Poly& e = a[static_cast<std::size_t>(first)][j];
    if (!e.is_zero()) {
      Poly sub = pfaffian_rec(a, remaining & ~(1u << first) & ~(1u << j), memo);
      if (sign > 0) acc += e * sub;
      else acc -= e * sub;
    }
    sign = -sign;
  }
  memo.emplace(remaining, acc);
  return acc;
}

}  // namespace

Poly pfaffian(const PolyMatrix& a) {
  if (a.empty()) fail(ErrorCode::Internal, "Pfaffian of an empty matrix");
  if (a.size() % 2 != 0) return Poly(a[0][0].chart());
  std::unordered_map<unsigned, Poly> memo;
  return pfaffian_rec(a, (1u << a.size()) - 1, memo);
}

}  // namespace dk
