#pragma once

#include <optional>
#include <vector>

namespace swtwist {

template <class F>
using Matrix = std::vector<std::vector<F>>;

template <class F>
struct EchelonResult {
  Matrix<F> reduced;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank() const { return pivot_cols.size(); }
};

// Exact Gauss-Jordan over a field F.
template <class F>
EchelonResult<F> row_reduce(Matrix<F> a) {
  EchelonResult<F> out;
  std::size_t rows = a.size(), cols = rows ? a[0].size() : 0, r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == F(0)) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    F inv = F(1) / a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] = a[r][j] * inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == F(0)) continue;
      F f = a[i][c];
      for (std::size_t j = c; j < cols; ++j)
        if (!(a[r][j] == F(0))) a[i][j] = a[i][j] - f * a[r][j];
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.reduced = std::move(a);
  return out;
}

template <class F>
std::size_t rank(const Matrix<F>& a) {
  return row_reduce(a).rank();
}

template <class F>
struct LinearSolve {
  bool consistent = false;
  std::size_t rank = 0;
  std::vector<F> x;  // free variables set to zero
};

template <class F>
LinearSolve<F> solve(const Matrix<F>& a, const std::vector<F>& b) {
  std::size_t n = a.empty() ? 0 : a[0].size();
  Matrix<F> aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  auto e = row_reduce(std::move(aug));
  LinearSolve<F> out;
  out.consistent = e.pivot_cols.empty() || e.pivot_cols.back() < n;
  out.rank = e.rank() - (out.consistent ? 0 : 1);
  out.x.assign(n, F(0));
  if (!out.consistent) return out;
  for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) out.x[e.pivot_cols[r]] = e.reduced[r][n];
  return out;
}

}  // namespace swtwist
