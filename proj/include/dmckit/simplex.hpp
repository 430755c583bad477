#pragma once

// Dense two-phase primal simplex over exact rationals with Bland's rule.
//   minimize c^T x  subject to  A x = b, x >= 0.

#include "dmckit/rational.hpp"

#include <optional>
#include <vector>

namespace dmckit {

struct LpResult {
  enum class Status { optimal, infeasible, unbounded };
  Status status = Status::infeasible;
  Rational value;
  std::vector<Rational> x;
};

namespace detail {

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), t_(rows, std::vector<Rational>(cols + 1)), basis_(rows) {}

  std::vector<Rational>& row(std::size_t i) { return t_[i]; }
  Rational& rhs(std::size_t i) { return t_[i][cols_]; }
  std::vector<std::size_t>& basis() { return basis_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  void pivot(std::size_t r, std::size_t c) {
    Rational inv = Rational(1) / t_[r][c];
    for (auto& v : t_[r])
      if (v.sign()) v *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || t_[i][c].sign() == 0) continue;
      Rational factor = t_[i][c];
      for (std::size_t j = 0; j <= cols_; ++j)
        if (t_[r][j].sign()) t_[i][j] -= factor * t_[r][j];
    }
    basis_[r] = c;
  }

  void drop_row(std::size_t r) {
    t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
    --rows_;
  }

  // Runs simplex iterations on costs restricted to columns [0, allowed).
  // Returns false when the objective is unbounded below.
  bool optimize(const std::vector<Rational>& cost, std::size_t allowed) {
    for (;;) {
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < allowed && !enter; ++j) {
        Rational d = cost[j];
        for (std::size_t i = 0; i < rows_; ++i)
          if (t_[i][j].sign()) d -= cost[basis_[i]] * t_[i][j];
        if (d.sign() < 0) enter = j;
      }
      if (!enter) return true;
      std::size_t c = *enter;
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (t_[i][c].sign() <= 0) continue;
        Rational ratio = t_[i][cols_] / t_[i][c];
        if (!leave || ratio < best || (ratio == best && basis_[i] < basis_[*leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (!leave) return false;
      pivot(*leave, c);
    }
  }

 private:
  std::size_t rows_, cols_;
  std::vector<std::vector<Rational>> t_;
  std::vector<std::size_t> basis_;
};

}  // namespace detail

inline LpResult solve_lp(const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b,
                         const std::vector<Rational>& c) {
  std::size_t m = a.size(), n = c.size();
  if (b.size() != m) throw Error("solve_lp: rhs length mismatch");
  for (const auto& r : a)
    if (r.size() != n) throw Error("solve_lp: row length mismatch");

  // Columns 0..n-1 are structural, n..n+m-1 artificial.
  detail::Tableau t(m, n + m);
  for (std::size_t i = 0; i < m; ++i) {
    bool neg = b[i].sign() < 0;
    for (std::size_t j = 0; j < n; ++j) t.row(i)[j] = neg ? -a[i][j] : a[i][j];
    t.row(i)[n + i] = 1;
    t.rhs(i) = neg ? -b[i] : b[i];
    t.basis()[i] = n + i;
  }

  std::vector<Rational> phase1(n + m);
  for (std::size_t j = n; j < n + m; ++j) phase1[j] = 1;
  t.optimize(phase1, n + m);

  Rational infeas;
  for (std::size_t i = 0; i < t.rows(); ++i)
    if (t.basis()[i] >= n) infeas += t.rhs(i);
  LpResult res;
  if (infeas.sign() > 0) return res;

  // Drive zero-level artificials out of the basis; rows with no structural entry are redundant.
  for (std::size_t i = 0; i < t.rows();) {
    if (t.basis()[i] < n) {
      ++i;
      continue;
    }
    std::optional<std::size_t> col;
    for (std::size_t j = 0; j < n && !col; ++j)
      if (t.row(i)[j].sign()) col = j;
    if (col) {
      t.pivot(i, *col);
      ++i;
    } else {
      t.drop_row(i);
    }
  }

  std::vector<Rational> cost(n + m);
  for (std::size_t j = 0; j < n; ++j) cost[j] = c[j];
  if (!t.optimize(cost, n)) {
    res.status = LpResult::Status::unbounded;
    return res;
  }
  res.status = LpResult::Status::optimal;
  res.x.assign(n, Rational(0));
  for (std::size_t i = 0; i < t.rows(); ++i) res.x[t.basis()[i]] = t.rhs(i);
  for (std::size_t j = 0; j < n; ++j)
    if (res.x[j].sign()) res.value += c[j] * res.x[j];
  return res;
}

}  // namespace dmckit
