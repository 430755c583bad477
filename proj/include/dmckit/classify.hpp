#pragma once

// Membership checkers for the midpoint-convexity classes on a finite box.
//
// Every checker certifies the property of f restricted to the box (+inf
// outside). Pairs are enumerated lexicographically on (x, y) with x <lex y and
// the first violation is reported.

#include "dmckit/envelope.hpp"
#include "dmckit/funcs.hpp"
#include "dmckit/verdict.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dmckit {

class InconsistentPaths : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class DistanceMode { exact, at_least };

// f tabulated on a box, with the index arithmetic the pair scans need.
class BoxValues {
 public:
  BoxValues(const FnOracle& f, Box box) : box_(std::move(box)) {
    if (box_.dim() != f.dim()) throw Error("box dimension does not match the function");
    vals_.reserve(box_.cardinality());
    box_.for_each([&](const LatticePoint& x) { vals_.push_back(f(x)); });
    init_strides();
  }
  BoxValues(Box box, std::vector<ExtValue> vals) : box_(std::move(box)), vals_(std::move(vals)) {
    if (vals_.size() != box_.cardinality()) throw Error("BoxValues: value count mismatch");
    init_strides();
  }

  const Box& box() const { return box_; }
  std::size_t size() const { return vals_.size(); }
  const ExtValue& operator[](std::size_t i) const { return vals_[i]; }
  const ExtValue& at(const LatticePoint& x) const { return vals_[box_.index_of(x)]; }
  std::size_t stride(std::size_t i) const { return strides_[i]; }

  // 0 on the finite entries, +inf elsewhere.
  BoxValues domain_indicator() const {
    std::vector<ExtValue> v;
    v.reserve(vals_.size());
    for (const auto& e : vals_) v.push_back(e.is_finite() ? ExtValue(0) : ExtValue::infinity());
    return BoxValues(box_, std::move(v));
  }

  // True when the finite entries fill a (nonempty or empty) sub-box.
  bool domain_is_rectangular() const {
    std::size_t n = box_.dim(), count = 0;
    std::optional<LatticePoint> lo, hi;
    for (std::size_t i = 0; i < vals_.size(); ++i) {
      if (vals_[i].is_inf()) continue;
      ++count;
      LatticePoint p = box_.point_at(i);
      if (!lo) {
        lo = hi = p;
        continue;
      }
      for (std::size_t d = 0; d < n; ++d) {
        (*lo)[d] = std::min((*lo)[d], p[d]);
        (*hi)[d] = std::max((*hi)[d], p[d]);
      }
    }
    return count == 0 || Box(*lo, *hi).cardinality() == count;
  }

 private:
  void init_strides() {
    std::size_t n = box_.dim();
    strides_.assign(n, 1);
    for (std::size_t i = n; i-- > 1;) strides_[i - 1] = strides_[i] * static_cast<std::size_t>(box_.width(i));
  }

  Box box_;
  std::vector<ExtValue> vals_;
  std::vector<std::size_t> strides_;
};

namespace detail {

// Advances y to the lexicographic successor inside [lo, hi]; false at the end.
inline bool advance(LatticePoint& y, const LatticePoint& lo, const LatticePoint& hi) {
  for (std::size_t i = y.size(); i-- > 0;) {
    if (y[i] < hi[i]) {
      ++y[i];
      for (std::size_t j = i + 1; j < y.size(); ++j) y[j] = lo[j];
      return true;
    }
  }
  return false;
}

enum class PairRule {
  midpoint_convex,     // f(x) + f(y) >= f(up) + f(down)
  rounding_in_domain,  // up, down ∈ dom f
};

// Calls visit(i, x, j, y, dist) for every pair x <lex y in the box with the
// requested distance and both values finite; visit returns a witness to stop.
template <class Visit>
Verdict scan_pairs(const BoxValues& t, Coord k, DistanceMode mode, unsigned jobs, Visit&& visit) {
  const Box& box = t.box();
  std::size_t n = box.dim();
  return scan_rows(t.size(), jobs, [&](std::size_t i) {
    RowOutcome out;
    if (t[i].is_inf()) return out;
    LatticePoint x = box.point_at(i);
    LatticePoint lo = box.lo(), hi = box.hi();
    if (mode == DistanceMode::exact)
      for (std::size_t d = 0; d < n; ++d) {
        lo[d] = std::max(lo[d], x[d] - k);
        hi[d] = std::min(hi[d], x[d] + k);
      }
    LatticePoint y = x;
    while (advance(y, lo, hi)) {
      Coord dist = 0;
      std::size_t j = 0;
      for (std::size_t d = 0; d < n; ++d) {
        Coord diff = y[d] > x[d] ? y[d] - x[d] : x[d] - y[d];
        dist = std::max(dist, diff);
        j += t.stride(d) * static_cast<std::size_t>(y[d] - box.lo()[d]);
      }
      if (mode == DistanceMode::exact ? dist != k : dist < k) continue;
      if (t[j].is_inf()) continue;
      ++out.pairs;
      if (auto w = visit(i, x, j, y)) {
        out.witness = std::move(w);
        return out;
      }
    }
    return out;
  });
}

inline std::pair<std::size_t, std::size_t> rounding_indices(const BoxValues& t, const LatticePoint& x, const LatticePoint& y) {
  std::size_t up = 0, down = 0;
  const LatticePoint& lo = t.box().lo();
  for (std::size_t d = 0; d < x.size(); ++d) {
    Coord s = x[d] + y[d];
    up += t.stride(d) * static_cast<std::size_t>(ceil_half(s) - lo[d]);
    down += t.stride(d) * static_cast<std::size_t>(floor_half(s) - lo[d]);
  }
  return {up, down};
}

inline Verdict scan_rounding_rule(const BoxValues& t, Coord k, DistanceMode mode, PairRule rule, unsigned jobs) {
  return scan_pairs(t, k, mode, jobs,
                    [&](std::size_t i, const LatticePoint& x, std::size_t j, const LatticePoint& y) -> std::optional<Witness> {
                      auto [u, d] = rounding_indices(t, x, y);
                      const ExtValue &fu = t[u], &fd = t[d];
                      bool bad = rule == PairRule::midpoint_convex ? t[i] + t[j] < fu + fd : (fu.is_inf() || fd.is_inf());
                      if (!bad) return std::nullopt;
                      return Witness{x, y, t[i] + t[j], fu + fd};
                    });
}

inline Verdict then(Verdict first, const std::function<Verdict()>& next) {
  if (!first.holds) return first;
  Verdict v = next();
  v.pairs_checked += first.pairs_checked;
  return v;
}

// 2 f~(m) for every half-integer point m of the box, keyed by 2m - 2lo.
class MidpointEnvelopes {
 public:
  MidpointEnvelopes(const BoxValues& t, unsigned jobs) : t_(t) {
    std::size_t n = t.box().dim();
    LatticePoint lo(n), hi(n);
    for (std::size_t d = 0; d < n; ++d) {
      lo[d] = 2 * t.box().lo()[d];
      hi[d] = 2 * t.box().hi()[d];
    }
    doubled_ = Box(lo, hi);
    vals_.resize(doubled_.cardinality());
    parallel_for(vals_.size(), jobs, [&](std::size_t i) {
      LatticePoint s = doubled_.point_at(i);
      std::vector<Rational> c;
      for (Coord v : s) c.emplace_back(v, 2);
      EnvelopeResult e = envelope_with(RationalPoint(std::move(c)), [&](const LatticePoint& z) { return t_.at(z); });
      vals_[i] = e.value.scaled(2);
    });
  }
  const ExtValue& twice_at_sum(const LatticePoint& x, const LatticePoint& y) const {
    std::size_t idx = 0;
    for (std::size_t d = 0; d < x.size(); ++d)
      idx = idx * static_cast<std::size_t>(doubled_.width(d)) + static_cast<std::size_t>(x[d] + y[d] - doubled_.lo()[d]);
    return vals_[idx];
  }

 private:
  const BoxValues& t_;
  Box doubled_;
  std::vector<ExtValue> vals_;
};

inline Verdict scan_weak(const BoxValues& t, const MidpointEnvelopes& env, Coord k, DistanceMode mode, unsigned jobs) {
  return scan_pairs(t, k, mode, jobs,
                    [&](std::size_t i, const LatticePoint& x, std::size_t j, const LatticePoint& y) -> std::optional<Witness> {
                      const ExtValue& rhs = env.twice_at_sum(x, y);
                      ExtValue lhs = t[i] + t[j];
                      if (!(lhs < rhs)) return std::nullopt;
                      return Witness{x, y, lhs, rhs};
                    });
}

}  // namespace detail

inline Box resolve_box(const FnOracle& f, const std::optional<Box>& box) {
  if (box) {
    if (box->dim() != f.dim()) throw Error("box dimension does not match the function");
    return *box;
  }
  if (auto b = f.domain_box()) return *b;
  throw Error("no box given and the function has no bounded domain");
}

// f(x) + f(y) >= f(ceil((x+y)/2)) + f(floor((x+y)/2)) for in-box dom pairs at distance k (or >= k).
inline Verdict check_dmc_at(const BoxValues& t, Coord k, DistanceMode mode, unsigned jobs = 1) {
  if (k < 1) throw Error("check_dmc_at: distance must be at least 1");
  return detail::scan_rounding_rule(t, k, mode, detail::PairRule::midpoint_convex, jobs);
}
inline Verdict check_dmc_at(const FnOracle& f, const Box& box, Coord k, DistanceMode mode, unsigned jobs = 1) {
  return check_dmc_at(BoxValues(f, box), k, mode, jobs);
}

// Both midpoint roundings of every in-box dom pair at distance >= k lie in dom f.
inline Verdict check_domain_closure(const BoxValues& t, Coord k, unsigned jobs = 1) {
  return detail::scan_rounding_rule(t, k, DistanceMode::at_least, detail::PairRule::rounding_in_domain, jobs);
}

// f(x) + f(y) >= f(x ∨ y) + f(x ∧ y) over in-box pairs at distance 1.
inline Verdict is_submodular(const BoxValues& t, unsigned jobs = 1) { return check_dmc_at(t, 1, DistanceMode::exact, jobs); }
inline Verdict is_submodular(const FnOracle& f, const std::optional<Box>& box = std::nullopt, unsigned jobs = 1) {
  return is_submodular(BoxValues(f, resolve_box(f, box)), jobs);
}

inline Verdict is_locally_dmc(const BoxValues& t, unsigned jobs = 1) {
  return detail::then(check_domain_closure(t, 2, jobs), [&] { return check_dmc_at(t, 2, DistanceMode::exact, jobs); });
}
inline Verdict is_locally_dmc(const FnOracle& f, const std::optional<Box>& box = std::nullopt, unsigned jobs = 1) {
  return is_locally_dmc(BoxValues(f, resolve_box(f, box)), jobs);
}

// Locally DMC plus distance 3, cross-checked against the direct scan over all distances >= 2.
inline Verdict is_globally_dmc(const BoxValues& t, unsigned jobs = 1) {
  Verdict v = detail::then(is_locally_dmc(t, jobs), [&] { return check_dmc_at(t, 3, DistanceMode::exact, jobs); });
  Verdict cross = check_dmc_at(t, 2, DistanceMode::at_least, jobs);
  if (cross.holds != v.holds)
    throw InconsistentPaths("is_globally_dmc: distance {2,3} test and direct scan disagree on box " + t.box().str());
  return v;
}
inline Verdict is_globally_dmc(const FnOracle& f, const std::optional<Box>& box = std::nullopt, unsigned jobs = 1) {
  return is_globally_dmc(BoxValues(f, resolve_box(f, box)), jobs);
}

// Weak midpoint inequality f(x) + f(y) >= 2 f~((x+y)/2) for in-box dom pairs at distance >= 2.
// The second path checks that dom f is integrally convex and then only distance 2.
inline Verdict is_integrally_convex(const BoxValues& t, unsigned jobs = 1) {
  detail::MidpointEnvelopes env(t, jobs);
  Verdict v = detail::scan_weak(t, env, 2, DistanceMode::at_least, jobs);

  BoxValues dom = t.domain_indicator();
  detail::MidpointEnvelopes dom_env(dom, jobs);
  Verdict dom_ok = detail::scan_weak(dom, dom_env, 2, DistanceMode::at_least, jobs);
  if (dom_ok.holds) {
    Verdict near = detail::scan_weak(t, env, 2, DistanceMode::exact, jobs);
    if (near.holds != v.holds)
      throw InconsistentPaths("is_integrally_convex: distance-2 path disagrees with full scan on box " + t.box().str());
  } else if (v.holds) {
    throw InconsistentPaths("is_integrally_convex: weak inequality holds but the domain is not integrally convex");
  }
  return v;
}
inline Verdict is_integrally_convex(const FnOracle& f, const std::optional<Box>& box = std::nullopt, unsigned jobs = 1) {
  return is_integrally_convex(BoxValues(f, resolve_box(f, box)), jobs);
}

// Integrally convex domain test followed by the weak inequality at distance 2 only.
inline Verdict is_integrally_convex_by_distance2(const BoxValues& t, unsigned jobs = 1) {
  BoxValues dom = t.domain_indicator();
  detail::MidpointEnvelopes dom_env(dom, jobs);
  Verdict d = detail::scan_weak(dom, dom_env, 2, DistanceMode::at_least, jobs);
  if (!d.holds) return d;
  detail::MidpointEnvelopes env(t, jobs);
  Verdict v = detail::scan_weak(t, env, 2, DistanceMode::exact, jobs);
  v.pairs_checked += d.pairs_checked;
  return v;
}

// DMC at distances 1 and 2 with a midpoint-closed domain. When dom f ∩ box is a
// rectangle the result is cross-checked against integral convexity ∧ submodularity.
inline Verdict is_lnat(const BoxValues& t, unsigned jobs = 1) {
  Verdict v = detail::then(check_dmc_at(t, 1, DistanceMode::exact, jobs), [&] {
    return detail::then(check_dmc_at(t, 2, DistanceMode::exact, jobs), [&] { return check_domain_closure(t, 1, jobs); });
  });
  if (t.domain_is_rectangular()) {
    bool alt = is_submodular(t, jobs).holds && is_integrally_convex(t, jobs).holds;
    if (alt != v.holds)
      throw InconsistentPaths("is_lnat: midpoint test and submodular integral convexity disagree on box " + t.box().str());
  }
  return v;
}
inline Verdict is_lnat(const FnOracle& f, const std::optional<Box>& box = std::nullopt, unsigned jobs = 1) {
  return is_lnat(BoxValues(f, resolve_box(f, box)), jobs);
}

struct ClassProfile {
  Verdict lnat, globally_dmc, locally_dmc, integrally_convex;

  // lnat ⇒ globally ⇒ locally ⇒ integrally convex.
  bool hierarchy_consistent() const {
    return (!lnat.holds || globally_dmc.holds) && (!globally_dmc.holds || locally_dmc.holds) &&
           (!locally_dmc.holds || integrally_convex.holds);
  }
};

inline ClassProfile classify_all(const BoxValues& t, unsigned jobs = 1) {
  return ClassProfile{is_lnat(t, jobs), is_globally_dmc(t, jobs), is_locally_dmc(t, jobs), is_integrally_convex(t, jobs)};
}

// ---- quadratic forms -------------------------------------------------------

enum class Sufficient { yes, inconclusive };

inline const char* to_string(Sufficient s) { return s == Sufficient::yes ? "yes" : "inconclusive"; }

struct QuadReport {
  bool lnat = false;
  bool locally_dmc = false;
  bool globally_dmc = false;
  bool diag_dominant = false;
  Sufficient eigen_sufficient = Sufficient::inconclusive;
};

// z^T Q z >= 1_J^T Q 1_J with J the odd coordinates of z.
inline bool quad_midpoint_holds(const Matrix& q, const LatticePoint& z) {
  std::size_t n = q.size();
  Rational lhs, rhs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (z[i] && z[j]) lhs += q[i][j] * Rational(z[i] * z[j]);
      if ((z[i] & 1) && (z[j] & 1)) rhs += q[i][j];
    }
  return lhs >= rhs;
}

// True when the midpoint test holds for every z with |z|_inf = r.
inline bool quad_midpoint_at_norm(const Matrix& q, Coord r) {
  std::size_t n = q.size();
  bool ok = true;
  Box::cube(n, -r, r).for_each([&](const LatticePoint& z) {
    if (ok && linf_norm(z) == r && z > LatticePoint(n) && !quad_midpoint_holds(q, z)) ok = false;
  });
  return ok;
}

inline bool quad_diag_dominant(const Matrix& q) {
  for (std::size_t i = 0; i < q.size(); ++i) {
    Rational off;
    for (std::size_t j = 0; j < q.size(); ++j)
      if (j != i) off += abs(q[i][j]);
    if (q[i][i] < off) return false;
  }
  return true;
}

// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, ascending.
inline std::vector<double> symmetric_eigenvalues(const std::vector<std::vector<double>>& m, double tol = 1e-12) {
  std::size_t n = m.size();
  auto a = m;
  double scale = 0;
  for (const auto& row : a)
    for (double v : row) scale = std::max(scale, std::abs(v));
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off = std::max(off, std::abs(a[i][j]));
    if (off <= tol * scale || scale == 0) break;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t r = p + 1; r < n; ++r) {
        if (a[p][r] == 0) continue;
        double theta = (a[r][r] - a[p][p]) / (2 * a[p][r]);
        double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        double c = 1 / std::sqrt(t * t + 1), s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          double akp = a[k][p], akr = a[k][r];
          a[k][p] = c * akp - s * akr;
          a[k][r] = s * akp + c * akr;
        }
        for (std::size_t k = 0; k < n; ++k) {
          double apk = a[p][k], ark = a[r][k];
          a[p][k] = c * apk - s * ark;
          a[r][k] = s * apk + c * ark;
        }
      }
  }
  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = a[i][i];
  std::sort(ev.begin(), ev.end());
  return ev;
}

inline std::vector<std::vector<double>> to_double(const Matrix& q) {
  std::vector<std::vector<double>> m(q.size());
  for (std::size_t i = 0; i < q.size(); ++i)
    for (const auto& v : q[i]) m[i].push_back(v.to_double());
  return m;
}

// Sufficient test λmin >= (n-1)/(n+3) λmax; floating point, so only ever "yes" or "inconclusive".
inline Sufficient quad_eigen_sufficient(const Matrix& q) {
  require_symmetric(q, "quad_eigen_sufficient");
  std::size_t n = q.size();
  if (n == 0) return Sufficient::yes;
  constexpr double tol = 1e-12;
  auto ev = symmetric_eigenvalues(to_double(q), tol);
  double lmin = ev.front(), lmax = ev.back();
  double ratio = static_cast<double>(n - 1) / static_cast<double>(n + 3);
  double scale = std::max(std::abs(lmin), std::abs(lmax));
  return lmin - ratio * lmax >= 10 * tol * scale ? Sufficient::yes : Sufficient::inconclusive;
}

// Q = α(I + R) with R positive semidefinite and max_i Σ_j |r_ij| <= 4/(n-1).
inline bool quad_row_sum_sufficient(const Rational& alpha, const Matrix& r) {
  require_symmetric(r, "quad_row_sum_sufficient");
  std::size_t n = r.size();
  if (n < 2) throw Error("quad_row_sum_sufficient: needs n >= 2");
  if (alpha.sign() < 0) throw Error("quad_row_sum_sufficient: alpha must be nonnegative");
  auto ev = symmetric_eigenvalues(to_double(r));
  double scale = std::max(std::abs(ev.front()), std::abs(ev.back()));
  if (ev.front() < -1e-9 * std::max(scale, 1.0)) throw Error("quad_row_sum_sufficient: R is not positive semidefinite");
  Rational bound(4, static_cast<long long>(n - 1));
  for (std::size_t i = 0; i < n; ++i) {
    Rational s;
    for (std::size_t j = 0; j < n; ++j) s += abs(r[i][j]);
    if (s > bound) return false;
  }
  return true;
}

inline QuadReport quad_classify(const Matrix& q) {
  require_symmetric(q, "quad_classify");
  QuadReport rep;
  rep.locally_dmc = quad_midpoint_at_norm(q, 2);
  rep.globally_dmc = rep.locally_dmc && quad_midpoint_at_norm(q, 3);
  rep.diag_dominant = quad_diag_dominant(q);
  bool nonpos = true;
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j)
      if (i != j && q[i][j].sign() > 0) nonpos = false;
  rep.lnat = rep.diag_dominant && nonpos;
  rep.eigen_sufficient = quad_eigen_sufficient(q);
  if ((rep.lnat && !rep.globally_dmc) || (rep.eigen_sufficient == Sufficient::yes && !rep.globally_dmc))
    throw InconsistentPaths("quad_classify: sufficient condition holds but the exact test fails");
  return rep;
}

struct Quad2d {
  bool locally = false;
  bool globally = false;
};

inline Quad2d quad_2d_closed_form(const Matrix& q) {
  if (q.size() != 2) throw Error("quad_2d_closed_form: needs a 2x2 matrix");
  require_symmetric(q, "quad_2d_closed_form");
  Rational c = abs(q[0][1]);
  Quad2d r;
  r.locally = q[0][0] >= c && q[1][1] >= c;
  r.globally = r.locally && q[0][0] + q[1][1] >= Rational(5, 2) * q[0][1];
  return r;
}

// ---- parallelogram inequality ---------------------------------------------

// f(x) + f(x + d1 + d2) >= f(x + d1) + f(x + d2) with d1, d2 the partial sums over I and J.
inline Verdict check_parallelogram(const FnOracle& f, const LatticePoint& x, const StepChain& c, const IndexSet& i_set,
                                   const IndexSet& j_set) {
  if (x.size() != f.dim() || c.dim() != f.dim()) throw Error("check_parallelogram: dimension mismatch");
  std::vector<int> seen(c.length(), 0);
  for (const auto* s : {&i_set, &j_set})
    for (int k : *s) {
      if (k < 0 || static_cast<std::size_t>(k) >= c.length()) throw Error("check_parallelogram: step index out of range");
      ++seen[static_cast<std::size_t>(k)];
    }
  for (int s : seen)
    if (s != 1) throw Error("check_parallelogram: I and J must partition the steps");
  LatticePoint d1 = chain_partial_sum(c, i_set), d2 = chain_partial_sum(c, j_set);
  LatticePoint y = x + d1 + d2;
  ExtValue lhs = f(x) + f(y), rhs = f(x + d1) + f(x + d2);
  if (lhs < rhs) return Verdict::fail(Witness{x, y, lhs, rhs}, 1);
  return Verdict::pass(1);
}

// f(x) + f(y) >= f(x + d) + f(y - d) with d the partial sum over J of the steps of y - x.
inline Verdict check_parallelogram(const FnOracle& f, const LatticePoint& x, const LatticePoint& y, const IndexSet& j_set) {
  require_same_dim(x, y, "check_parallelogram");
  StepChain c = step_decompose(y - x);
  LatticePoint d = chain_partial_sum(c, j_set);
  ExtValue lhs = f(x) + f(y), rhs = f(x + d) + f(y - d);
  if (lhs < rhs) return Verdict::fail(Witness{x, y, lhs, rhs}, 1);
  return Verdict::pass(1);
}

// g(0) = 2, g(z) = z^2 otherwise, on [-5, 5]: midpoint convex for |x - y| >= 3
// but not discretely convex.
struct InsufficiencyDemo {
  Verdict distant_pairs;       // distance >= 3
  Verdict discrete_convexity;  // distance 2, i.e. g(t-1) + g(t+1) >= 2 g(t)
};

inline FnPtr restricted_midpoint_g() {
  return make_callable(
      1, [](const LatticePoint& z) { return z[0] == 0 ? ExtValue(2) : ExtValue(z[0] * z[0]); }, Box::cube(1, -5, 5));
}

inline InsufficiencyDemo restricted_midpoint_insufficiency_demo() {
  BoxValues t(*restricted_midpoint_g(), Box::cube(1, -5, 5));
  return InsufficiencyDemo{check_dmc_at(t, 3, DistanceMode::at_least), check_dmc_at(t, 2, DistanceMode::exact)};
}

}  // namespace dmckit
