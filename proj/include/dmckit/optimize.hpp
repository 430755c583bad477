#pragma once

// Local optimality checks, 2-neighborhood steepest descent, proximity scaling,
// and brute-force reference minimization.

#include "dmckit/document.hpp"
#include "dmckit/funcs.hpp"
#include "dmckit/verdict.hpp"

#include <map>
#include <string>
#include <vector>

namespace dmckit {

// f(x) <= f(x + α d) for every d ∈ {-1,0,1}^n. Witness: y = x + αd, lhs = f(y), rhs = f(x).
inline Verdict alpha_local_check(const FnOracle& f, const LatticePoint& x, Coord alpha) {
  if (alpha < 1) throw Error("alpha_local_check: alpha must be a positive integer");
  ExtValue fx = f(x);
  if (fx.is_inf()) throw Error("alpha_local_check: " + x.str() + " is not in dom f");
  std::uint64_t checked = 0;
  std::optional<Witness> w;
  Box::cube(x.size(), -1, 1).for_each([&](const LatticePoint& d) {
    if (w || d.is_zero()) return;
    LatticePoint y = x + alpha * d;
    ExtValue fy = f(y);
    ++checked;
    if (fy < fx) w = Witness{x, y, fy, fx};
  });
  return w ? Verdict::fail(*w, checked) : Verdict::pass(checked);
}

inline Verdict local_min_check(const FnOracle& f, const LatticePoint& x) { return alpha_local_check(f, x, 1); }

struct PointValue {
  LatticePoint point;
  ExtValue value;
};

namespace detail {

// Lexicographically smallest minimizer of lookup over the box [lo, hi].
template <class Lookup>
PointValue argmin_in(const LatticePoint& lo, const LatticePoint& hi, Lookup&& lookup) {
  PointValue best{lo, ExtValue::infinity()};
  bool first = true;
  Box(lo, hi).for_each([&](const LatticePoint& z) {
    ExtValue v = lookup(z);
    if (first || v < best.value) {
      best = {z, v};
      first = false;
    }
  });
  return best;
}

inline std::optional<std::pair<LatticePoint, LatticePoint>> clip_ball(const LatticePoint& c, Coord r, const std::optional<Box>& clip) {
  LatticePoint lo = c - LatticePoint(c.size(), r), hi = c + LatticePoint(c.size(), r);
  if (clip) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      lo[i] = std::max(lo[i], clip->lo()[i]);
      hi[i] = std::min(hi[i], clip->hi()[i]);
      if (lo[i] > hi[i]) return std::nullopt;
    }
  }
  return std::make_pair(lo, hi);
}

}  // namespace detail

// Exact minimizer of f over { y : |y - center|_inf <= 2 } ∩ clip, ties to the lexicographically smallest.
inline PointValue neighborhood2_minimize(const FnOracle& f, const LatticePoint& center, const Box& clip) {
  if (!clip.contains(center)) throw Error("neighborhood2_minimize: center lies outside the clip box");
  ExtValue fc = f(center);
  if (fc.is_inf()) throw Error("neighborhood2_minimize: center is not in dom f");
  auto ball = detail::clip_ball(center, 2, clip);
  return detail::argmin_in(ball->first, ball->second, [&](const LatticePoint& z) { return f(z); });
}

struct DescentTrace {
  enum class Termination { minimizer, budget };
  struct Iterate {
    Coord k;
    LatticePoint point;
    ExtValue value;
  };
  std::vector<Iterate> iterates;
  LatticePoint output;
  ExtValue output_value;
  Coord iterations = 0;  // index k of the output point
  std::uint64_t oracle_calls = 0;
  Termination terminated = Termination::minimizer;
};

// Steepest descent with the 2-neighborhood oracle. x(k) minimizes f over
// S_k(x0) = { y : |y - x0|_inf <= k } (intersected with clip). The first step
// scans S_2(x0), which also yields the minima over S_0 and S_1, so the output
// index equals the distance from x0 to the nearest minimizer even when it is
// 0 or 1. Later steps minimize over N_2(x(k-1)) ∩ S_k(x0) and stop when the
// value repeats. `budget` caps the largest index computed (default: diameter
// of the domain box + 1).
inline DescentTrace steepest_descent_2n(const FnOracle& f, const LatticePoint& x0, std::optional<Coord> budget = std::nullopt,
                                        const std::optional<Box>& clip = std::nullopt) {
  if (x0.size() != f.dim()) throw Error("steepest_descent_2n: dimension mismatch");
  if (clip && !clip->contains(x0)) throw Error("steepest_descent_2n: start lies outside the clip box");
  std::uint64_t calls_before = f.eval_count();
  std::map<LatticePoint, ExtValue> memo;
  auto eval = [&](const LatticePoint& z) -> ExtValue {
    auto it = memo.find(z);
    if (it != memo.end()) return it->second;
    ExtValue v = f(z);
    memo.emplace(z, v);
    return v;
  };
  ExtValue f0 = eval(x0);
  if (f0.is_inf()) throw Error("steepest_descent_2n: start " + x0.str() + " is not in dom f");

  Coord limit = 0;
  if (budget) {
    limit = *budget;
  } else {
    std::optional<Box> b = clip ? clip : f.domain_box();
    if (!b) throw Error("steepest_descent_2n: no budget given and the domain is unbounded");
    for (std::size_t i = 0; i < b->dim(); ++i) limit = std::max(limit, b->width(i) - 1);
    limit += 1;
  }
  limit = std::max<Coord>(limit, 2);

  DescentTrace tr;
  auto finish = [&](const LatticePoint& p, const ExtValue& v, Coord k, DescentTrace::Termination t) {
    tr.output = p;
    tr.output_value = v;
    tr.iterations = k;
    tr.terminated = t;
    tr.oracle_calls = f.eval_count() - calls_before;
    return tr;
  };
  tr.iterates.push_back({0, x0, f0});

  auto s2 = detail::clip_ball(x0, 2, clip);
  PointValue best1{x0, f0}, best2{x0, f0};
  bool seen1 = false, seen2 = false;
  Box(s2->first, s2->second).for_each([&](const LatticePoint& z) {
    ExtValue v = eval(z);
    if (!seen2 || v < best2.value) best2 = {z, v};
    seen2 = true;
    if (linf_distance(z, x0) <= 1) {
      if (!seen1 || v < best1.value) best1 = {z, v};
      seen1 = true;
    }
  });
  if (best2.value == f0) return finish(x0, f0, 0, DescentTrace::Termination::minimizer);
  if (best1.value == best2.value) {
    tr.iterates.push_back({1, best1.point, best1.value});
    return finish(best1.point, best1.value, 1, DescentTrace::Termination::minimizer);
  }
  tr.iterates.push_back({2, best2.point, best2.value});
  PointValue cur = best2;
  for (Coord k = 3;; ++k) {
    if (k > limit) return finish(cur.point, cur.value, k - 1, DescentTrace::Termination::budget);
    auto nb = detail::clip_ball(cur.point, 2, clip);
    auto sk = detail::clip_ball(x0, k, std::nullopt);
    LatticePoint lo = nb->first, hi = nb->second;
    for (std::size_t i = 0; i < lo.size(); ++i) {
      lo[i] = std::max(lo[i], sk->first[i]);
      hi[i] = std::min(hi[i], sk->second[i]);
    }
    PointValue next = detail::argmin_in(lo, hi, eval);
    if (next.value == cur.value) return finish(cur.point, cur.value, k - 1, DescentTrace::Termination::minimizer);
    tr.iterates.push_back({k, next.point, next.value});
    cur = next;
  }
}

struct BruteMin {
  Rational value;
  std::vector<LatticePoint> argmin;  // lexicographic order
};

inline BruteMin brute_force_min(const FnOracle& f, const Box& box) {
  if (box.dim() != f.dim()) throw Error("brute_force_min: dimension mismatch");
  std::optional<Rational> best;
  std::vector<LatticePoint> arg;
  box.for_each([&](const LatticePoint& x) {
    ExtValue v = f(x);
    if (v.is_inf()) return;
    if (!best || v.value() < *best) {
      best = v.value();
      arg.clear();
    }
    if (v.value() == *best) arg.push_back(x);
  });
  if (!best) throw Error("brute_force_min: dom f does not meet the box " + box.str());
  return BruteMin{*best, std::move(arg)};
}

inline Coord distance_to_set(const LatticePoint& x, const std::vector<LatticePoint>& s) {
  if (s.empty()) throw Error("distance_to_set: empty set");
  Coord d = linf_distance(x, s.front());
  for (const auto& p : s) d = std::min(d, linf_distance(x, p));
  return d;
}

// Smallest power of two >= max(1, kinf).
inline Coord initial_scale(Coord kinf) {
  Coord a = 1;
  while (a < kinf) a *= 2;
  return a;
}

// ℓ∞-diameter of dom f when f is an explicit table or indicator.
inline std::optional<Coord> derive_kinf(const FnOracle& f) {
  std::optional<LatticePoint> lo, hi;
  auto add = [&](const LatticePoint& p) {
    if (!lo) {
      lo = hi = p;
      return;
    }
    for (std::size_t i = 0; i < p.size(); ++i) {
      (*lo)[i] = std::min((*lo)[i], p[i]);
      (*hi)[i] = std::max((*hi)[i], p[i]);
    }
  };
  if (const auto* t = dynamic_cast<const TableFn*>(&f)) {
    for (std::size_t i = 0; i < t->values().size(); ++i)
      if (t->values()[i].is_finite()) add(t->box().point_at(i));
  } else if (const auto* s = dynamic_cast<const IndicatorFn*>(&f)) {
    for (const auto& p : s->points()) add(p);
  } else {
    return std::nullopt;
  }
  if (!lo) throw Error("derive_kinf: empty domain");
  Coord d = 0;
  for (std::size_t i = 0; i < lo->size(); ++i) d = std::max(d, (*hi)[i] - (*lo)[i]);
  return std::max<Coord>(d, 1);
}

struct ScalingTrace {
  struct Phase {
    Coord alpha;
    LatticePoint start, end;
    Coord inner_iterations;
  };
  std::vector<Phase> phases;
  LatticePoint final_point;
  ExtValue final_value;
  std::uint64_t oracle_calls = 0;
};

// Proximity scaling: for α = 2^ceil(log2 K∞), ..., 2, 1 minimize f(x + α y)
// over |y|_inf <= n by steepest descent and move x to x + α y.
inline ScalingTrace scaling_minimize(const FnPtr& f, const LatticePoint& x0, std::optional<Coord> kinf = std::nullopt) {
  if (!kinf) kinf = derive_kinf(*f);
  if (!kinf) throw Error("scaling_minimize: K_inf must be supplied for this function");
  if (*kinf < 1) throw Error("scaling_minimize: K_inf must be at least 1");
  if (x0.size() != f->dim()) throw Error("scaling_minimize: dimension mismatch");
  if ((*f)(x0).is_inf()) throw Error("scaling_minimize: start " + x0.str() + " is not in dom f");
  std::uint64_t before = f->eval_count();
  auto n = static_cast<Coord>(f->dim());
  Box clip = Box::cube(f->dim(), -n, n);
  ScalingTrace tr;
  LatticePoint x = x0;
  for (Coord alpha = initial_scale(*kinf);; alpha /= 2) {
    FnPtr g = scale_fn(translate(f, x), alpha);
    DescentTrace d = steepest_descent_2n(*g, LatticePoint(f->dim()), n + 1, clip);
    LatticePoint next = x + alpha * d.output;
    tr.phases.push_back({alpha, x, next, d.iterations});
    x = next;
    if (alpha == 1) break;
  }
  tr.final_point = x;
  tr.final_value = (*f)(x);
  tr.oracle_calls = f->eval_count() - before;
  return tr;
}

struct ProximityReport {
  Verdict verdict;
  Coord realized = 0;  // distance from x_alpha to the nearest global minimizer
  Coord bound = 0;     // n(α - 1)
};

inline ProximityReport proximity_verify(const FnOracle& f, const Box& box, const LatticePoint& x_alpha, Coord alpha) {
  if (alpha < 1) throw Error("proximity_verify: alpha must be a positive integer");
  if (!box.contains(x_alpha)) throw Error("proximity_verify: x_alpha lies outside the box");
  auto fp = restrict_to(std::shared_ptr<const FnOracle>(&f, [](const FnOracle*) {}), box);
  if (!alpha_local_check(*fp, x_alpha, alpha).holds)
    throw Error("proximity_verify: " + x_alpha.str() + " is not an alpha-local minimizer");
  BruteMin m = brute_force_min(f, box);
  ProximityReport r;
  r.bound = static_cast<Coord>(f.dim()) * (alpha - 1);
  r.realized = distance_to_set(x_alpha, m.argmin);
  std::uint64_t checked = m.argmin.size();
  if (r.realized <= r.bound) {
    r.verdict = Verdict::pass(checked);
  } else {
    // Nearest minimizer as witness: lhs = bound, rhs = realized distance.
    LatticePoint near = m.argmin.front();
    for (const auto& p : m.argmin)
      if (linf_distance(x_alpha, p) < linf_distance(x_alpha, near)) near = p;
    r.verdict = Verdict::fail(Witness{x_alpha, near, ExtValue(r.bound), ExtValue(r.realized)}, checked);
  }
  return r;
}

// Extended bounds: nullopt is -inf for lower and +inf for upper bounds.
using ExtBounds = std::vector<std::optional<Coord>>;

struct BarrierReport {
  bool wall_condition = false;  // f(x̂) <= f(y) on every wall point
  Verdict verdict;              // holds unless the wall condition holds and some outside point is lower
};

inline BarrierReport box_barrier_check(const FnOracle& f, const ExtBounds& p, const ExtBounds& q, const LatticePoint& xhat,
                                       const Box& outer) {
  std::size_t n = f.dim();
  if (p.size() != n || q.size() != n || xhat.size() != n || outer.dim() != n)
    throw Error("box_barrier_check: dimension mismatch");
  for (std::size_t i = 0; i < n; ++i)
    if ((p[i] && !(*p[i] < xhat[i])) || (q[i] && !(xhat[i] < *q[i])))
      throw Error("box_barrier_check: bounds must satisfy p < x̂ < q");
  ExtValue fx = f(xhat);
  if (fx.is_inf()) throw Error("box_barrier_check: x̂ is not in dom f");

  auto inside_closed = [&](const LatticePoint& z) {
    for (std::size_t i = 0; i < n; ++i)
      if ((p[i] && z[i] < *p[i]) || (q[i] && z[i] > *q[i])) return false;
    return true;
  };
  auto inside_open = [&](const LatticePoint& z) {
    for (std::size_t i = 0; i < n; ++i)
      if ((p[i] && z[i] <= *p[i]) || (q[i] && z[i] >= *q[i])) return false;
    return true;
  };
  BarrierReport r;
  r.wall_condition = true;
  std::optional<Witness> w;
  std::uint64_t checked = 0;
  outer.for_each([&](const LatticePoint& z) {
    if (inside_open(z)) return;
    ExtValue fz = f(z);
    if (inside_closed(z)) {
      if (fz < fx) r.wall_condition = false;
    } else {
      ++checked;
      if (!w && fz < fx) w = Witness{xhat, z, fz, fx};
    }
  });
  r.verdict = (r.wall_condition && w) ? Verdict::fail(*w, checked) : Verdict::pass(checked);
  return r;
}

inline const char* to_string(DescentTrace::Termination t) {
  return t == DescentTrace::Termination::minimizer ? "minimizer" : "budget";
}

inline Json descent_to_json(const DescentTrace& t) {
  Json its = Json::array();
  for (const auto& it : t.iterates) its.push_back(Json{{"k", it.k}, {"point", doc::to_json(it.point)}, {"value", doc::to_json(it.value)}});
  return Json{{"algorithm", "sd2"},
              {"iterates", its},
              {"output", doc::to_json(t.output)},
              {"value", doc::to_json(t.output_value)},
              {"iterations", t.iterations},
              {"oracle_calls", t.oracle_calls},
              {"terminated", to_string(t.terminated)}};
}

inline Json scaling_to_json(const ScalingTrace& t) {
  Json ph = Json::array();
  for (const auto& p : t.phases)
    ph.push_back(Json{{"alpha", p.alpha},
                      {"start", doc::to_json(p.start)},
                      {"end", doc::to_json(p.end)},
                      {"inner_iterations", p.inner_iterations}});
  return Json{{"algorithm", "scaling"},
              {"phases", ph},
              {"output", doc::to_json(t.final_point)},
              {"value", doc::to_json(t.final_value)},
              {"oracle_calls", t.oracle_calls}};
}

inline Json brute_to_json(const BruteMin& m) {
  Json arg = Json::array();
  for (const auto& p : m.argmin) arg.push_back(doc::to_json(p));
  return Json{{"algorithm", "brute"}, {"value", m.value.str()}, {"argmin", arg}};
}

// Staircase set X = { x : 0 <= x_i - x_{i+1} <= α-1, 0 <= x_n <= α-1 } with f(x) = -x_1.
inline FnPtr staircase_fn(std::size_t n, Coord alpha) {
  if (n < 1 || alpha < 1) throw Error("staircase_fn: needs n >= 1 and alpha >= 1");
  std::vector<Rational> c(n, Rational(0));
  c[0] = -1;
  Box bound = Box::cube(n, 0, static_cast<Coord>(n) * (alpha - 1));
  return std::make_shared<LinearOnSetFn>(c, bound, [n, alpha](const LatticePoint& x) {
    for (std::size_t i = 0; i + 1 < n; ++i)
      if (x[i] - x[i + 1] < 0 || x[i] - x[i + 1] > alpha - 1) return false;
    return x[n - 1] >= 0 && x[n - 1] <= alpha - 1;
  });
}

}  // namespace dmckit
