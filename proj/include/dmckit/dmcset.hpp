#pragma once

// Discrete midpoint convex sets, set scaling, parallelogram points, and the
// decompositions D0 -> D1 -> D2 of an integer vector into {-1,0,1}-vectors.

#include "dmckit/document.hpp"
#include "dmckit/verdict.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

namespace dmckit {

class PointSet {
 public:
  PointSet() = default;
  PointSet(std::size_t dim, std::vector<LatticePoint> pts) : dim_(dim), pts_(std::move(pts)) {
    for (const auto& p : pts_)
      if (p.size() != dim_) throw Error("PointSet: point " + p.str() + " has the wrong dimension");
    std::sort(pts_.begin(), pts_.end());
    pts_.erase(std::unique(pts_.begin(), pts_.end()), pts_.end());
  }

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return pts_.size(); }
  bool empty() const { return pts_.empty(); }
  const std::vector<LatticePoint>& points() const { return pts_; }
  auto begin() const { return pts_.begin(); }
  auto end() const { return pts_.end(); }
  bool contains(const LatticePoint& p) const { return std::binary_search(pts_.begin(), pts_.end(), p); }

  std::optional<Box> bounding_box() const {
    if (pts_.empty()) return std::nullopt;
    LatticePoint lo = pts_.front(), hi = lo;
    for (const auto& p : pts_)
      for (std::size_t i = 0; i < dim_; ++i) {
        lo[i] = std::min(lo[i], p[i]);
        hi[i] = std::max(hi[i], p[i]);
      }
    return Box(lo, hi);
  }

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<LatticePoint> pts_;
};

inline PointSet intersect(const PointSet& a, const PointSet& b) {
  if (a.dim() != b.dim()) throw Error("intersect: dimension mismatch");
  std::vector<LatticePoint> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return PointSet(a.dim(), std::move(out));
}

inline PointSet load_point_set(const Json& j) {
  if (!j.is_object()) throw DocumentError("point set document must be an object");
  doc::require_keys(j, {"dim", "points"}, "point set");
  const Json& dj = doc::field(j, "dim", "point set");
  if (!dj.is_number_unsigned() || dj.get<long long>() < 1) throw DocumentError("point set: \"dim\" must be a positive integer");
  auto n = dj.get<std::size_t>();
  const Json& pj = doc::field(j, "points", "point set");
  if (!pj.is_array()) throw DocumentError("point set: \"points\" must be an array");
  std::vector<LatticePoint> pts;
  for (const auto& p : pj) pts.push_back(doc::point_from(p, n, "point set"));
  return PointSet(n, std::move(pts));
}
inline PointSet load_point_set(std::string_view text) { return load_point_set(parse_json(text)); }

inline Json point_set_to_json(const PointSet& s) {
  Json pts = Json::array();
  for (const auto& p : s) pts.push_back(doc::to_json(p));
  return Json{{"dim", s.dim()}, {"points", pts}};
}

// Both midpoint roundings of every pair at distance >= 2 stay in S.
// Witnesses carry lhs = 0, rhs = +inf (the inequality for the indicator).
inline Verdict is_dmc_set(const PointSet& s, unsigned jobs = 1) {
  const auto& p = s.points();
  return scan_rows(p.size(), jobs, [&](std::size_t i) {
    RowOutcome out;
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      if (linf_distance(p[i], p[j]) < 2) continue;
      ++out.pairs;
      Rounding r = midpoint_round(p[i], p[j]);
      if (!s.contains(r.up) || !s.contains(r.down)) {
        out.witness = Witness{p[i], p[j], ExtValue(0), ExtValue::infinity()};
        break;
      }
    }
    return out;
  });
}

// S^α = { x : αx ∈ S }.
inline PointSet scale_set(const PointSet& s, Coord alpha) {
  if (alpha < 1) throw Error("scale_set: alpha must be a positive integer");
  std::vector<LatticePoint> out;
  for (const auto& p : s) {
    bool divisible = std::all_of(p.begin(), p.end(), [&](Coord c) { return c % alpha == 0; });
    if (!divisible) continue;
    LatticePoint q(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) q[i] = p[i] / alpha;
    out.push_back(std::move(q));
  }
  return PointSet(s.dim(), std::move(out));
}

struct ParallelogramPoints {
  LatticePoint p, q;  // x + d and y - d
  bool p_in = false, q_in = false;
};

// d = partial sum over J (0-based step indices) of the step chain of y - x.
inline ParallelogramPoints parallelogram_points(const PointSet& s, const LatticePoint& x, const LatticePoint& y,
                                                const IndexSet& j_set) {
  require_same_dim(x, y, "parallelogram_points");
  if (!s.contains(x) || !s.contains(y)) throw Error("parallelogram_points: x and y must belong to S");
  if (x == y) throw Error("parallelogram_points: x and y must differ");
  LatticePoint d = chain_partial_sum(step_decompose(y - x), j_set);
  ParallelogramPoints r{x + d, y - d};
  r.p_in = s.contains(r.p);
  r.q_in = s.contains(r.q);
  return r;
}

// ---- decompositions --------------------------------------------------------

enum class Stage { steps, d0, d1, d2 };

inline const char* to_string(Stage s) {
  switch (s) {
    case Stage::steps: return "steps";
    case Stage::d0: return "d0";
    case Stage::d1: return "d1";
    default: return "d2";
  }
}

struct Twist {
  LatticePoint first, second;  // the incomparable pair replaced
  LatticePoint up, down;       // its rounded midpoints
};

struct Decomposition {
  Stage stage = Stage::d0;
  LatticePoint v;
  std::vector<LatticePoint> vectors;  // sorted lexicographically
  std::vector<Twist> twists;          // D2 only
};

inline bool is_critical(const LatticePoint& x) {
  Coord m = linf_norm(x);
  return m >= 3 && m % 2 == 1 && pos_norm(x) == neg_norm(x);
}

namespace detail {

inline void d0_into(const LatticePoint& x, std::vector<LatticePoint>& out) {
  Coord m = linf_norm(x);
  if (m == 0) return;
  if (m == 1) {
    out.push_back(x);
    return;
  }
  if (m == 2) {
    out.push_back(ceil_half(x));
    out.push_back(floor_half(x));
    return;
  }
  d0_into(ceil_half(x), out);
  d0_into(floor_half(x), out);
}

// Leftmost and rightmost leaves of the D0 tree below x.
inline LatticePoint leftmost_leaf(LatticePoint x) {
  while (linf_norm(x) >= 2) x = ceil_half(x);
  return x;
}
inline LatticePoint rightmost_leaf(LatticePoint x) {
  while (linf_norm(x) >= 2) x = floor_half(x);
  return x;
}

inline void remove_one(std::vector<LatticePoint>& ms, const LatticePoint& v) {
  auto it = std::find(ms.begin(), ms.end(), v);
  if (it == ms.end()) throw std::logic_error("D1: leaf " + v.str() + " missing from the sub-decomposition");
  ms.erase(it);
}

inline std::vector<LatticePoint> d1_rec(const LatticePoint& x) {
  Coord m = linf_norm(x);
  std::vector<LatticePoint> out;
  if (m <= 2) {
    d0_into(x, out);
    return out;
  }
  std::vector<LatticePoint> left = d1_rec(ceil_half(x)), right = d1_rec(floor_half(x));
  if (is_critical(x)) {
    LatticePoint dp = leftmost_leaf(x), dm = rightmost_leaf(x);
    remove_one(left, dp);
    remove_one(right, dm);
    out = std::move(left);
    out.insert(out.end(), right.begin(), right.end());
    out.push_back(dp + dm);
    return out;
  }
  out = std::move(left);
  out.insert(out.end(), right.begin(), right.end());
  return out;
}

struct TreeNode {
  LatticePoint x;
  int left = -1, right = -1;
};

inline int build_tree(const LatticePoint& x, std::vector<TreeNode>& nodes) {
  int id = static_cast<int>(nodes.size());
  nodes.push_back({x});
  Coord m = linf_norm(x);
  if (m >= 2) {
    int l = build_tree(ceil_half(x), nodes);
    int r = build_tree(floor_half(x), nodes);
    nodes[static_cast<std::size_t>(id)].left = l;
    nodes[static_cast<std::size_t>(id)].right = r;
  }
  return id;
}

}  // namespace detail

inline Decomposition d0_decompose(const LatticePoint& v) {
  Decomposition d{Stage::d0, v, {}, {}};
  detail::d0_into(v, d.vectors);
  std::sort(d.vectors.begin(), d.vectors.end());
  return d;
}

inline Decomposition d1_decompose(const LatticePoint& v) {
  Decomposition d{Stage::d1, v, detail::d1_rec(v), {}};
  std::sort(d.vectors.begin(), d.vectors.end());
  return d;
}

// D1 built from the explicit D0 tree: every leaf minus the d⊕/d⊖ leaves of the
// critical vertices, plus d⊕ + d⊖ for each critical vertex.
inline Decomposition d1_decompose_tree(const LatticePoint& v) {
  std::vector<detail::TreeNode> nodes;
  if (!v.is_zero()) detail::build_tree(v, nodes);
  std::vector<bool> removed(nodes.size(), false);
  std::vector<LatticePoint> extra;
  auto descend = [&](int id, bool to_left) {
    while (nodes[static_cast<std::size_t>(id)].left >= 0)
      id = to_left ? nodes[static_cast<std::size_t>(id)].left : nodes[static_cast<std::size_t>(id)].right;
    return id;
  };
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (!is_critical(nodes[i].x)) continue;
    int lp = descend(static_cast<int>(i), true), rm = descend(static_cast<int>(i), false);
    if (removed[static_cast<std::size_t>(lp)] || removed[static_cast<std::size_t>(rm)])
      throw std::logic_error("D1 tree: a leaf is claimed by two critical vertices");
    removed[static_cast<std::size_t>(lp)] = removed[static_cast<std::size_t>(rm)] = true;
    extra.push_back(nodes[static_cast<std::size_t>(lp)].x + nodes[static_cast<std::size_t>(rm)].x);
  }
  Decomposition d{Stage::d1, v, {}, {}};
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i].left < 0 && !removed[i] && !nodes[i].x.is_zero()) d.vectors.push_back(nodes[i].x);
  d.vectors.insert(d.vectors.end(), extra.begin(), extra.end());
  std::sort(d.vectors.begin(), d.vectors.end());
  return d;
}

// Repeatedly replaces the lexicographically first incomparable pair by its
// rounded midpoints until the vectors form a chain.
inline Decomposition d2_decompose(const LatticePoint& v) {
  Decomposition d = d1_decompose(v);
  d.stage = Stage::d2;
  auto& vs = d.vectors;
  for (;;) {
    std::optional<std::pair<std::size_t, std::size_t>> pick;
    for (std::size_t i = 0; i < vs.size() && !pick; ++i)
      for (std::size_t j = i + 1; j < vs.size() && !pick; ++j)
        if (!vs[i].leq(vs[j]) && !vs[j].leq(vs[i])) pick = {i, j};
    if (!pick) break;
    auto [i, j] = *pick;
    Rounding r = midpoint_round(vs[i], vs[j]);
    d.twists.push_back({vs[i], vs[j], r.up, r.down});
    vs[i] = r.up;
    vs[j] = r.down;
    std::sort(vs.begin(), vs.end());
  }
  return d;
}

inline Decomposition step_stage(const LatticePoint& v) {
  Decomposition d{Stage::steps, v, step_decompose(v).steps(), {}};
  std::sort(d.vectors.begin(), d.vectors.end());
  return d;
}

inline Decomposition decompose(const LatticePoint& v, Stage stage) {
  switch (stage) {
    case Stage::steps: return step_stage(v);
    case Stage::d0: return d0_decompose(v);
    case Stage::d1: return d1_decompose(v);
    default: return d2_decompose(v);
  }
}

// The six conditions on a decomposition of v.
struct ConditionReport {
  bool c1 = false;  // each vector in {-1,0,1}^n and nonzero
  bool c2 = false;  // the vectors sum to v
  bool c3 = false;  // sign supports inside those of v
  bool c4 = false;  // positive supports form a chain, and so do negative supports
  bool c5 = false;  // count equals |v|_inf
  bool c6 = false;  // the vectors form a chain
};

inline ConditionReport check_conditions(const Decomposition& d) {
  const auto& vs = d.vectors;
  const LatticePoint& v = d.v;
  std::size_t n = v.size();
  ConditionReport r;
  r.c1 = std::all_of(vs.begin(), vs.end(), [&](const LatticePoint& x) {
    return x.size() == n && !x.is_zero() && std::all_of(x.begin(), x.end(), [](Coord c) { return c >= -1 && c <= 1; });
  });
  LatticePoint sum(n);
  for (const auto& x : vs) sum += x;
  r.c2 = sum == v;
  r.c3 = std::all_of(vs.begin(), vs.end(), [&](const LatticePoint& x) {
    for (std::size_t i = 0; i < n; ++i)
      if ((x[i] > 0 && v[i] <= 0) || (x[i] < 0 && v[i] >= 0)) return false;
    return true;
  });
  auto nested = [&](int sign) {
    for (const auto& a : vs)
      for (const auto& b : vs) {
        bool ab = true, ba = true;
        for (std::size_t i = 0; i < n; ++i) {
          bool in_a = sign > 0 ? a[i] > 0 : a[i] < 0, in_b = sign > 0 ? b[i] > 0 : b[i] < 0;
          if (in_a && !in_b) ab = false;
          if (in_b && !in_a) ba = false;
        }
        if (!ab && !ba) return false;
      }
    return true;
  };
  r.c4 = nested(1) && nested(-1);
  r.c5 = static_cast<Coord>(vs.size()) == linf_norm(v);
  r.c6 = true;
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (!vs[i].leq(vs[j]) && !vs[j].leq(vs[i])) r.c6 = false;
  return r;
}

// Conditions the stage is expected to satisfy.
inline bool stage_conditions_hold(const Decomposition& d) {
  ConditionReport c = check_conditions(d);
  bool base = c.c1 && c.c2 && c.c3 && c.c4;
  switch (d.stage) {
    case Stage::d0: return base;
    case Stage::d1: return base && c.c5;
    default: return base && c.c5 && c.c6;
  }
}

struct CriticalInfo {
  bool critical = false;
  LatticePoint d_plus, d_minus;  // leftmost and rightmost leaves of the D0 tree
};

inline CriticalInfo critical_check(const LatticePoint& x) {
  return CriticalInfo{is_critical(x), detail::leftmost_leaf(x), detail::rightmost_leaf(x)};
}

// For a DMC set S: x + Σ_{d ∈ E} d ∈ S for every subset E of the D2 vectors of y - x.
inline Verdict set_membership_sweep(const PointSet& s, const LatticePoint& x, const LatticePoint& y, unsigned jobs = 1) {
  require_same_dim(x, y, "set_membership_sweep");
  if (!s.contains(x) || !s.contains(y)) throw Error("set_membership_sweep: x and y must belong to S");
  if (!is_dmc_set(s, jobs).holds) throw Error("set_membership_sweep: S is not a discrete midpoint convex set");
  std::vector<LatticePoint> ds = d2_decompose(y - x).vectors;
  if (ds.size() > 24) throw Error("set_membership_sweep: too many vectors for a subset sweep");
  std::size_t subsets = std::size_t{1} << ds.size();
  return scan_rows(subsets, jobs, [&](std::size_t mask) {
    RowOutcome out;
    out.pairs = 1;
    LatticePoint z = x;
    for (std::size_t k = 0; k < ds.size(); ++k)
      if (mask & (std::size_t{1} << k)) z += ds[k];
    if (!s.contains(z)) out.witness = Witness{x, z, ExtValue(0), ExtValue::infinity()};
    return out;
  });
}

inline Json decomposition_to_json(const Decomposition& d) {
  Json vecs = Json::array();
  for (const auto& x : d.vectors) vecs.push_back(doc::to_json(x));
  Json twists = Json::array();
  for (const auto& t : d.twists)
    twists.push_back(Json{{"pair", Json::array({doc::to_json(t.first), doc::to_json(t.second)})},
                          {"result", Json::array({doc::to_json(t.up), doc::to_json(t.down)})}});
  ConditionReport c = check_conditions(d);
  Json conds{{"C1", c.c1}, {"C2", c.c2}, {"C3", c.c3}, {"C4", c.c4}, {"C5", c.c5}, {"C6", c.c6}};
  return Json{{"stage", to_string(d.stage)}, {"vector", doc::to_json(d.v)}, {"vectors", vecs}, {"twists", twists},
              {"conditions", conds}};
}

}  // namespace dmckit
