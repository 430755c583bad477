#pragma once

// Integer lattice primitives: points, boxes, rounded midpoints, and the
// step-chain representation of an integer vector.

#include "dmckit/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace dmckit {

using Coord = std::int64_t;

class LatticePoint {
 public:
  LatticePoint() = default;
  explicit LatticePoint(std::size_t n, Coord fill = 0) : c_(n, fill) {}
  LatticePoint(std::initializer_list<Coord> c) : c_(c) {}
  explicit LatticePoint(std::vector<Coord> c) : c_(std::move(c)) {}

  std::size_t size() const { return c_.size(); }
  Coord operator[](std::size_t i) const { return c_[i]; }
  Coord& operator[](std::size_t i) { return c_[i]; }
  auto begin() const { return c_.begin(); }
  auto end() const { return c_.end(); }
  const std::vector<Coord>& coords() const { return c_; }

  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](Coord v) { return v == 0; });
  }
  // Componentwise order.
  bool leq(const LatticePoint& o) const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (c_[i] > o.c_[i]) return false;
    return true;
  }

  LatticePoint& operator+=(const LatticePoint& o) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  LatticePoint& operator-=(const LatticePoint& o) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  friend LatticePoint operator+(LatticePoint a, const LatticePoint& b) { return a += b; }
  friend LatticePoint operator-(LatticePoint a, const LatticePoint& b) { return a -= b; }
  friend LatticePoint operator-(LatticePoint a) {
    for (auto& v : a.c_) v = -v;
    return a;
  }
  friend LatticePoint operator*(Coord s, LatticePoint a) {
    for (auto& v : a.c_) v *= s;
    return a;
  }

  // Lexicographic.
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(c_[i]);
    }
    return s + ")";
  }

 private:
  std::vector<Coord> c_;
};

inline void require_same_dim(const LatticePoint& a, const LatticePoint& b, const char* what) {
  if (a.size() != b.size())
    throw Error(std::string(what) + ": dimension mismatch (" + std::to_string(a.size()) + " vs " +
                std::to_string(b.size()) + ")");
}

inline Coord floor_half(Coord a) { return (a - (a & 1)) / 2; }
inline Coord ceil_half(Coord a) { return (a + (a & 1)) / 2; }

inline LatticePoint ceil_half(const LatticePoint& v) {
  LatticePoint r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = ceil_half(v[i]);
  return r;
}
inline LatticePoint floor_half(const LatticePoint& v) {
  LatticePoint r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = floor_half(v[i]);
  return r;
}

inline Coord linf_norm(const LatticePoint& v) {
  Coord m = 0;
  for (Coord c : v) m = std::max(m, c < 0 ? -c : c);
  return m;
}
inline Coord pos_norm(const LatticePoint& v) {
  Coord m = 0;
  for (Coord c : v) m = std::max(m, c);
  return m;
}
inline Coord neg_norm(const LatticePoint& v) {
  Coord m = 0;
  for (Coord c : v) m = std::max(m, -c);
  return m;
}

inline Coord linf_distance(const LatticePoint& x, const LatticePoint& y) {
  require_same_dim(x, y, "linf_distance");
  Coord m = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    Coord d = x[i] - y[i];
    m = std::max(m, d < 0 ? -d : d);
  }
  return m;
}

struct Rounding {
  LatticePoint up;    // ceil((x+y)/2)
  LatticePoint down;  // floor((x+y)/2)
};

inline Rounding midpoint_round(const LatticePoint& x, const LatticePoint& y) {
  require_same_dim(x, y, "midpoint_round");
  Rounding r{LatticePoint(x.size()), LatticePoint(x.size())};
  for (std::size_t i = 0; i < x.size(); ++i) {
    Coord s = x[i] + y[i];
    r.up[i] = ceil_half(s);
    r.down[i] = floor_half(s);
  }
  return r;
}

class RationalPoint {
 public:
  RationalPoint() = default;
  explicit RationalPoint(std::vector<Rational> c) : c_(std::move(c)) {}
  explicit RationalPoint(const LatticePoint& p) {
    c_.reserve(p.size());
    for (Coord v : p) c_.emplace_back(static_cast<long long>(v));
  }
  static RationalPoint midpoint(const LatticePoint& x, const LatticePoint& y) {
    require_same_dim(x, y, "midpoint");
    std::vector<Rational> c;
    c.reserve(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) c.emplace_back(x[i] + y[i], 2);
    return RationalPoint(std::move(c));
  }

  std::size_t size() const { return c_.size(); }
  const Rational& operator[](std::size_t i) const { return c_[i]; }
  auto begin() const { return c_.begin(); }
  auto end() const { return c_.end(); }
  bool is_integral() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r.is_integer(); });
  }
  LatticePoint to_lattice() const {
    LatticePoint p(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (!c_[i].is_integer()) throw Error("point is not integral");
      p[i] = c_[i].floor_int();
    }
    return p;
  }
  friend bool operator==(const RationalPoint&, const RationalPoint&) = default;

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (i) s += ",";
      s += c_[i].str();
    }
    return s + ")";
  }

 private:
  std::vector<Rational> c_;
};

// All integer points z with |x_i - z_i| < 1, in lexicographic order.
inline std::vector<LatticePoint> integer_neighborhood(const RationalPoint& x) {
  std::size_t n = x.size();
  LatticePoint base(n);
  std::vector<std::size_t> frac;
  for (std::size_t i = 0; i < n; ++i) {
    base[i] = x[i].floor_int();
    if (!x[i].is_integer()) frac.push_back(i);
  }
  std::size_t k = frac.size();
  if (k > 30) throw Error("integer_neighborhood: too many fractional coordinates");
  std::vector<LatticePoint> out;
  out.reserve(std::size_t{1} << k);
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    LatticePoint z = base;
    // Highest bit drives the first fractional coordinate so the output is lexicographic.
    for (std::size_t j = 0; j < k; ++j)
      if (mask & (std::size_t{1} << (k - 1 - j))) z[frac[j]] += 1;
    out.push_back(std::move(z));
  }
  return out;
}

class Box {
 public:
  Box() = default;
  Box(LatticePoint lo, LatticePoint hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    require_same_dim(lo_, hi_, "Box");
    for (std::size_t i = 0; i < lo_.size(); ++i)
      if (lo_[i] > hi_[i]) throw Error("Box: empty interval in coordinate " + std::to_string(i + 1));
  }
  static Box cube(std::size_t n, Coord lo, Coord hi) { return Box(LatticePoint(n, lo), LatticePoint(n, hi)); }
  static Box around(const LatticePoint& c, Coord r) {
    return Box(c - LatticePoint(c.size(), r), c + LatticePoint(c.size(), r));
  }

  std::size_t dim() const { return lo_.size(); }
  const LatticePoint& lo() const { return lo_; }
  const LatticePoint& hi() const { return hi_; }
  Coord width(std::size_t i) const { return hi_[i] - lo_[i] + 1; }

  bool contains(const LatticePoint& p) const {
    if (p.size() != lo_.size()) return false;
    for (std::size_t i = 0; i < p.size(); ++i)
      if (p[i] < lo_[i] || p[i] > hi_[i]) return false;
    return true;
  }

  std::size_t cardinality() const {
    std::size_t n = 1;
    for (std::size_t i = 0; i < dim(); ++i) {
      auto w = static_cast<std::size_t>(width(i));
      if (n > kMaxCardinality / w) throw Error("Box " + str() + " is too large to enumerate");
      n *= w;
    }
    return n;
  }

  // Dense index with the last coordinate varying fastest, so index order is lexicographic.
  std::size_t index_of(const LatticePoint& p) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < dim(); ++i) idx = idx * static_cast<std::size_t>(width(i)) + static_cast<std::size_t>(p[i] - lo_[i]);
    return idx;
  }
  LatticePoint point_at(std::size_t idx) const {
    LatticePoint p(dim());
    for (std::size_t i = dim(); i-- > 0;) {
      auto w = static_cast<std::size_t>(width(i));
      p[i] = lo_[i] + static_cast<Coord>(idx % w);
      idx /= w;
    }
    return p;
  }

  template <class F>
  void for_each(F&& f) const {
    std::size_t n = dim();
    LatticePoint p = lo_;
    if (n == 0) {
      f(p);
      return;
    }
    for (;;) {
      f(static_cast<const LatticePoint&>(p));
      std::size_t i = n;
      while (i-- > 0) {
        if (p[i] < hi_[i]) {
          ++p[i];
          break;
        }
        p[i] = lo_[i];
        if (i == 0) return;
      }
    }
  }

  std::optional<Box> intersect(const Box& o) const {
    if (o.dim() != dim()) throw Error("Box::intersect: dimension mismatch");
    LatticePoint lo(dim()), hi(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
      lo[i] = std::max(lo_[i], o.lo_[i]);
      hi[i] = std::min(hi_[i], o.hi_[i]);
      if (lo[i] > hi[i]) return std::nullopt;
    }
    return Box(lo, hi);
  }

  friend bool operator==(const Box&, const Box&) = default;

  // "lo..hi,lo..hi" as accepted on the command line.
  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < dim(); ++i) {
      if (i) s += ",";
      s += std::to_string(lo_[i]) + ".." + std::to_string(hi_[i]);
    }
    return s;
  }

  static constexpr std::size_t kMaxCardinality = std::size_t{1} << 32;

 private:
  LatticePoint lo_, hi_;
};

// 0-based coordinate indices, sorted and duplicate-free.
using IndexSet = std::vector<int>;

// v = sum_k (1_{A_k} - 1_{B_k}) with A_1 ⊆ ... ⊆ A_m, B_1 ⊇ ... ⊇ B_m,
// A_m ∩ B_1 = ∅ and A_1 ∪ B_m ≠ ∅. Steps are indexed 0..m-1 here.
class StepChain {
 public:
  StepChain() = default;
  StepChain(std::size_t dim, std::vector<IndexSet> a, std::vector<IndexSet> b)
      : dim_(dim), a_(std::move(a)), b_(std::move(b)) {
    validate();
  }

  std::size_t dim() const { return dim_; }
  std::size_t length() const { return a_.size(); }
  const IndexSet& a(std::size_t k) const { return a_.at(k); }
  const IndexSet& b(std::size_t k) const { return b_.at(k); }

  LatticePoint step(std::size_t k) const {
    LatticePoint d(dim_);
    for (int i : a_.at(k)) d[static_cast<std::size_t>(i)] += 1;
    for (int i : b_.at(k)) d[static_cast<std::size_t>(i)] -= 1;
    return d;
  }
  std::vector<LatticePoint> steps() const {
    std::vector<LatticePoint> out;
    for (std::size_t k = 0; k < length(); ++k) out.push_back(step(k));
    return out;
  }
  LatticePoint reconstruct() const {
    LatticePoint v(dim_);
    for (std::size_t k = 0; k < length(); ++k) v += step(k);
    return v;
  }

 private:
  static bool subset(const IndexSet& s, const IndexSet& t) { return std::includes(t.begin(), t.end(), s.begin(), s.end()); }

  void validate() const {
    if (a_.size() != b_.size()) throw Error("StepChain: A and B chains differ in length");
    for (const auto* fam : {&a_, &b_})
      for (const auto& s : *fam) {
        if (!std::is_sorted(s.begin(), s.end()) || std::adjacent_find(s.begin(), s.end()) != s.end())
          throw Error("StepChain: index sets must be sorted and duplicate-free");
        for (int i : s)
          if (i < 0 || static_cast<std::size_t>(i) >= dim_) throw Error("StepChain: index out of range");
      }
    std::size_t m = a_.size();
    if (m == 0) return;
    for (std::size_t k = 0; k + 1 < m; ++k) {
      if (!subset(a_[k], a_[k + 1])) throw Error("StepChain: A sets are not increasing");
      if (!subset(b_[k + 1], b_[k])) throw Error("StepChain: B sets are not decreasing");
    }
    for (int i : a_[m - 1])
      if (std::binary_search(b_[0].begin(), b_[0].end(), i)) throw Error("StepChain: A_m and B_1 intersect");
    if (a_[0].empty() && b_[m - 1].empty()) throw Error("StepChain: A_1 and B_m are both empty");
  }

  std::size_t dim_ = 0;
  std::vector<IndexSet> a_, b_;
};

inline StepChain step_decompose(const LatticePoint& v) {
  Coord m = linf_norm(v);
  std::vector<IndexSet> a, b;
  for (Coord k = 1; k <= m; ++k) {
    IndexSet ak, bk;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] >= m + 1 - k) ak.push_back(static_cast<int>(i));
      if (v[i] <= -k) bk.push_back(static_cast<int>(i));
    }
    a.push_back(std::move(ak));
    b.push_back(std::move(bk));
  }
  return StepChain(v.size(), std::move(a), std::move(b));
}

// Sum of the steps whose (0-based) indices are listed in j.
inline LatticePoint chain_partial_sum(const StepChain& chain, std::span<const int> j) {
  LatticePoint s(chain.dim());
  std::vector<bool> seen(chain.length(), false);
  for (int k : j) {
    if (k < 0 || static_cast<std::size_t>(k) >= chain.length())
      throw Error("chain_partial_sum: step index " + std::to_string(k) + " out of range");
    if (seen[static_cast<std::size_t>(k)]) throw Error("chain_partial_sum: repeated step index");
    seen[static_cast<std::size_t>(k)] = true;
    s += chain.step(static_cast<std::size_t>(k));
  }
  return s;
}

}  // namespace dmckit
