#pragma once

// Function oracles on Z^n with values in Q ∪ {+inf}, and combinators.

#include "dmckit/lattice.hpp"

#include <atomic>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace dmckit {

class FnOracle {
 public:
  explicit FnOracle(std::size_t dim) : dim_(dim) {}
  virtual ~FnOracle() = default;
  FnOracle(const FnOracle&) = delete;
  FnOracle& operator=(const FnOracle&) = delete;

  std::size_t dim() const { return dim_; }

  ExtValue operator()(const LatticePoint& x) const {
    if (x.size() != dim_)
      throw Error("function of dimension " + std::to_string(dim_) + " evaluated at " + x.str());
    return evaluate(x);
  }

  // Base evaluations performed so far; composites report their operands' counters.
  virtual std::uint64_t eval_count() const = 0;

  // A box known to contain the effective domain, if the function has one.
  // Checkers use it when the caller gives no box.
  virtual std::optional<Box> domain_box() const { return std::nullopt; }

 protected:
  virtual ExtValue evaluate(const LatticePoint& x) const = 0;

 private:
  std::size_t dim_;
};

using FnPtr = std::shared_ptr<const FnOracle>;

// Base for functions that own a counter.
class CountedFn : public FnOracle {
 public:
  using FnOracle::FnOracle;
  std::uint64_t eval_count() const override { return count_.load(std::memory_order_relaxed); }

 protected:
  ExtValue evaluate(const LatticePoint& x) const final {
    count_.fetch_add(1, std::memory_order_relaxed);
    return value_at(x);
  }
  virtual ExtValue value_at(const LatticePoint& x) const = 0;

 private:
  mutable std::atomic<std::uint64_t> count_{0};
};

using Matrix = std::vector<std::vector<Rational>>;

inline void require_symmetric(const Matrix& q, const char* what) {
  std::size_t n = q.size();
  for (const auto& row : q)
    if (row.size() != n) throw Error(std::string(what) + ": matrix is not square");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (q[i][j] != q[j][i]) throw Error(std::string(what) + ": matrix is not symmetric");
}

// f(x) = x^T Q x, optionally +inf outside a box.
class QuadraticFn : public CountedFn {
 public:
  explicit QuadraticFn(Matrix q, std::optional<Box> domain = std::nullopt)
      : CountedFn(q.size()), q_(std::move(q)), domain_(std::move(domain)) {
    require_symmetric(q_, "QuadraticFn");
    if (domain_ && domain_->dim() != q_.size()) throw Error("QuadraticFn: domain box dimension mismatch");
  }
  const Matrix& matrix() const { return q_; }
  std::optional<Box> domain_box() const override { return domain_; }

 protected:
  ExtValue value_at(const LatticePoint& x) const override {
    if (domain_ && !domain_->contains(x)) return ExtValue::infinity();
    Rational s;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] == 0) continue;
      Rational row;
      for (std::size_t j = 0; j < x.size(); ++j)
        if (x[j] != 0) row += q_[i][j] * Rational(x[j]);
      s += Rational(x[i]) * row;
    }
    return s;
  }

 private:
  Matrix q_;
  std::optional<Box> domain_;
};

// A univariate function given by values on [lo, lo + values.size() - 1]; +inf elsewhere.
struct UnivariateTable {
  Coord lo = 0;
  std::vector<ExtValue> values;

  ExtValue at(Coord t) const {
    if (t < lo || t - lo >= static_cast<Coord>(values.size())) return ExtValue::infinity();
    return values[static_cast<std::size_t>(t - lo)];
  }
};

// f(x) = sum_i phi_i(x_i) with each phi_i discretely convex.
class SeparableConvexFn : public CountedFn {
 public:
  explicit SeparableConvexFn(std::vector<UnivariateTable> phi) : CountedFn(phi.size()), phi_(std::move(phi)) {
    for (std::size_t i = 0; i < phi_.size(); ++i) {
      const auto& p = phi_[i];
      bool any = false;
      for (const auto& v : p.values) any = any || v.is_finite();
      if (!any) throw Error("SeparableConvexFn: phi_" + std::to_string(i + 1) + " has empty domain");
      for (Coord t = p.lo; t < p.lo + static_cast<Coord>(p.values.size()); ++t)
        if (p.at(t - 1) + p.at(t + 1) < p.at(t) + p.at(t))
          throw Error("SeparableConvexFn: phi_" + std::to_string(i + 1) + " is not discretely convex at " +
                      std::to_string(t));
    }
  }
  std::optional<Box> domain_box() const override {
    LatticePoint lo(phi_.size()), hi(phi_.size());
    for (std::size_t i = 0; i < phi_.size(); ++i) {
      const auto& v = phi_[i].values;
      std::size_t a = 0, b = v.size() - 1;
      while (v[a].is_inf()) ++a;
      while (v[b].is_inf()) --b;
      lo[i] = phi_[i].lo + static_cast<Coord>(a);
      hi[i] = phi_[i].lo + static_cast<Coord>(b);
    }
    return Box(lo, hi);
  }

 protected:
  ExtValue value_at(const LatticePoint& x) const override {
    ExtValue s(0);
    for (std::size_t i = 0; i < x.size(); ++i) {
      s += phi_[i].at(x[i]);
      if (s.is_inf()) break;
    }
    return s;
  }

 private:
  std::vector<UnivariateTable> phi_;
};

// Explicit values on a box; +inf outside it.
class TableFn : public CountedFn {
 public:
  TableFn(Box box, std::vector<ExtValue> values) : CountedFn(box.dim()), box_(std::move(box)), values_(std::move(values)) {
    if (values_.size() != box_.cardinality()) throw Error("TableFn: value count does not match box size");
  }
  const Box& box() const { return box_; }
  const std::vector<ExtValue>& values() const { return values_; }
  std::optional<Box> domain_box() const override { return box_; }

 protected:
  ExtValue value_at(const LatticePoint& x) const override {
    if (!box_.contains(x)) return ExtValue::infinity();
    return values_[box_.index_of(x)];
  }

 private:
  Box box_;
  std::vector<ExtValue> values_;
};

// 0 on a finite point set, +inf elsewhere.
class IndicatorFn : public CountedFn {
 public:
  IndicatorFn(std::size_t dim, std::vector<LatticePoint> points) : CountedFn(dim), pts_(points.begin(), points.end()) {
    for (const auto& p : pts_)
      if (p.size() != dim) throw Error("IndicatorFn: point dimension mismatch");
  }
  const std::set<LatticePoint>& points() const { return pts_; }
  std::optional<Box> domain_box() const override { return bounding_box(); }

 protected:
  ExtValue value_at(const LatticePoint& x) const override {
    return pts_.count(x) ? ExtValue(0) : ExtValue::infinity();
  }

 private:
  std::optional<Box> bounding_box() const {
    if (pts_.empty()) return std::nullopt;
    LatticePoint lo = *pts_.begin(), hi = lo;
    for (const auto& p : pts_)
      for (std::size_t i = 0; i < p.size(); ++i) {
        lo[i] = std::min(lo[i], p[i]);
        hi[i] = std::max(hi[i], p[i]);
      }
    return Box(lo, hi);
  }
  std::set<LatticePoint> pts_;
};

// c^T x on a domain given by a membership predicate inside a bounding box.
class LinearOnSetFn : public CountedFn {
 public:
  using Membership = std::function<bool(const LatticePoint&)>;

  LinearOnSetFn(std::vector<Rational> c, Box bound, Membership member)
      : CountedFn(c.size()), c_(std::move(c)), bound_(std::move(bound)), member_(std::move(member)) {
    if (bound_.dim() != c_.size()) throw Error("LinearOnSetFn: bounding box dimension mismatch");
  }
  // Domain given by an explicit point list.
  LinearOnSetFn(std::vector<Rational> c, const std::vector<LatticePoint>& points)
      : LinearOnSetFn(c, bounding(c.size(), points), member_of(points)) {}

  std::optional<Box> domain_box() const override { return bound_; }

 protected:
  ExtValue value_at(const LatticePoint& x) const override {
    if (!bound_.contains(x) || !member_(x)) return ExtValue::infinity();
    Rational s;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i] != 0) s += c_[i] * Rational(x[i]);
    return s;
  }

 private:
  static Box bounding(std::size_t n, const std::vector<LatticePoint>& pts) {
    if (pts.empty()) throw Error("LinearOnSetFn: empty domain");
    LatticePoint lo = pts.front(), hi = lo;
    for (const auto& p : pts) {
      if (p.size() != n) throw Error("LinearOnSetFn: point dimension mismatch");
      for (std::size_t i = 0; i < n; ++i) {
        lo[i] = std::min(lo[i], p[i]);
        hi[i] = std::max(hi[i], p[i]);
      }
    }
    return Box(lo, hi);
  }
  static Membership member_of(const std::vector<LatticePoint>& pts) {
    auto s = std::make_shared<std::set<LatticePoint>>(pts.begin(), pts.end());
    return [s](const LatticePoint& x) { return s->count(x) > 0; };
  }

  std::vector<Rational> c_;
  Box bound_;
  Membership member_;
};

// Wraps an arbitrary callable.
class CallableFn : public CountedFn {
 public:
  using Body = std::function<ExtValue(const LatticePoint&)>;
  CallableFn(std::size_t dim, Body body, std::optional<Box> domain = std::nullopt)
      : CountedFn(dim), body_(std::move(body)), domain_(std::move(domain)) {}
  std::optional<Box> domain_box() const override { return domain_; }

 protected:
  ExtValue value_at(const LatticePoint& x) const override {
    if (domain_ && !domain_->contains(x)) return ExtValue::infinity();
    return body_(x);
  }

 private:
  Body body_;
  std::optional<Box> domain_;
};

namespace detail {

class UnaryWrapper : public FnOracle {
 public:
  explicit UnaryWrapper(FnPtr base) : FnOracle(base->dim()), base_(std::move(base)) {}
  std::uint64_t eval_count() const override { return base_->eval_count(); }
  const FnOracle& base() const { return *base_; }

 protected:
  FnPtr base_;
};

class Translated : public UnaryWrapper {
 public:
  Translated(FnPtr f, LatticePoint z) : UnaryWrapper(std::move(f)), z_(std::move(z)) {
    if (z_.size() != dim()) throw Error("translate: dimension mismatch");
  }
  std::optional<Box> domain_box() const override {
    auto b = base_->domain_box();
    if (!b) return b;
    return Box(b->lo() - z_, b->hi() - z_);
  }

 protected:
  ExtValue evaluate(const LatticePoint& x) const override { return (*base_)(x + z_); }

 private:
  LatticePoint z_;
};

class Permuted : public UnaryWrapper {
 public:
  Permuted(FnPtr f, std::vector<std::size_t> sigma) : UnaryWrapper(std::move(f)), sigma_(std::move(sigma)) {
    std::vector<bool> seen(dim(), false);
    if (sigma_.size() != dim()) throw Error("permute: permutation length mismatch");
    for (std::size_t s : sigma_) {
      if (s >= dim() || seen[s]) throw Error("permute: not a permutation");
      seen[s] = true;
    }
  }
  std::optional<Box> domain_box() const override {
    auto b = base_->domain_box();
    if (!b) return b;
    LatticePoint lo(dim()), hi(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
      lo[i] = b->lo()[sigma_[i]];
      hi[i] = b->hi()[sigma_[i]];
    }
    return Box(lo, hi);
  }

 protected:
  // g(x) = f(y) with y_{sigma(i)} = x_i.
  ExtValue evaluate(const LatticePoint& x) const override {
    LatticePoint y(dim());
    for (std::size_t i = 0; i < dim(); ++i) y[sigma_[i]] = x[i];
    return (*base_)(y);
  }

 private:
  std::vector<std::size_t> sigma_;
};

class Negated : public UnaryWrapper {
 public:
  using UnaryWrapper::UnaryWrapper;
  std::optional<Box> domain_box() const override {
    auto b = base_->domain_box();
    if (!b) return b;
    return Box(-b->hi(), -b->lo());
  }

 protected:
  ExtValue evaluate(const LatticePoint& x) const override { return (*base_)(-x); }
};

class Scaled : public UnaryWrapper {
 public:
  Scaled(FnPtr f, Coord alpha) : UnaryWrapper(std::move(f)), alpha_(alpha) {
    if (alpha_ < 1) throw Error("scale_fn: scaling factor must be a positive integer");
  }
  std::optional<Box> domain_box() const override {
    auto b = base_->domain_box();
    if (!b) return b;
    LatticePoint lo(dim()), hi(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
      // ceil(lo/alpha) .. floor(hi/alpha)
      Coord l = b->lo()[i], h = b->hi()[i];
      lo[i] = l >= 0 ? (l + alpha_ - 1) / alpha_ : -((-l) / alpha_);
      hi[i] = h >= 0 ? h / alpha_ : -((-h + alpha_ - 1) / alpha_);
    }
    for (std::size_t i = 0; i < dim(); ++i)
      if (lo[i] > hi[i]) return std::nullopt;
    return Box(lo, hi);
  }

 protected:
  ExtValue evaluate(const LatticePoint& x) const override { return (*base_)(alpha_ * x); }

 private:
  Coord alpha_;
};

class Restricted : public UnaryWrapper {
 public:
  Restricted(FnPtr f, Box box) : UnaryWrapper(std::move(f)), box_(std::move(box)) {
    if (box_.dim() != dim()) throw Error("restrict_to: dimension mismatch");
  }
  std::optional<Box> domain_box() const override {
    auto b = base_->domain_box();
    if (!b) return box_;
    auto i = b->intersect(box_);
    return i ? i : box_;
  }

 protected:
  ExtValue evaluate(const LatticePoint& x) const override {
    return box_.contains(x) ? (*base_)(x) : ExtValue::infinity();
  }

 private:
  Box box_;
};

class WeightedSum : public FnOracle {
 public:
  WeightedSum(Rational a1, FnPtr f1, Rational a2, FnPtr f2)
      : FnOracle(f1->dim()), a1_(std::move(a1)), a2_(std::move(a2)), f1_(std::move(f1)), f2_(std::move(f2)) {
    if (f2_->dim() != f1_->dim()) throw Error("weighted_sum: dimension mismatch");
    if (a1_.sign() < 0 || a2_.sign() < 0) throw Error("weighted_sum: weights must be nonnegative");
  }
  std::uint64_t eval_count() const override {
    return f1_ == f2_ ? f1_->eval_count() : f1_->eval_count() + f2_->eval_count();
  }
  std::optional<Box> domain_box() const override {
    auto b1 = a1_.sign() ? f1_->domain_box() : std::nullopt;
    auto b2 = a2_.sign() ? f2_->domain_box() : std::nullopt;
    if (!b1) return b2;
    if (!b2) return b1;
    auto i = b1->intersect(*b2);
    return i ? i : b1;
  }

 protected:
  ExtValue evaluate(const LatticePoint& x) const override {
    if (a1_.sign() == 0 && a2_.sign() == 0) return ExtValue(0);
    if (a1_.sign() == 0) return (*f2_)(x).scaled(a2_);
    if (a2_.sign() == 0) return (*f1_)(x).scaled(a1_);
    ExtValue v1 = (*f1_)(x);
    if (v1.is_inf()) return v1;
    return v1.scaled(a1_) + (*f2_)(x).scaled(a2_);
  }

 private:
  Rational a1_, a2_;
  FnPtr f1_, f2_;
};

}  // namespace detail

// g(x) = f(x + z)
inline FnPtr translate(FnPtr f, LatticePoint z) { return std::make_shared<detail::Translated>(std::move(f), std::move(z)); }

// g(x) = f(y) where y_{sigma(i)} = x_i; sigma is 0-based.
inline FnPtr permute(FnPtr f, std::vector<std::size_t> sigma) {
  return std::make_shared<detail::Permuted>(std::move(f), std::move(sigma));
}

// g(x) = f(-x)
inline FnPtr negate_all(FnPtr f) { return std::make_shared<detail::Negated>(std::move(f)); }

// g = a1 f1 + a2 f2 with a1, a2 >= 0. A zero weight drops its term entirely,
// so 0 * (+inf) counts as 0.
inline FnPtr weighted_sum(Rational a1, FnPtr f1, Rational a2, FnPtr f2) {
  return std::make_shared<detail::WeightedSum>(std::move(a1), std::move(f1), std::move(a2), std::move(f2));
}

// g(y) = f(alpha y)
inline FnPtr scale_fn(FnPtr f, Coord alpha) { return std::make_shared<detail::Scaled>(std::move(f), alpha); }

// f restricted to a box (+inf outside).
inline FnPtr restrict_to(FnPtr f, const Box& box) {
  return std::make_shared<detail::Restricted>(std::move(f), box);
}

inline FnPtr make_quadratic(Matrix q, std::optional<Box> domain = std::nullopt) {
  return std::make_shared<QuadraticFn>(std::move(q), std::move(domain));
}
inline FnPtr make_indicator(std::size_t dim, std::vector<LatticePoint> pts) {
  return std::make_shared<IndicatorFn>(dim, std::move(pts));
}
inline FnPtr make_callable(std::size_t dim, CallableFn::Body body, std::optional<Box> domain = std::nullopt) {
  return std::make_shared<CallableFn>(dim, std::move(body), std::move(domain));
}

// Tabulates f on a box.
inline std::shared_ptr<TableFn> tabulate(const FnOracle& f, const Box& box) {
  std::vector<ExtValue> vals;
  vals.reserve(box.cardinality());
  box.for_each([&](const LatticePoint& x) { vals.push_back(f(x)); });
  return std::make_shared<TableFn>(box, std::move(vals));
}

}  // namespace dmckit
