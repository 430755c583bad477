#pragma once

// Local convex envelope f~(x) = min { sum λ_z f(z) : sum λ_z z = x, λ ∈ Λ(x) }
// over the integer neighborhood N(x) = { z : |x_i - z_i| < 1 }.

#include "dmckit/funcs.hpp"
#include "dmckit/simplex.hpp"

#include <utility>
#include <vector>

namespace dmckit {

struct EnvelopeResult {
  ExtValue value = ExtValue::infinity();
  // Support of an optimal λ, sorted by point; empty when value is +inf.
  std::vector<std::pair<LatticePoint, Rational>> certificate;
};

// `lookup` maps a lattice point of N(x) to its function value.
template <class Lookup>
EnvelopeResult envelope_with(const RationalPoint& x, Lookup&& lookup) {
  EnvelopeResult res;
  std::vector<LatticePoint> nbhd = integer_neighborhood(x);
  if (x.is_integral()) {
    ExtValue v = lookup(nbhd.front());
    if (v.is_finite()) {
      res.value = v;
      res.certificate.emplace_back(nbhd.front(), Rational(1));
    }
    return res;
  }

  std::vector<std::size_t> frac;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_integer()) frac.push_back(i);

  std::vector<LatticePoint> cols;
  std::vector<Rational> cost;
  for (auto& z : nbhd) {
    ExtValue v = lookup(z);
    if (v.is_inf()) continue;
    cols.push_back(std::move(z));
    cost.push_back(v.value());
  }
  if (cols.empty()) return res;

  // Row 0: sum λ = 1. Row 1+r: sum λ_z (z_i - floor x_i) = frac(x_i) for fractional coordinate i.
  std::vector<std::vector<Rational>> a(1 + frac.size(), std::vector<Rational>(cols.size()));
  std::vector<Rational> b(1 + frac.size());
  b[0] = 1;
  for (std::size_t r = 0; r < frac.size(); ++r) {
    Coord base = x[frac[r]].floor_int();
    b[r + 1] = x[frac[r]] - Rational(base);
    for (std::size_t c = 0; c < cols.size(); ++c) a[r + 1][c] = Rational(cols[c][frac[r]] - base);
  }
  for (std::size_t c = 0; c < cols.size(); ++c) a[0][c] = 1;

  LpResult lp = solve_lp(a, b, cost);
  if (lp.status != LpResult::Status::optimal) return res;
  res.value = lp.value;
  for (std::size_t c = 0; c < cols.size(); ++c)
    if (lp.x[c].sign()) res.certificate.emplace_back(cols[c], lp.x[c]);
  return res;
}

inline EnvelopeResult envelope_value(const FnOracle& f, const RationalPoint& x) {
  if (x.size() != f.dim()) throw Error("envelope_value: dimension mismatch");
  return envelope_with(x, [&f](const LatticePoint& z) { return f(z); });
}

// f(x) + f(y) - 2 f~((x+y)/2), which may be -inf when the midpoint lies outside
// the local hull of dom f.
struct MidpointGap {
  enum class Kind { finite, plus_infinity, minus_infinity };
  Kind kind = Kind::finite;
  Rational value;

  bool nonnegative() const { return kind == Kind::plus_infinity || (kind == Kind::finite && value.sign() >= 0); }
  std::string str() const {
    switch (kind) {
      case Kind::plus_infinity: return "inf";
      case Kind::minus_infinity: return "-inf";
      default: return value.str();
    }
  }
};

inline MidpointGap weak_midpoint_gap(const FnOracle& f, const LatticePoint& x, const LatticePoint& y) {
  require_same_dim(x, y, "weak_midpoint_gap");
  MidpointGap g;
  ExtValue fx = f(x), fy = f(y);
  if (fx.is_inf() || fy.is_inf()) {
    g.kind = MidpointGap::Kind::plus_infinity;
    return g;
  }
  EnvelopeResult env = envelope_value(f, RationalPoint::midpoint(x, y));
  if (env.value.is_inf()) {
    g.kind = MidpointGap::Kind::minus_infinity;
    return g;
  }
  g.value = fx.value() + fy.value() - Rational(2) * env.value.value();
  return g;
}

}  // namespace dmckit
