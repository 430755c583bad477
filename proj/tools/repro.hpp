#pragma once

// Named reproduction reports. Each builds a JSON report from scratch; the CLI
// `repro` verb and the acceptance binary diff it against data/repro/<name>.json.
// Verdicts here omit pairs_checked so the pinned files only fix outcomes and
// witnesses.

#include "dmckit/dmckit.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <functional>

namespace dmckit::repro {

inline Json outcome(const std::string& cls, const Box& box, const Verdict& v) {
  Json j = verdict_to_json(cls, box, v);
  j.erase("pairs_checked");
  return j;
}

inline Matrix two_by_two(const Rational& c) { return Matrix{{Rational(1), c}, {c, Rational(1)}}; }

inline FnPtr abs_sum() {
  return make_callable(2, [](const LatticePoint& x) { return ExtValue(x[0] + x[1] < 0 ? -(x[0] + x[1]) : x[0] + x[1]); });
}

inline FnPtr max_sign_inverted() {
  return make_callable(3, [](const LatticePoint& x) { return ExtValue(std::max({x[0], x[1], -x[2]})); });
}

inline Matrix diag_dominant_counterexample() {
  return Matrix{{1, 1, 0}, {1, 1, 0}, {0, 0, 0}};
}

// Q = [[1,c],[c,1]] over the threshold grid.
inline Json quad_thresholds() {
  Json rows = Json::array();
  for (const char* c : {"-6/5", "-1", "-1/2", "0", "1/2", "4/5", "9/10", "1", "11/10"}) {
    Json r = quad_report_to_json(quad_classify(two_by_two(Rational::parse(c))));
    r["c"] = c;
    rows.push_back(r);
  }
  return Json{{"example", "quad-thresholds"}, {"results", rows}};
}

inline Json abs_sum_report(unsigned jobs) {
  Box box = Box::cube(2, -3, 3);
  BoxValues t(*abs_sum(), box);
  return Json{{"example", "abs-sum"},
              {"function", "|x1+x2|"},
              {"results", Json::array({outcome("dmc2", box, is_locally_dmc(t, jobs)), outcome("dmc-ge2", box, is_globally_dmc(t, jobs)),
                                       outcome("intconv", box, is_integrally_convex(t, jobs))})}};
}

inline Json sign_inversion_report(unsigned jobs) {
  Box box = Box::cube(3, -2, 2);
  BoxValues t(*max_sign_inverted(), box);
  return Json{{"example", "sign-inversion"},
              {"function", "max(x1,x2,-x3)"},
              {"results", Json::array({outcome("dmc2", box, is_locally_dmc(t, jobs))})}};
}

inline Json diag_dominant_report() {
  return Json{{"example", "diag-dominant"}, {"results", Json::array({quad_report_to_json(quad_classify(diag_dominant_counterexample()))})}};
}

inline Json decompose_report() {
  LatticePoint v{5, 3, -3, -5};
  Json stages = Json::array();
  for (Stage s : {Stage::steps, Stage::d0, Stage::d1, Stage::d2}) stages.push_back(decomposition_to_json(decompose(v, s)));
  return Json{{"example", "decompose"}, {"critical", is_critical(v)}, {"stages", stages}};
}

inline Json staircase_report() {
  Json rows = Json::array();
  for (auto [n, alpha] : {std::pair<std::size_t, Coord>{2, 2}, {2, 3}, {3, 2}}) {
    FnPtr f = staircase_fn(n, alpha);
    Box box = *f->domain_box();
    LatticePoint zero(n);
    ProximityReport p = proximity_verify(*f, box, zero, alpha);
    BruteMin m = brute_force_min(*f, box);
    rows.push_back(Json{{"n", n},
                        {"alpha", alpha},
                        {"alpha_local_at_zero", alpha_local_check(*f, zero, alpha).holds},
                        {"local_at_zero", local_min_check(*f, zero).holds},
                        {"minimizers", brute_to_json(m)["argmin"]},
                        {"bound", p.bound},
                        {"realized", p.realized},
                        {"holds", p.verdict.holds}});
  }
  return Json{{"example", "staircase-proximity"}, {"results", rows}};
}

inline Json descent_report() {
  FnPtr f = staircase_fn(2, 3);
  Json sd = descent_to_json(steepest_descent_2n(*f, LatticePoint{0, 0}));
  sd.erase("oracle_calls");
  FnPtr g = staircase_fn(2, 4);
  Json sc = scaling_to_json(scaling_minimize(g, LatticePoint{0, 0}, 8));
  sc.erase("oracle_calls");
  return Json{{"example", "staircase-descent"}, {"sd2", sd}, {"scaling", sc}};
}

inline Json envelope_report() {
  Json rows = Json::array();
  FnPtr f = abs_sum();
  for (const auto& at : {std::vector<Rational>{Rational(3, 2), Rational(-3, 2)}, std::vector<Rational>{Rational(1, 2), Rational(1, 2)}}) {
    RationalPoint x(at);
    rows.push_back(envelope_to_json(x, envelope_value(*f, x)));
  }
  return Json{{"example", "envelope"}, {"function", "|x1+x2|"}, {"results", rows}};
}

inline Json restricted_midpoint_report() {
  InsufficiencyDemo d = restricted_midpoint_insufficiency_demo();
  Box box = Box::cube(1, -5, 5);
  return Json{{"example", "restricted-midpoint"},
              {"function", "g(0)=2, g(z)=z^2"},
              {"results", Json::array({outcome("dmc-ge3", box, d.distant_pairs), outcome("discrete-convex", box, d.discrete_convexity)})}};
}

using Builder = std::function<Json(unsigned)>;

inline const std::map<std::string, Builder>& registry() {
  static const std::map<std::string, Builder> r{
      {"quad-thresholds", [](unsigned) { return quad_thresholds(); }},
      {"abs-sum", abs_sum_report},
      {"sign-inversion", sign_inversion_report},
      {"diag-dominant", [](unsigned) { return diag_dominant_report(); }},
      {"decompose", [](unsigned) { return decompose_report(); }},
      {"staircase-proximity", [](unsigned) { return staircase_report(); }},
      {"staircase-descent", [](unsigned) { return descent_report(); }},
      {"envelope", [](unsigned) { return envelope_report(); }},
      {"restricted-midpoint", [](unsigned) { return restricted_midpoint_report(); }},
  };
  return r;
}

inline std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace dmckit::repro
