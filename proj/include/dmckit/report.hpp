#pragma once

// JSON reports. Keys are sorted (nlohmann::json objects are ordered maps), all
// exact values are strings, and the text form is dump(2) plus a newline, so a
// parse/re-dump round trip reproduces a report byte for byte.

#include "dmckit/classify.hpp"
#include "dmckit/document.hpp"
#include "dmckit/envelope.hpp"

#include <string>

namespace dmckit {

inline Json witness_to_json(const Witness& w) {
  return Json{{"x", doc::to_json(w.x)}, {"y", doc::to_json(w.y)}, {"lhs", doc::to_json(w.lhs)}, {"rhs", doc::to_json(w.rhs)}};
}

inline Json verdict_to_json(const std::string& cls, const std::optional<Box>& box, const Verdict& v) {
  return Json{{"class", cls},
              {"box", box ? doc::to_json(*box) : Json(nullptr)},
              {"holds", v.holds},
              {"witness", v.witness ? witness_to_json(*v.witness) : Json(nullptr)},
              {"pairs_checked", v.pairs_checked}};
}

inline Json quad_report_to_json(const QuadReport& r) {
  return Json{{"class", "quad"},
              {"lnat", r.lnat},
              {"locally_dmc", r.locally_dmc},
              {"globally_dmc", r.globally_dmc},
              {"diag_dominant", r.diag_dominant},
              {"eigen_sufficient", to_string(r.eigen_sufficient)}};
}

inline Json envelope_to_json(const RationalPoint& x, const EnvelopeResult& e) {
  Json cert = Json::array();
  for (const auto& [z, lam] : e.certificate) cert.push_back(Json{{"point", doc::to_json(z)}, {"lambda", lam.str()}});
  return Json{{"at", doc::to_json(x)}, {"value", doc::to_json(e.value)}, {"certificate", cert}};
}

inline std::string report_text(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace dmckit
