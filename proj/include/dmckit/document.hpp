#pragma once

// JSON encoding of exact values, points and boxes, and the function-description
// document loader.
//
// Every document kind accepts an optional "box"; the loaded function is +inf
// outside it. For tables the box also fixes the grid (default: bounding box of
// the entries) and in-box points without an entry are +inf.

#include "dmckit/funcs.hpp"

#include <nlohmann/json.hpp>

#include <initializer_list>
#include <set>
#include <string>
#include <string_view>

namespace dmckit {

using Json = nlohmann::json;

class DocumentError : public Error {
 public:
  using Error::Error;
};

namespace doc {

inline Rational rational_from(const Json& j, std::string_view where) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned() && j.get<std::uint64_t>() > INT64_MAX) return Rational::parse(j.dump());
    return Rational(j.get<long long>());
  }
  if (j.is_string()) {
    try {
      return Rational::parse(j.get<std::string>());
    } catch (const Error& e) {
      throw DocumentError(std::string(where) + ": " + e.what());
    }
  }
  throw DocumentError(std::string(where) + ": expected a rational (string \"p/q\" or integer), got " + j.dump());
}

inline ExtValue ext_from(const Json& j, std::string_view where) {
  if (j.is_string() && (j.get<std::string>() == "inf" || j.get<std::string>() == "+inf")) return ExtValue::infinity();
  return ExtValue(rational_from(j, where));
}

inline Coord coord_from(const Json& j, std::string_view where) {
  if (!j.is_number_integer() || (j.is_number_unsigned() && j.get<std::uint64_t>() > INT64_MAX))
    throw DocumentError(std::string(where) + ": expected an int64 integer, got " + j.dump());
  return j.get<Coord>();
}

inline LatticePoint point_from(const Json& j, std::size_t dim, std::string_view where) {
  if (!j.is_array()) throw DocumentError(std::string(where) + ": expected an integer array");
  if (j.size() != dim)
    throw DocumentError(std::string(where) + ": expected " + std::to_string(dim) + " coordinates, got " +
                        std::to_string(j.size()));
  LatticePoint p(dim);
  for (std::size_t i = 0; i < dim; ++i) p[i] = coord_from(j[i], where);
  return p;
}

inline Box box_from(const Json& j, std::size_t dim, std::string_view where) {
  if (!j.is_object() || !j.contains("lo") || !j.contains("hi") || j.size() != 2)
    throw DocumentError(std::string(where) + ": box must be {\"lo\": [...], \"hi\": [...]}");
  try {
    return Box(point_from(j["lo"], dim, where), point_from(j["hi"], dim, where));
  } catch (const DocumentError&) {
    throw;
  } catch (const Error& e) {
    throw DocumentError(std::string(where) + ": " + e.what());
  }
}

inline Json to_json(const Rational& r) { return r.str(); }
inline Json to_json(const ExtValue& v) { return v.str(); }
inline Json to_json(const LatticePoint& p) {
  Json a = Json::array();
  for (Coord c : p) a.push_back(c);
  return a;
}
inline Json to_json(const RationalPoint& p) {
  Json a = Json::array();
  for (const auto& c : p) a.push_back(c.str());
  return a;
}
inline Json to_json(const Box& b) { return Json{{"lo", to_json(b.lo())}, {"hi", to_json(b.hi())}}; }

inline void require_keys(const Json& j, std::initializer_list<const char*> allowed, std::string_view kind) {
  std::set<std::string> ok(allowed.begin(), allowed.end());
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!ok.count(it.key()))
      throw DocumentError("\"" + std::string(kind) + "\" document: unexpected field \"" + it.key() + "\"");
}

inline const Json& field(const Json& j, const char* key, std::string_view kind) {
  if (!j.contains(key))
    throw DocumentError("\"" + std::string(kind) + "\" document: missing field \"" + key + "\"");
  return j[key];
}

inline FnPtr function_from(const Json& j, std::string_view path);

inline FnPtr child_from(const Json& j, std::size_t dim, std::string_view path) {
  FnPtr f = function_from(field(j, "fn", path), std::string(path) + ".fn");
  if (f->dim() != dim)
    throw DocumentError(std::string(path) + ": child dimension " + std::to_string(f->dim()) + " differs from " +
                        std::to_string(dim));
  return f;
}

inline FnPtr function_from(const Json& j, std::string_view path) {
  if (!j.is_object()) throw DocumentError(std::string(path) + ": function document must be an object");
  const Json& kj = field(j, "kind", path);
  if (!kj.is_string()) throw DocumentError(std::string(path) + ": \"kind\" must be a string");
  std::string kind = kj.get<std::string>();
  const Json& dj = field(j, "dim", kind);
  if (!dj.is_number_unsigned() || dj.get<long long>() < 1)
    throw DocumentError(std::string(path) + ": \"dim\" must be a positive integer");
  auto n = dj.get<std::size_t>();
  std::optional<Box> box;
  if (j.contains("box")) box = box_from(j["box"], n, std::string(path) + ".box");
  std::string where = std::string(path) + " (" + kind + ")";

  auto finish = [&](FnPtr f) { return box ? restrict_to(std::move(f), *box) : f; };

  try {
    if (kind == "quadratic") {
      require_keys(j, {"kind", "dim", "box", "Q"}, kind);
      const Json& qj = field(j, "Q", kind);
      if (!qj.is_array() || qj.size() != n) throw DocumentError(where + ": Q must have " + std::to_string(n) + " rows");
      Matrix q(n);
      for (std::size_t r = 0; r < n; ++r) {
        if (!qj[r].is_array() || qj[r].size() != n)
          throw DocumentError(where + ": Q row " + std::to_string(r + 1) + " must have " + std::to_string(n) + " entries");
        for (std::size_t c = 0; c < n; ++c) q[r].push_back(rational_from(qj[r][c], where + ".Q"));
      }
      return make_quadratic(std::move(q), box);
    }
    if (kind == "separable") {
      require_keys(j, {"kind", "dim", "box", "phi"}, kind);
      const Json& pj = field(j, "phi", kind);
      if (!pj.is_array() || pj.size() != n) throw DocumentError(where + ": phi must list one table per coordinate");
      std::vector<UnivariateTable> phi;
      for (const auto& t : pj) {
        if (!t.is_object()) throw DocumentError(where + ": phi entries must be {\"lo\", \"values\"}");
        require_keys(t, {"lo", "values"}, "phi");
        UnivariateTable u;
        u.lo = coord_from(field(t, "lo", "phi"), where + ".phi.lo");
        const Json& vs = field(t, "values", "phi");
        if (!vs.is_array() || vs.empty()) throw DocumentError(where + ": phi values must be a nonempty array");
        for (const auto& v : vs) u.values.push_back(ext_from(v, where + ".phi.values"));
        phi.push_back(std::move(u));
      }
      return finish(std::make_shared<SeparableConvexFn>(std::move(phi)));
    }
    if (kind == "table") {
      require_keys(j, {"kind", "dim", "box", "entries"}, kind);
      const Json& ej = field(j, "entries", kind);
      if (!ej.is_array()) throw DocumentError(where + ": entries must be an array");
      std::vector<std::pair<LatticePoint, ExtValue>> entries;
      for (const auto& e : ej) {
        if (!e.is_object()) throw DocumentError(where + ": table entries must be {\"x\", \"v\"}");
        require_keys(e, {"x", "v"}, "entry");
        entries.emplace_back(point_from(field(e, "x", "entry"), n, where + ".x"), ext_from(field(e, "v", "entry"), where + ".v"));
      }
      if (!box) {
        if (entries.empty()) throw DocumentError(where + ": a table without entries needs a box");
        LatticePoint lo = entries.front().first, hi = lo;
        for (const auto& [x, v] : entries)
          for (std::size_t i = 0; i < n; ++i) {
            lo[i] = std::min(lo[i], x[i]);
            hi[i] = std::max(hi[i], x[i]);
          }
        box = Box(lo, hi);
      }
      std::vector<ExtValue> vals(box->cardinality(), ExtValue::infinity());
      std::vector<bool> seen(vals.size(), false);
      for (const auto& [x, v] : entries) {
        if (!box->contains(x)) throw DocumentError(where + ": entry " + x.str() + " lies outside the box");
        std::size_t idx = box->index_of(x);
        if (seen[idx]) throw DocumentError(where + ": duplicate entry at " + x.str());
        seen[idx] = true;
        vals[idx] = v;
      }
      return std::make_shared<TableFn>(*box, std::move(vals));
    }
    if (kind == "indicator") {
      require_keys(j, {"kind", "dim", "box", "points"}, kind);
      const Json& pj = field(j, "points", kind);
      if (!pj.is_array()) throw DocumentError(where + ": points must be an array");
      std::vector<LatticePoint> pts;
      for (const auto& p : pj) pts.push_back(point_from(p, n, where + ".points"));
      return finish(make_indicator(n, std::move(pts)));
    }
    if (kind == "linear_on_set") {
      require_keys(j, {"kind", "dim", "box", "c", "points"}, kind);
      const Json& cj = field(j, "c", kind);
      if (!cj.is_array() || cj.size() != n) throw DocumentError(where + ": c must have " + std::to_string(n) + " entries");
      std::vector<Rational> c;
      for (const auto& v : cj) c.push_back(rational_from(v, where + ".c"));
      if (j.contains("points")) {
        if (!j["points"].is_array()) throw DocumentError(where + ": points must be an array");
        std::vector<LatticePoint> pts;
        for (const auto& p : j["points"]) pts.push_back(point_from(p, n, where + ".points"));
        return finish(std::make_shared<LinearOnSetFn>(std::move(c), pts));
      }
      if (!box) throw DocumentError(where + ": linear_on_set needs \"points\" or \"box\"");
      return std::make_shared<LinearOnSetFn>(std::move(c), *box, [](const LatticePoint&) { return true; });
    }
    if (kind == "sum") {
      require_keys(j, {"kind", "dim", "box", "terms"}, kind);
      const Json& tj = field(j, "terms", kind);
      if (!tj.is_array() || tj.empty()) throw DocumentError(where + ": terms must be a nonempty array");
      FnPtr acc;
      for (std::size_t t = 0; t < tj.size(); ++t) {
        const Json& term = tj[t];
        if (!term.is_object()) throw DocumentError(where + ": terms must be {\"weight\", \"fn\"}");
        require_keys(term, {"weight", "fn"}, "term");
        Rational w = rational_from(field(term, "weight", "term"), where + ".weight");
        if (w.sign() < 0) throw DocumentError(where + ": weights must be nonnegative");
        FnPtr f = child_from(term, n, std::string(path) + ".terms[" + std::to_string(t) + "]");
        acc = acc ? weighted_sum(1, acc, w, f) : weighted_sum(w, f, 0, f);
      }
      return finish(acc);
    }
    if (kind == "translate") {
      require_keys(j, {"kind", "dim", "box", "z", "fn"}, kind);
      LatticePoint z = point_from(field(j, "z", kind), n, where + ".z");
      return finish(translate(child_from(j, n, path), z));
    }
    if (kind == "permute") {
      require_keys(j, {"kind", "dim", "box", "sigma", "fn"}, kind);
      const Json& sj = field(j, "sigma", kind);
      if (!sj.is_array() || sj.size() != n) throw DocumentError(where + ": sigma must have " + std::to_string(n) + " entries");
      std::vector<std::size_t> sigma;
      for (const auto& s : sj) {
        Coord v = coord_from(s, where + ".sigma");
        if (v < 1 || v > static_cast<Coord>(n)) throw DocumentError(where + ": sigma entries are 1-based coordinate indices");
        sigma.push_back(static_cast<std::size_t>(v - 1));
      }
      return finish(permute(child_from(j, n, path), std::move(sigma)));
    }
    if (kind == "negate") {
      require_keys(j, {"kind", "dim", "box", "fn"}, kind);
      return finish(negate_all(child_from(j, n, path)));
    }
    if (kind == "scale") {
      require_keys(j, {"kind", "dim", "box", "alpha", "fn"}, kind);
      Coord a = coord_from(field(j, "alpha", kind), where + ".alpha");
      if (a < 1) throw DocumentError(where + ": alpha must be a positive integer");
      return finish(scale_fn(child_from(j, n, path), a));
    }
  } catch (const DocumentError&) {
    throw;
  } catch (const Json::exception& e) {
    throw DocumentError(where + ": " + e.what());
  } catch (const Error& e) {
    throw DocumentError(where + ": " + e.what());
  }
  throw DocumentError(std::string(path) + ": unknown kind \"" + kind + "\"");
}

}  // namespace doc

inline Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw DocumentError(std::string("malformed JSON: ") + e.what());
  }
}

inline FnPtr load_function(const Json& document) { return doc::function_from(document, "$"); }
inline FnPtr load_function(std::string_view text) { return load_function(parse_json(text)); }

}  // namespace dmckit
