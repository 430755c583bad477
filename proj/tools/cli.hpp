#pragma once

// Command-line front end. run() is kept separate from main() so tests can
// drive it in-process.
//
// Exit codes: 0 holds / success, 1 property fails or a repro diff, 2 usage or
// document error.

#include "repro.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <string>
#include <vector>

#ifndef DMCKIT_REPRO_DIR
#define DMCKIT_REPRO_DIR "data/repro"
#endif

namespace dmckit::cli {

class UsageError : public Error {
 public:
  using Error::Error;
};

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t p = s.find(sep, start);
    out.push_back(s.substr(start, p == std::string::npos ? std::string::npos : p - start));
    if (p == std::string::npos) return out;
    start = p + 1;
  }
}

inline Coord parse_coord(const std::string& s, const char* flag) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw UsageError(std::string(flag) + ": expected an integer, got '" + s + "'");
  return v;
}

inline LatticePoint parse_point(const std::string& s, const char* flag) {
  std::vector<Coord> c;
  for (const auto& t : split(s, ',')) c.push_back(parse_coord(t, flag));
  return LatticePoint(std::move(c));
}

inline RationalPoint parse_rational_point(const std::string& s, const char* flag) {
  std::vector<Rational> c;
  for (const auto& t : split(s, ',')) {
    try {
      c.push_back(Rational::parse(t));
    } catch (const Error& e) {
      throw UsageError(std::string(flag) + ": " + e.what());
    }
  }
  return RationalPoint(std::move(c));
}

// "lo1..hi1,lo2..hi2,..."
inline Box parse_box(const std::string& s) {
  LatticePoint lo, hi;
  std::vector<Coord> l, h;
  for (const auto& t : split(s, ',')) {
    auto p = t.find("..");
    if (p == std::string::npos) throw UsageError("--box: expected lo..hi per coordinate, got '" + t + "'");
    l.push_back(parse_coord(t.substr(0, p), "--box"));
    h.push_back(parse_coord(t.substr(p + 2), "--box"));
  }
  try {
    return Box(LatticePoint(l), LatticePoint(h));
  } catch (const Error& e) {
    throw UsageError(std::string("--box: ") + e.what());
  }
}

inline std::string read_document(const std::string& path) {
  auto text = repro::read_file(path);
  if (!text) throw UsageError("cannot read '" + path + "'");
  return *text;
}

inline FnPtr load_fn(const std::string& path) {
  try {
    return load_function(std::string_view(read_document(path)));
  } catch (const DocumentError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

inline Box box_for(const FnOracle& f, const std::string& box_flag) {
  Box b = box_flag.empty() ? [&] {
    auto d = f.domain_box();
    if (!d) throw UsageError("no --box given and the function declares no box");
    return *d;
  }()
                           : parse_box(box_flag);
  if (b.dim() != f.dim()) throw UsageError("--box dimension does not match the function");
  return b;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Discrete midpoint convexity toolkit"};
  app.require_subcommand(1);
  unsigned jobs = default_jobs();
  app.add_option("--jobs", jobs, "worker threads (default DMC_KIT_JOBS or 1)")->check(CLI::PositiveNumber);

  std::string cls, fn_path, box_flag, algo, start_flag, vector_flag, stage_flag, at_flag, set_path, example, data_dir = DMCKIT_REPRO_DIR;
  std::optional<Coord> kinf, scale;
  bool list = false;

  auto* classify = app.add_subcommand("classify", "run a class checker");
  classify->add_option("--class", cls)->required()->check(CLI::IsMember({"submodular", "dmc2", "dmc-ge2", "lnat", "intconv", "quad"}));
  classify->add_option("--fn", fn_path)->required();
  classify->add_option("--box", box_flag);

  auto* minimize = app.add_subcommand("minimize", "minimize a function");
  minimize->add_option("--algo", algo)->required()->check(CLI::IsMember({"sd2", "scaling", "brute"}));
  minimize->add_option("--fn", fn_path)->required();
  minimize->add_option("--start", start_flag);
  minimize->add_option("--kinf", kinf)->check(CLI::PositiveNumber);
  minimize->add_option("--box", box_flag);

  auto* decompose_cmd = app.add_subcommand("decompose", "decompose an integer vector");
  decompose_cmd->add_option("--vector", vector_flag)->required();
  decompose_cmd->add_option("--stage", stage_flag)->required()->check(CLI::IsMember({"steps", "d0", "d1", "d2"}));

  auto* envelope = app.add_subcommand("envelope", "evaluate the local convex envelope");
  envelope->add_option("--fn", fn_path)->required();
  envelope->add_option("--at", at_flag)->required();

  auto* set_check = app.add_subcommand("set-check", "check discrete midpoint convexity of a set");
  set_check->add_option("--set", set_path)->required();
  set_check->add_option("--scale", scale)->check(CLI::PositiveNumber);

  auto* repro_cmd = app.add_subcommand("repro", "rebuild a bundled report and diff it against the pinned copy");
  repro_cmd->add_option("--example", example);
  repro_cmd->add_flag("--list", list);
  repro_cmd->add_option("--data-dir", data_dir);

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*classify) {
      FnPtr f = load_fn(fn_path);
      if (cls == "quad") {
        const auto* q = dynamic_cast<const QuadraticFn*>(f.get());
        if (!q) throw UsageError("--class quad needs a quadratic document");
        out << report_text(quad_report_to_json(quad_classify(q->matrix())));
        return 0;
      }
      Box box = box_for(*f, box_flag);
      BoxValues t(*f, box);
      Verdict v = cls == "submodular" ? is_submodular(t, jobs)
                  : cls == "dmc2"     ? is_locally_dmc(t, jobs)
                  : cls == "dmc-ge2"  ? is_globally_dmc(t, jobs)
                  : cls == "lnat"     ? is_lnat(t, jobs)
                                      : is_integrally_convex(t, jobs);
      out << report_text(verdict_to_json(cls, box, v));
      return v.holds ? 0 : 1;
    }
    if (*minimize) {
      FnPtr f = load_fn(fn_path);
      if (algo == "brute") {
        Box box = box_for(*f, box_flag);
        out << report_text(brute_to_json(brute_force_min(*f, box)));
        return 0;
      }
      if (start_flag.empty()) throw UsageError("--start is required for " + algo);
      LatticePoint x0 = parse_point(start_flag, "--start");
      if (x0.size() != f->dim()) throw UsageError("--start dimension does not match the function");
      if ((*f)(x0).is_inf()) throw UsageError("--start " + x0.str() + " is not in dom f");
      if (algo == "sd2") {
        std::optional<Box> clip;
        if (!box_flag.empty()) clip = box_for(*f, box_flag);
        out << report_text(descent_to_json(steepest_descent_2n(*f, x0, std::nullopt, clip)));
        return 0;
      }
      if (!box_flag.empty()) f = restrict_to(f, box_for(*f, box_flag));
      if (!kinf) kinf = derive_kinf(*f);
      if (!kinf) {
        auto b = f->domain_box();
        if (!b) throw UsageError("--kinf is required: the function has no bounded domain");
        Coord d = 1;
        for (std::size_t i = 0; i < b->dim(); ++i) d = std::max(d, b->width(i) - 1);
        kinf = d;
      }
      out << report_text(scaling_to_json(scaling_minimize(f, x0, kinf)));
      return 0;
    }
    if (*decompose_cmd) {
      LatticePoint v = parse_point(vector_flag, "--vector");
      Stage s = stage_flag == "steps" ? Stage::steps : stage_flag == "d0" ? Stage::d0 : stage_flag == "d1" ? Stage::d1 : Stage::d2;
      out << report_text(decomposition_to_json(decompose(v, s)));
      return 0;
    }
    if (*envelope) {
      FnPtr f = load_fn(fn_path);
      RationalPoint x = parse_rational_point(at_flag, "--at");
      if (x.size() != f->dim()) throw UsageError("--at dimension does not match the function");
      out << report_text(envelope_to_json(x, envelope_value(*f, x)));
      return 0;
    }
    if (*set_check) {
      PointSet s;
      try {
        s = load_point_set(std::string_view(read_document(set_path)));
      } catch (const DocumentError& e) {
        throw UsageError(set_path + ": " + e.what());
      }
      if (scale) s = scale_set(s, *scale);
      Verdict v = is_dmc_set(s, jobs);
      Json j{{"class", "dmc-set"},
             {"scale", scale ? Json(*scale) : Json(nullptr)},
             {"size", s.size()},
             {"holds", v.holds},
             {"witness", v.witness ? witness_to_json(*v.witness) : Json(nullptr)},
             {"pairs_checked", v.pairs_checked}};
      out << report_text(j);
      return v.holds ? 0 : 1;
    }
    // repro
    const auto& reg = repro::registry();
    if (list) {
      for (const auto& [name, _] : reg) out << name << "\n";
      return 0;
    }
    if (example.empty()) throw UsageError("repro needs --example NAME or --list");
    auto it = reg.find(example);
    if (it == reg.end()) throw UsageError("unknown example '" + example + "' (see repro --list)");
    std::string got = report_text(it->second(jobs));
    out << got;
    std::string path = data_dir + "/" + example + ".json";
    auto want = repro::read_file(path);
    if (!want) throw UsageError("missing pinned report " + path);
    if (*want == got) return 0;
    err << "repro " << example << ": output differs from " << path << "\n--- pinned\n" << *want << "+++ produced\n" << got;
    return 1;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const DocumentError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const InconsistentPaths& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace dmckit::cli
