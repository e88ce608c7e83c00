// tropabel: command-line front end. Every command prints one JSON document on
// stdout. Exit status 0 on success or a true verdict, 1 on a false verdict, 2
// on any error (with {"error": code, "detail": ...} on stdout).
#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tropabel/json_io.hpp"
#include "tropabel/svg.hpp"

namespace fs = std::filesystem;
using namespace tropabel;
using tropabel::json::Json;

namespace {

// Inline JSON when the argument starts with '{' or '[', a file path otherwise.
Json load(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) return json::parse(arg);
  std::ifstream in(arg);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read '" + arg + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return json::parse(ss.str());
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write '" + path + "'");
  out << text;
}

int emit(const Json& body, const std::string& out_path = "", int code = 0) {
  const std::string text = json::dump(json::document(body));
  if (!out_path.empty()) write_file(out_path, text);
  std::cout << text;
  return code;
}

int emit_error(const std::string& code, const std::string& detail) {
  std::cout << json::dump(json::document(Json{{"error", code}, {"detail", detail}}));
  return 2;
}

int default_jobs() {
  if (const char* env = std::getenv("TROPABEL_JOBS")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidArgument, "TROPABEL_JOBS is not an integer");
    }
  }
  return 0;
}

// Relations that make S special: symmetric, or equal diagonal entries.
void refuse_special_torus(const TropicalTorus& t) {
  const RMat2& S = t.S();
  if (S(0, 1) == S(1, 0) || S(0, 0) == S(1, 1)) {
    throw Error(ErrorCode::InvalidArgument, "--strict: S satisfies a special relation (symmetric or equal diagonal)");
  }
}

struct Options {
  std::string Q, Z, C, B, S, torus, curve, family, result, out, svg_dir;
  std::int64_t tau = 0;
  std::int64_t delta = 1;
  std::int64_t k = 1;
  int genus = 2;
  std::uint64_t seed = 1;
  int slope_bound = 0;
  int winding_bound = 0;
  int jobs = -1;
  bool strict = false;
};

SearchBounds bounds_from(const Options& o, const IMat2& B) {
  SearchBounds b = default_bounds(B);
  if (o.slope_bound > 0) b.slope_bound = o.slope_bound;
  if (o.winding_bound > 0) b.winding_bound = o.winding_bound;
  return b;
}

int jobs_from(const Options& o) { return o.jobs >= 0 ? o.jobs : default_jobs(); }

MumfordFamily family_from(const Options& o) {
  if (!o.family.empty()) return json::read_family(load(o.family));
  if (o.Z.empty() || o.S.empty() || o.Q.empty()) {
    throw Error(ErrorCode::InvalidArgument, "give --family or all of --Z, --S, --Q");
  }
  const SkewForm q = json::read_skew_form(load(o.Q));
  return MumfordFamily{json::read_cmat2(load(o.Z)), json::read_rmat2(load(o.S)), q.tau, q};
}

int cmd_multicover(const Options& o) {
  const TropicalTorus t = json::read_torus(load(o.torus));
  if (o.strict) refuse_special_torus(t);
  const IMat2 B = json::read_imat2(load(o.B));
  std::optional<SearchBounds> bounds;
  if (o.slope_bound > 0 || o.winding_bound > 0) bounds = bounds_from(o, B);
  EnumerationsByDivisor kept;
  const MultiCoverReport rep = verify_multiple_cover(t, B, o.genus, o.seed, bounds, jobs_from(o), &kept);
  if (!o.svg_dir.empty()) {
    fs::create_directories(o.svg_dir);
    for (const auto& [k, res] : kept) {
      for (std::size_t i = 0; i < res.curves.size(); ++i) {
        const auto& c = res.curves[i];
        const std::string name = "div" + std::to_string(k) + "_curve" + std::to_string(i) + "_gcd" +
                                 std::to_string(c.multiplicity.gcd) + ".svg";
        write_file((fs::path(o.svg_dir) / name).string(),
                   render_svg(c.curve, "B/" + std::to_string(k) + " curve " + std::to_string(i) + ", multiplicity " +
                                           std::to_string(c.multiplicity.total)));
      }
    }
  }
  return emit(json::encode(rep), o.out, rep.verdict ? 0 : 1);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact toolkit for tropical abelian surfaces and the multiple cover formula"};
  app.require_subcommand(1);
  Options o;
  std::function<int()> action;

  const auto json_opt = [](CLI::App* sub, const char* name, std::string& target, const char* what) {
    return sub->add_option(name, target, std::string(what) + " (inline JSON or file)");
  };

  auto* check_pol = app.add_subcommand("check-polarization", "Riemann relations for (I Z) and Q");
  json_opt(check_pol, "--Z", o.Z, "period matrix Z")->required();
  json_opt(check_pol, "--Q", o.Q, "skew form {C, tau}")->required();
  check_pol->callback([&] {
    action = [&] {
      const PeriodData p = json::read_period_data(Json{{"Z", load(o.Z)}});
      const SkewForm q = json::read_skew_form(load(o.Q));
      const RiemannCheck r = riemann_reduced(p.Z, q);
      const bool ok = check_riemann(p, q);
      return emit(json::encode(r), o.out, ok ? 0 : 1);
    };
  });

  auto* dual = app.add_subcommand("poincare-dual", "Pf(Q) Q^-1 in block form");
  json_opt(dual, "--Q", o.Q, "skew form {C, tau}")->required();
  dual->callback([&] { action = [&] { return emit(json::encode(poincare_dual(json::read_skew_form(load(o.Q)))), o.out); }; });

  auto* type = app.add_subcommand("type", "Polarization type (d1, d2)");
  json_opt(type, "--Q", o.Q, "skew form {C, tau}")->required();
  type->callback([&] { action = [&] { return emit(json::encode(polarization_type(json::read_skew_form(load(o.Q)))), o.out); }; });

  auto* check_trop = app.add_subcommand("check-tropical", "Is C a tropical polarization of the torus");
  json_opt(check_trop, "--torus", o.torus, "torus {S}")->required();
  json_opt(check_trop, "--C", o.C, "integer matrix C")->required();
  check_trop->callback([&] {
    action = [&] {
      const bool ok = check_tropical_polarization(json::read_torus(load(o.torus)), json::read_imat2(load(o.C)));
      return emit(Json{{"ok", ok}}, o.out, ok ? 0 : 1);
    };
  });

  const auto add_build = [&](CLI::App* sub) {
    json_opt(sub, "--torus", o.torus, "integral torus {S}")->required();
    json_opt(sub, "--degree,--B", o.B, "degree B")->required();
    sub->add_option("--tau", o.tau, "tau")->required();
    sub->callback([&] {
      action = [&] {
        return emit(json::encode(make_family(json::read_imat2(load(o.B)), o.tau, json::read_torus(load(o.torus)))), o.out);
      };
    });
  };
  const auto add_check = [&](CLI::App* sub) {
    json_opt(sub, "--family", o.family, "family {Z, S, tau, Q}");
    json_opt(sub, "--Z", o.Z, "period matrix Z");
    json_opt(sub, "--S", o.S, "tropical matrix S");
    json_opt(sub, "--Q", o.Q, "skew form {C, tau}");
    sub->callback([&] {
      action = [&] {
        const MumfordFamily f = family_from(o);
        const FamilyCheck c = check_family_polarization(f.Z, f.S, f.Q);
        return emit(json::encode(c), o.out, c.ok() ? 0 : 1);
      };
    });
  };
  add_build(app.add_subcommand("mumford-build", "Mumford family for (B, tau) on an integral torus"));
  add_check(app.add_subcommand("mumford-check", "Polarization criterion for a Mumford family"));
  auto* mumford = app.add_subcommand("mumford", "Mumford families");
  mumford->require_subcommand(1);
  add_build(mumford->add_subcommand("build", "Mumford family for (B, tau) on an integral torus"));
  add_check(mumford->add_subcommand("check", "Polarization criterion for a Mumford family"));

  auto* sig = app.add_subcommand("sigma", "Phase exponent for (Z, B, delta)");
  json_opt(sig, "--Z", o.Z, "period matrix Z");
  json_opt(sig, "--family", o.family, "family {Z, S, tau, Q}; supplies Z");
  json_opt(sig, "--B", o.B, "degree B")->required();
  sig->add_option("--delta", o.delta, "gcd of the curve")->required();
  sig->callback([&] {
    action = [&] {
      if (o.Z.empty() == o.family.empty()) throw Error(ErrorCode::InvalidArgument, "give exactly one of --Z, --family");
      const CMat2 Z = o.family.empty() ? json::read_cmat2(load(o.Z)) : json::read_family(load(o.family)).Z;
      return emit(json::encode(sigma(Z, json::read_imat2(load(o.B)), o.delta)), o.out);
    };
  });

  auto* val = app.add_subcommand("validate-curve", "Structural checks and degree of a curve");
  json_opt(val, "--curve", o.curve, "curve")->required();
  val->callback([&] {
    action = [&] {
      const ParamCurve pc = json::read_curve(load(o.curve));
      const auto diags = validate(pc);
      Json body = json::encode(diags);
      if (diags.empty()) {
        body["degree"] = json::encode(degree(pc));
        body["genus"] = pc.genus();
        body["gcd"] = curve_gcd(pc);
      }
      return emit(body, o.out, diags.empty() ? 0 : 1);
    };
  });

  auto* mult = app.add_subcommand("multiplicity", "Multiplicity of a trivalent curve");
  json_opt(mult, "--curve", o.curve, "curve")->required();
  mult->callback([&] { action = [&] { return emit(json::encode(mikhalkin_multiplicity(json::read_curve(load(o.curve)))), o.out); }; });

  const auto add_search = [&](CLI::App* sub) {
    json_opt(sub, "--torus", o.torus, "torus {S}")->required();
    json_opt(sub, "--degree,--B", o.B, "degree B")->required();
    sub->add_option("--genus,-g", o.genus, "genus")->capture_default_str();
    sub->add_option("--seed", o.seed, "configuration seed")->capture_default_str();
    sub->add_option("--slope-bound", o.slope_bound, "max |slope entry| (default max|B|+1)");
    sub->add_option("--winding-bound", o.winding_bound, "max |winding entry| (default max(2, max|B|))");
    sub->add_option("--jobs,-j", o.jobs, "worker threads (default TROPABEL_JOBS, else all cores)");
    sub->add_option("--out,-o", o.out, "also write the JSON to this file");
    sub->add_flag("--strict", o.strict, "refuse tori with special relations among the entries of S");
  };

  auto* enu = app.add_subcommand("enumerate", "Tropical curves of degree B through a seeded configuration");
  add_search(enu);
  enu->callback([&] {
    action = [&] {
      const TropicalTorus t = json::read_torus(load(o.torus));
      if (o.strict) refuse_special_torus(t);
      const IMat2 B = json::read_imat2(load(o.B));
      const PointConfig cfg = sample_config(t, o.genus, o.seed);
      return emit(json::encode(enumerate(t, B, o.genus, cfg, bounds_from(o, B), jobs_from(o))), o.out);
    };
  });

  auto* inv = app.add_subcommand("invariant", "Tropical invariant of one gcd stratum of an enumeration");
  json_opt(inv, "--result", o.result, "enumeration result")->required();
  inv->add_option("--k", o.k, "gcd stratum")->capture_default_str();
  inv->callback([&] {
    action = [&] {
      const EnumerationResult res = json::read_enumeration(load(o.result));
      return emit(Json{{"k", o.k}, {"value", tropical_invariant(res, o.k)}}, o.out);
    };
  });

  auto* mc = app.add_subcommand("multicover", "Verify the multiple cover formula");
  add_search(mc);
  mc->add_option("--svg", o.svg_dir, "directory for drawings of every counted curve");
  mc->callback([&] { action = [&] { return cmd_multicover(o); }; });

  auto* svg = app.add_subcommand("svg", "Draw a curve in the fundamental parallelogram");
  json_opt(svg, "--curve", o.curve, "curve")->required();
  svg->add_option("--out,-o", o.out, "write the SVG here instead of stdout");
  svg->callback([&] {
    action = [&] {
      const std::string text = render_svg(json::read_curve(load(o.curve)));
      if (o.out.empty()) {
        std::cout << text;
      } else {
        write_file(o.out, text);
        std::cout << json::dump(json::document(Json{{"written", o.out}}));
      }
      return 0;
    };
  });

  for (auto* sub : {check_pol, dual, type, check_trop, sig, val, mult, inv}) sub->add_option("--out,-o", o.out, "also write the JSON to this file");
  for (auto* sub : {app.get_subcommand("mumford-build"), app.get_subcommand("mumford-check"), mumford->get_subcommand("build"),
                    mumford->get_subcommand("check")}) {
    sub->add_option("--out,-o", o.out, "also write the JSON to this file");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return emit_error("ParseError", e.what());
  }
  try {
    return action ? action() : emit_error("InvalidArgument", "no command");
  } catch (const Error& e) {
    return emit_error(std::string(to_string(e.code())), e.detail());
  } catch (const std::exception& e) {
    return emit_error("Internal", e.what());
  }
}
