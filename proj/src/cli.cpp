#include "conway/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include "conway/json_io.hpp"
#include "conway/svg.hpp"

namespace conway::cli {

namespace {

using nlohmann::json;

Triangle sides_to_triangle(const std::vector<std::string>& sides) {
  return Triangle::from_sides(Rational::parse(sides[0]), Rational::parse(sides[1]),
                              Rational::parse(sides[2]));
}

Triplet parse_triplet(const std::vector<std::string>& values) {
  return Triplet{Rational::parse(values[0]), Rational::parse(values[1]), Rational::parse(values[2])};
}

void emit(std::ostream& out, const json& j) {
  out << j.dump(2) << "\n";
}

std::string bary_text(const BaryPoint& p) {
  BaryPoint n = p.normalized();
  return "(" + n.x.str() + ", " + n.y.str() + ", " + n.z.str() + ")";
}

json membership_json(const Membership& m) {
  switch (m.tag) {
    case Membership::Tag::InFamilyT:
      return json{{"tag", "family"}, {"alpha", m.alpha.str()}};
    case Membership::Tag::IsoscelesExtra:
      return json{{"tag", "isosceles_extra"}, {"apex", apex_name(m.apex)}};
    case Membership::Tag::NotSolution:
      return json{{"tag", "not_solution"}};
  }
  return {};
}

int cmd_info(const Triangle& t, bool text, std::ostream& out) {
  if (text) {
    out << "sides: " << t.a() << ", " << t.b() << ", " << t.c() << "\n"
        << "shape: " << shape_name(classify(t)) << "\n"
        << "semiperimeter p: " << t.p() << "\n"
        << "16*area^2: " << t.area_sq16() << "\n"
        << "r^2: " << t.r_sq() << "\n"
        << "incenter: " << bary_text(incenter(t)) << "\n"
        << "Nagel point: " << bary_text(nagel(t)) << "\n";
  } else {
    emit(out, triangle_json(t));
  }
  return 0;
}

int cmd_construct(const Triangle& t, const Triplet& triplet, bool text, std::ostream& out) {
  Configuration cfg = six_points(t, triplet);
  FamilyVerdict verdict = verify_family(t, triplet);
  HexagonMetrics hm = hexagon_metrics(cfg);

  if (text) {
    out << "triplet: (" << triplet.alpha << ", " << triplet.beta << ", " << triplet.gamma << ")\n";
    for (int i = 0; i < 6; ++i) {
      out << point_label(i) << ": bary " << bary_text(cfg.bary[i]) << "  cart ("
          << cfg.cart[i].x.to_double() << ", " << cfg.cart[i].y.to_double() << ")\n";
    }
    out << "cocyclic about incenter: " << (verdict.cocyclic ? "yes" : "no") << "\n";
    if (verdict.radius_sq) out << "radius^2: " << *verdict.radius_sq << "\n";
    return 0;
  }

  json j = configuration_json(cfg);
  j["membership"] = membership_json(verdict.membership);
  j["cocyclic"] = verdict.cocyclic;
  if (verdict.cocyclic)
    j["circle"] = json{{"center", bary_json(incenter(t))},
                       {"radius_sq", verdict.radius_sq->str()},
                       {"radius_approx", std::sqrt(verdict.radius_sq->to_double())}};
  json pairs = json::array();
  for (const auto& pair : hm.diag_pairs_sq)
    pairs.push_back(json::array({pair.first.str(), pair.second.str()}));
  j["hexagon"] = json{{"diag_main_sq", json::array({hm.diag_main_sq[0].str(), hm.diag_main_sq[1].str(),
                                                    hm.diag_main_sq[2].str()})},
                      {"diag_pairs_sq", pairs},
                      {"opposite_sides_parallel", hm.opposite_sides_parallel}};
  emit(out, j);
  return 0;
}

int cmd_family(const Triangle& t, const Rational& alpha, bool text, std::ostream& out) {
  Triplet member = family_triplet(t, alpha);
  Rational radius_sq = family_radius_sq(t, alpha);
  FamilyVerdict verdict = verify_family(t, member);

  if (text) {
    out << "alpha: " << alpha << "\n"
        << "triplet: (" << member.alpha << ", " << member.beta << ", " << member.gamma << ")\n"
        << "radius^2: " << radius_sq << "\n"
        << "verified: " << (verdict.ok && verdict.cocyclic ? "yes" : "no") << "\n"
        << "inscribed alpha (circle = incircle): " << inscribed_alpha(t) << "\n";
  } else {
    emit(out, json{{"theorem", "family"},
                   {"triangle", json::array({t.a().str(), t.b().str(), t.c().str()})},
                   {"alpha", alpha.str()},
                   {"triplet", triplet_json(member)},
                   {"radius_sq", radius_sq.str()},
                   {"radius_approx", std::sqrt(radius_sq.to_double())},
                   {"verified", verdict.ok && verdict.cocyclic},
                   {"inscribed_alpha", inscribed_alpha(t).str()}});
  }
  return 0;
}

int cmd_congruence(const Triangle& t, bool text, std::ostream& out) {
  CongruenceResult res = congruence(t);
  if (text) {
    if (res.found)
      out << "congruence: (" << res.found->alpha << ", " << res.found->beta << ", "
          << res.found->gamma << ")\n";
    else
      out << "no congruence: " << exclusion_name(*res.excluded) << "\n";
    return 0;
  }
  json j{{"theorem", "congruence"},
         {"triangle", json::array({t.a().str(), t.b().str(), t.c().str()})}};
  if (res.found) {
    j["found"] = triplet_json(*res.found);
    j["nagel"] = bary_json(nagel(t));
  } else {
    j["excluded"] = exclusion_name(*res.excluded);
  }
  emit(out, j);
  return 0;
}

int cmd_dussau(const Triangle& t, bool text, std::ostream& out) {
  BaryPoint point = dussau_point(t);
  Rational minus_one(-1);
  auto lines = dussau_lines(t, Triplet{minus_one, minus_one, minus_one});
  if (text) {
    out << "lines concur at: " << bary_text(point) << "\n"
        << "Nagel point:     " << bary_text(nagel(t)) << "\n";
    return 0;
  }
  json jl = json::array();
  for (const BaryLine& line : lines)
    jl.push_back(json::array({line.l.str(), line.m.str(), line.n.str()}));
  emit(out, json{{"theorem", "dussau"},
                 {"triangle", json::array({t.a().str(), t.b().str(), t.c().str()})},
                 {"concurrent", bary_json(point)},
                 {"nagel", bary_json(nagel(t))},
                 {"lines", jl}});
  return 0;
}

int cmd_verify(const SampleSpec& spec, const std::vector<std::string>& check_names, bool text,
               std::ostream& out) {
  SuiteReport report = run_suite(spec, parse_checks(check_names));
  if (text) {
    out << "trials: " << report.trials << ", failures: " << report.failures.size() << "\n";
    for (const SuiteFailure& f : report.failures)
      out << "  trial " << f.trial << " [" << f.check << "] " << f.detail << ": expected "
          << f.expected << ", got " << f.actual << "\n";
  } else {
    emit(out, report_json(report));
  }
  return report.failures.empty() ? 0 : 1;
}

int cmd_render(const Triangle& t, const Triplet& triplet, const RenderOptions& options,
               const std::string& path, std::ostream& out) {
  Configuration cfg = six_points(t, triplet);
  std::string svg = render_svg(cfg, options);  // may throw; nothing written then
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::IoError, "cannot open '" + path + "' for writing");
  file << svg;
  if (!file) throw Error(ErrorCode::IoError, "failed writing '" + path + "'");
  out << "wrote " << path << "\n";
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact triangle geometry of parametrized Conway configurations"};
  app.require_subcommand(1);

  std::vector<std::string> sides;
  std::vector<std::string> triplet_args{"1", "1", "1"};
  std::string alpha_arg;
  bool text = false;

  auto add_common = [&](CLI::App* cmd, bool with_triplet) {
    cmd->add_option("--sides", sides, "three side lengths a b c (rationals or decimals)")
        ->required()
        ->expected(3)
        ->delimiter(',');
    if (with_triplet)
      cmd->add_option("--triplet", triplet_args, "alpha beta gamma (default 1 1 1)")
          ->expected(3)
          ->delimiter(',');
    cmd->add_flag("--text", text, "human-readable output instead of JSON");
    cmd->add_flag("--json", "JSON output (the default)");
  };

  CLI::App* info = app.add_subcommand("info", "triangle data: shape, p, r^2, centers");
  add_common(info, false);

  CLI::App* construct = app.add_subcommand("construct", "build the six points of a triplet");
  add_common(construct, true);

  CLI::App* family = app.add_subcommand("family", "the family triplet and circle for an alpha");
  add_common(family, false);
  family->add_option("--alpha", alpha_arg, "family parameter alpha")->required();

  CLI::App* congruence_cmd = app.add_subcommand("congruence", "the unique non-(-1,-1,-1) concurrency triplet");
  add_common(congruence_cmd, false);

  CLI::App* dussau = app.add_subcommand("dussau", "(-1,-1,-1) line concurrency at the Nagel point");
  add_common(dussau, false);

  CLI::App* verify = app.add_subcommand("verify", "randomized verification suite");
  SampleSpec spec;
  spec.count = 100;
  spec.shape_filter = ShapeFilter::Scalene;
  spec.avoid_exclusions = true;
  std::vector<std::string> check_names{"all"};
  std::string shape_arg = "scalene";
  bool include_excluded = false;
  verify->add_option("--seed", spec.seed, "RNG seed (default 0)");
  verify->add_option("--count", spec.count, "number of sampled triangles (default 100)");
  verify->add_option("--checks", check_names,
                     "checks to run: all, conway, hexagon, family, necessity, dussau, anti_conway, "
                     "congruence, cross")
      ->delimiter(',');
  verify->add_option("--shape", shape_arg, "sample shape: scalene, any, isosceles, equilateral");
  verify->add_option("--side-min", spec.side_min, "minimum side (default 1)");
  verify->add_option("--side-max", spec.side_max, "maximum side (default 10)");
  verify->add_option("--den-bound", spec.denominator_bound, "denominator bound (default 4)");
  verify->add_flag("--include-excluded", include_excluded,
                   "also sample triangles hit by the congruence exclusions");
  verify->add_flag("--text", text, "human-readable output instead of JSON");
  verify->add_flag("--json", "JSON output (the default)");

  CLI::App* render = app.add_subcommand("render", "write an SVG figure");
  add_common(render, true);
  RenderOptions options;
  std::string out_path;
  render->add_option("--out", out_path, "output SVG path")->required();
  render->add_flag("--circle", options.conway_circle, "draw the circle about the incenter");
  render->add_flag("--anti-circles", options.anti_circles, "draw the three four-point circles");
  render->add_flag("--lines", options.dussau_lines, "draw the three concurrency lines");
  bool no_labels = false;
  render->add_flag("--no-labels", no_labels, "omit point labels");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*verify) {
      if (shape_arg == "scalene") spec.shape_filter = ShapeFilter::Scalene;
      else if (shape_arg == "any") spec.shape_filter = ShapeFilter::Any;
      else if (shape_arg == "isosceles") spec.shape_filter = ShapeFilter::Isosceles;
      else if (shape_arg == "equilateral") spec.shape_filter = ShapeFilter::Equilateral;
      else {
        err << "usage error: unknown shape '" << shape_arg << "'\n";
        return 2;
      }
      spec.avoid_exclusions = !include_excluded;
      return cmd_verify(spec, check_names, text, out);
    }

    Triangle t = sides_to_triangle(sides);
    if (*info) return cmd_info(t, text, out);
    if (*construct) return cmd_construct(t, parse_triplet(triplet_args), text, out);
    if (*family) return cmd_family(t, Rational::parse(alpha_arg), text, out);
    if (*congruence_cmd) return cmd_congruence(t, text, out);
    if (*dussau) return cmd_dussau(t, text, out);
    if (*render) {
      options.labels = !no_labels;
      return cmd_render(t, parse_triplet(triplet_args), options, out_path, out);
    }
    err << "usage error: no subcommand\n";
    return 2;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) {
      err << "usage error: " << e.what() << "\n";
      return 2;
    }
    err << "error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace conway::cli
