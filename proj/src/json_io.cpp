#include "conway/json_io.hpp"

namespace conway {

using nlohmann::json;

json rational_json(const Rational& r) {
  return r.str();
}

json quadext_json(const QuadExt& x) {
  return json{{"u", x.u().str()}, {"v", x.v().str()}, {"D", x.disc().str()}, {"approx", x.to_double()}};
}

json bary_json(const BaryPoint& p) {
  BaryPoint n = p.normalized();
  return json::array({n.x.str(), n.y.str(), n.z.str()});
}

json cart_float_json(const CartPoint& p) {
  return json::array({p.x.to_double(), p.y.to_double()});
}

json triplet_json(const Triplet& t) {
  return json::array({t.alpha.str(), t.beta.str(), t.gamma.str()});
}

QuadExt quadext_from_json(const json& j) {
  return QuadExt(Rational::parse(j.at("u").get<std::string>()),
                 Rational::parse(j.at("v").get<std::string>()),
                 Rational::parse(j.at("D").get<std::string>()));
}

CartPoint cart_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2)
    throw Error(ErrorCode::ParseError, "expected a two-element point array");
  return CartPoint{quadext_from_json(j.at(0)), quadext_from_json(j.at(1))};
}

json triangle_json(const Triangle& t) {
  return json{{"sides", json::array({t.a().str(), t.b().str(), t.c().str()})},
              {"p", t.p().str()},
              {"area_sq16", t.area_sq16().str()},
              {"r_sq", t.r_sq().str()},
              {"shape", shape_name(classify(t))},
              {"incenter", bary_json(incenter(t))},
              {"nagel", bary_json(nagel(t))}};
}

json configuration_json(const Configuration& cfg) {
  json points = json::array();
  for (int i = 0; i < 6; ++i) {
    points.push_back(json{{"name", point_label(i)},
                          {"bary", bary_json(cfg.bary[i])},
                          {"cart", cart_float_json(cfg.cart[i])},
                          {"cart_exact", json::array({quadext_json(cfg.cart[i].x), quadext_json(cfg.cart[i].y)})}});
  }
  json vertices{{"A", json::array({quadext_json(cfg.frame.vertex_a.x), quadext_json(cfg.frame.vertex_a.y)})},
                {"B", json::array({quadext_json(cfg.frame.vertex_b.x), quadext_json(cfg.frame.vertex_b.y)})},
                {"C", json::array({quadext_json(cfg.frame.vertex_c.x), quadext_json(cfg.frame.vertex_c.y)})}};
  return json{{"triangle", triangle_json(cfg.triangle)},
              {"triplet", triplet_json(cfg.triplet)},
              {"vertices", vertices},
              {"points", points}};
}

json report_json(const SuiteReport& report) {
  json failures = json::array();
  for (const SuiteFailure& f : report.failures) {
    json entry{{"trial", f.trial},
               {"check", f.check},
               {"triangle", f.triangle},
               {"detail", f.detail},
               {"expected", f.expected},
               {"actual", f.actual}};
    if (!f.triplet.empty()) entry["triplet"] = f.triplet;
    failures.push_back(entry);
  }
  return json{{"seed", report.spec.seed},
              {"count", report.spec.count},
              {"side_min", report.spec.side_min},
              {"side_max", report.spec.side_max},
              {"denominator_bound", report.spec.denominator_bound},
              {"shape", shape_filter_name(report.spec.shape_filter)},
              {"avoid_exclusions", report.spec.avoid_exclusions},
              {"checks", report.checks},
              {"trials", report.trials},
              {"failure_count", report.failures.size()},
              {"failures", failures}};
}

}  // namespace conway
