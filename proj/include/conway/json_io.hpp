#pragma once

#include <json.hpp>

#include "conway/oracle.hpp"

namespace conway {

// Rationals serialize as "n/d" ("n" when d = 1); QuadExt as
// {"u": ..., "v": ..., "D": ..., "approx": float}.
nlohmann::json rational_json(const Rational& r);
nlohmann::json quadext_json(const QuadExt& x);
nlohmann::json bary_json(const BaryPoint& p);       // normalized triple of strings
nlohmann::json cart_float_json(const CartPoint& p); // [x, y] as doubles
nlohmann::json triplet_json(const Triplet& t);

QuadExt quadext_from_json(const nlohmann::json& j);
CartPoint cart_from_json(const nlohmann::json& j);

nlohmann::json triangle_json(const Triangle& t);
nlohmann::json configuration_json(const Configuration& cfg);
nlohmann::json report_json(const SuiteReport& report);

}  // namespace conway
