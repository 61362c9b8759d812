#include "conway/oracle.hpp"

#include <algorithm>
#include <cmath>

namespace conway {

namespace {
constexpr int kMaxRejections = 10000;
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw Error(ErrorCode::PreconditionViolated, "empty draw range");
  std::uint64_t limit = bound * (UINT64_MAX / bound);
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % bound;
}

std::int64_t Rng::range(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw Error(ErrorCode::PreconditionViolated, "empty draw range");
  std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(below(span));
}

Rational Rng::rational(std::int64_t lo, std::int64_t hi, int den_bound) {
  long d = 1 + static_cast<long>(below(static_cast<std::uint64_t>(den_bound)));
  long n = static_cast<long>(range(lo * d, hi * d));
  return Rational(n, d);
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::uint64_t trial_seed(std::uint64_t seed, int index) {
  return splitmix64(seed ^ (0x9E3779B97F4A7C15ull * (static_cast<std::uint64_t>(index) + 1)));
}

const char* shape_filter_name(ShapeFilter f) {
  switch (f) {
    case ShapeFilter::Any: return "any";
    case ShapeFilter::Scalene: return "scalene";
    case ShapeFilter::Isosceles: return "isosceles";
    case ShapeFilter::Equilateral: return "equilateral";
  }
  return "?";
}

Triangle sample_triangle(const SampleSpec& spec, Rng& rng) {
  if (spec.side_min < 1 || spec.side_max < spec.side_min || spec.denominator_bound < 1)
    throw Error(ErrorCode::PreconditionViolated, "invalid sample spec");

  for (int attempt = 0; attempt < kMaxRejections; ++attempt) {
    Rational a, b, c;
    switch (spec.shape_filter) {
      case ShapeFilter::Any:
      case ShapeFilter::Scalene:
        a = rng.rational(spec.side_min, spec.side_max, spec.denominator_bound);
        b = rng.rational(spec.side_min, spec.side_max, spec.denominator_bound);
        c = rng.rational(spec.side_min, spec.side_max, spec.denominator_bound);
        break;
      case ShapeFilter::Isosceles:
        a = rng.rational(spec.side_min, spec.side_max, spec.denominator_bound);
        b = a;
        c = rng.rational(spec.side_min, spec.side_max, spec.denominator_bound);
        break;
      case ShapeFilter::Equilateral:
        a = rng.rational(spec.side_min, spec.side_max, spec.denominator_bound);
        b = a;
        c = a;
        break;
    }

    if (a >= b + c || b >= a + c || c >= a + b) continue;
    if (spec.shape_filter == ShapeFilter::Scalene && (a == b || b == c || a == c)) continue;
    if (spec.shape_filter == ShapeFilter::Isosceles && c == a) continue;  // equilateral

    if (spec.avoid_exclusions) {
      Rational p = (a + b + c) / Rational(2);
      Rational two(2);
      if (p == two * a || p == two * b || p == two * c) continue;
      Rational p_sq = p.squared();
      if (p_sq == two * b * c || p_sq == two * c * a || p_sq == two * a * b) continue;
    }
    return Triangle::from_sides(a, b, c);
  }
  throw Error(ErrorCode::ExhaustedRejections, "sample spec rejected every candidate");
}

BruteForceCircle brute_force_circle(std::span<const CartPoint> points) {
  if (points.size() < 3)
    throw Error(ErrorCode::PreconditionViolated, "need at least three points");
  const CartPoint& p1 = points[0];
  const CartPoint& p2 = points[1];
  const CartPoint& p3 = points[2];

  // Perpendicular bisectors: 2 (p - p1) . center = |p|^2 - |p1|^2.
  QuadExt two(Rational(2));
  QuadExt a11 = two * (p2.x - p1.x), a12 = two * (p2.y - p1.y);
  QuadExt a21 = two * (p3.x - p1.x), a22 = two * (p3.y - p1.y);
  QuadExt r1 = (p2.x * p2.x + p2.y * p2.y) - (p1.x * p1.x + p1.y * p1.y);
  QuadExt r2 = (p3.x * p3.x + p3.y * p3.y) - (p1.x * p1.x + p1.y * p1.y);
  QuadExt det = a11 * a22 - a12 * a21;
  if (det.is_zero())
    throw Error(ErrorCode::CollinearSeed, "first three points are collinear");

  BruteForceCircle fit;
  fit.center = {(r1 * a22 - a12 * r2) / det, (a11 * r2 - r1 * a21) / det};
  fit.radius_sq = cart_dist_sq(fit.center, p1);
  fit.concyclic = true;
  fit.offender = 0;
  for (std::size_t i = 3; i < points.size(); ++i) {
    if (cart_dist_sq(fit.center, points[i]) != fit.radius_sq) {
      fit.concyclic = false;
      fit.offender = i;
      break;
    }
  }
  return fit;
}

const char* check_name(Check c) {
  switch (c) {
    case Check::Conway: return "conway";
    case Check::Hexagon: return "hexagon";
    case Check::Family: return "family";
    case Check::Necessity: return "necessity";
    case Check::Dussau: return "dussau";
    case Check::AntiConway: return "anti_conway";
    case Check::Congruence: return "congruence";
    case Check::Cross: return "cross";
  }
  return "?";
}

std::vector<Check> all_checks() {
  return {Check::Conway, Check::Hexagon, Check::Family, Check::Necessity,
          Check::Dussau, Check::AntiConway, Check::Congruence, Check::Cross};
}

std::vector<Check> parse_checks(const std::vector<std::string>& names) {
  std::vector<Check> out;
  auto add = [&](Check c) {
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
  };
  for (const std::string& name : names) {
    if (name == "all") {
      for (Check c : all_checks()) add(c);
      continue;
    }
    bool known = false;
    for (Check c : all_checks())
      if (name == check_name(c)) {
        add(c);
        known = true;
        break;
      }
    if (!known) throw Error(ErrorCode::ParseError, "unknown check: '" + name + "'");
  }
  return out;
}

namespace {

std::string sides_str(const Triangle& t) {
  return t.a().str() + "," + t.b().str() + "," + t.c().str();
}

std::string triplet_str(const Triplet& t) {
  return t.alpha.str() + "," + t.beta.str() + "," + t.gamma.str();
}

struct TrialContext {
  SuiteReport* report;
  int trial;
  const Triangle* triangle;
  FloatPolicy policy;

  void fail(Check check, const std::string& detail, const std::string& expected,
            const std::string& actual, const std::string& triplet = "") {
    report->failures.push_back(SuiteFailure{trial, check_name(check), sides_str(*triangle),
                                            triplet, detail, expected, actual});
  }

  void expect(Check check, bool condition, const std::string& detail, const std::string& expected,
              const std::string& actual, const std::string& triplet = "") {
    if (!condition) fail(check, detail, expected, actual, triplet);
  }

  /// Float backend agreement, applied to quantities of magnitude <= 1e6.
  void expect_close(Check check, double exact, double reeval, const std::string& detail,
                    const std::string& triplet = "") {
    if (std::fabs(exact) > 1e6) return;
    if (!approx_equal(exact, reeval, policy))
      fail(check, detail + " (float backend)", std::to_string(exact), std::to_string(reeval), triplet);
  }
};

double fx(const QuadExt& q) { return q.to_double(); }

CartPoint cart_incenter(const Configuration& cfg) {
  return cfg.frame.to_cartesian(incenter(cfg.triangle));
}

/// Three pairwise-distinct, non-collinear cart points out of the six, if any.
bool pick_circle_seed(const Configuration& cfg, std::array<CartPoint, 3>& seed,
                      std::vector<CartPoint>& rest) {
  const auto& pts = cfg.cart;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      for (int k = j + 1; k < 6; ++k) {
        if (pts[i] == pts[j] || pts[i] == pts[k] || pts[j] == pts[k]) continue;
        if (cart_collinear(pts[i], pts[j], pts[k])) continue;
        seed = {pts[i], pts[j], pts[k]};
        rest.clear();
        for (int l = 0; l < 6; ++l)
          if (l != i && l != j && l != k) rest.push_back(pts[l]);
        return true;
      }
  return false;
}

void check_conway(TrialContext& ctx) {
  const Triangle& t = *ctx.triangle;
  Rational one(1);
  Configuration cfg = six_points(t, Triplet{one, one, one});
  Rational expected_r_sq = t.p().squared() + t.r_sq();

  Equidistance eq = equidistant_from(t, incenter(t), cfg.bary);
  ctx.expect(Check::Conway, eq.equal, "six points equidistant from incenter", "equal",
             eq.equal ? "equal" : "unequal at " + std::to_string(eq.offender));
  if (eq.equal)
    ctx.expect(Check::Conway, eq.common_sq == expected_r_sq, "squared radius p^2+r^2",
               expected_r_sq.str(), eq.common_sq.str());

  // Brute-force Cartesian route.
  std::array<CartPoint, 3> seed;
  std::vector<CartPoint> rest;
  if (pick_circle_seed(cfg, seed, rest)) {
    std::vector<CartPoint> all(seed.begin(), seed.end());
    all.insert(all.end(), rest.begin(), rest.end());
    BruteForceCircle fit = brute_force_circle(all);
    ctx.expect(Check::Conway, fit.concyclic, "brute-force circle contains all six", "on-circle",
               "off at " + std::to_string(fit.offender));
    ctx.expect(Check::Conway, fit.center == cart_incenter(cfg), "brute-force center is the incenter",
               "incenter", "elsewhere");
    ctx.expect(Check::Conway, fit.radius_sq == QuadExt(expected_r_sq), "brute-force radius_sq",
               expected_r_sq.str(), fit.radius_sq.str());
  }

  // Float backend.
  CartPoint inc = cart_incenter(cfg);
  for (const CartPoint& pt : cfg.cart) {
    double dx = fx(pt.x) - fx(inc.x);
    double dy = fx(pt.y) - fx(inc.y);
    ctx.expect_close(Check::Conway, expected_r_sq.to_double(), dx * dx + dy * dy,
                     "incenter distance squared");
  }
}

void check_hexagon(TrialContext& ctx) {
  const Triangle& t = *ctx.triangle;
  Rational one(1);
  Configuration cfg = six_points(t, Triplet{one, one, one});
  HexagonMetrics m = hexagon_metrics(cfg);
  Rational expected = Rational(4) * t.p().squared();
  for (int k = 0; k < 3; ++k) {
    ctx.expect(Check::Hexagon, m.diag_main_sq[k] == expected, "main diagonal squared = 4p^2",
               expected.str(), m.diag_main_sq[k].str());
    ctx.expect(Check::Hexagon, m.opposite_sides_parallel[k], "opposite sides parallel", "parallel",
               "not parallel");
    ctx.expect(Check::Hexagon, m.diag_pairs_sq[k].first == m.diag_pairs_sq[k].second,
               "reflected diagonal pair equal", m.diag_pairs_sq[k].first.str(),
               m.diag_pairs_sq[k].second.str());
  }
}

void check_family(TrialContext& ctx, Rng& rng, const SampleSpec& spec) {
  const Triangle& t = *ctx.triangle;
  Rational alpha = rng.rational(-3, 3, spec.denominator_bound);
  Triplet member = family_triplet(t, alpha);
  std::string ts = triplet_str(member);

  FamilyVerdict verdict = verify_family(t, member);
  ctx.expect(Check::Family, verdict.cocyclic, "family member is cocyclic about the incenter", "cocyclic",
             "not cocyclic", ts);
  ctx.expect(Check::Family, verdict.ok, "verify_family consistency", "ok", "mismatch", ts);
  Rational expected = family_radius_sq(t, alpha);
  if (verdict.radius_sq)
    ctx.expect(Check::Family, *verdict.radius_sq == expected, "family squared radius",
               expected.str(), verdict.radius_sq->str(), ts);

  Configuration cfg = six_points(t, member);
  std::array<CartPoint, 3> seed;
  std::vector<CartPoint> rest;
  if (pick_circle_seed(cfg, seed, rest)) {
    std::vector<CartPoint> all(seed.begin(), seed.end());
    all.insert(all.end(), rest.begin(), rest.end());
    BruteForceCircle fit = brute_force_circle(all);
    ctx.expect(Check::Family, fit.concyclic && fit.radius_sq == QuadExt(expected),
               "brute-force family circle", expected.str(),
               fit.concyclic ? fit.radius_sq.str() : "not concyclic", ts);
  }

  CartPoint inc = cart_incenter(cfg);
  for (const CartPoint& pt : cfg.cart) {
    double dx = fx(pt.x) - fx(inc.x);
    double dy = fx(pt.y) - fx(inc.y);
    ctx.expect_close(Check::Family, expected.to_double(), dx * dx + dy * dy,
                     "family radius via floats", ts);
  }
}

void check_necessity(TrialContext& ctx, Rng& rng, const SampleSpec& spec) {
  const Triangle& t = *ctx.triangle;
  for (int attempt = 0; attempt < 32; ++attempt) {
    Triplet candidate{rng.rational(-3, 3, spec.denominator_bound),
                      rng.rational(-3, 3, spec.denominator_bound),
                      rng.rational(-3, 3, spec.denominator_bound)};
    Membership membership = classify_triplet(t, candidate);
    if (membership.is_solution()) continue;  // essentially never on a scalene triangle

    std::string ts = triplet_str(candidate);
    FamilyVerdict verdict = verify_family(t, candidate);
    ctx.expect(Check::Necessity, !verdict.cocyclic, "non-solution triplet must not be cocyclic",
               "not cocyclic", "cocyclic", ts);
    ctx.expect(Check::Necessity, verdict.ok, "verify_family consistency", "ok", "mismatch", ts);
    return;
  }
}

void check_dussau(TrialContext& ctx, FaultInjection fault) {
  const Triangle& t = *ctx.triangle;
  Rational minus_one(-1);
  Triplet anti{minus_one, minus_one, minus_one};
  auto lines = dussau_lines(t, anti);
  if (fault == FaultInjection::FlipDussauLineSign) lines[0].l = -lines[0].l;

  BaryPoint expected = nagel(t);
  try {
    Concurrency res = concurrent(lines[0], lines[1], lines[2]);
    bool at_nagel = res.kind == Concurrency::Kind::Concurrent && same_point(*res.point, expected);
    ctx.expect(Check::Dussau, at_nagel, "(-1,-1,-1) lines concur at the Nagel point", "concurrent at Nagel",
               res.kind == Concurrency::Kind::Concurrent ? "concurrent elsewhere" : "not concurrent");
  } catch (const Error& e) {
    ctx.fail(Check::Dussau, "concurrent() raised", "concurrent at Nagel", e.what());
  }

  // Cartesian route: pairwise intersections of the actual segments' lines.
  Configuration cfg = six_points(t, anti);
  auto i1 = cart_line_intersection(cfg.cart[kAPrime], cfg.cart[kCSecond], cfg.cart[kBPrime], cfg.cart[kASecond]);
  auto i2 = cart_line_intersection(cfg.cart[kBPrime], cfg.cart[kASecond], cfg.cart[kCPrime], cfg.cart[kBSecond]);
  CartPoint nagel_cart = cfg.frame.to_cartesian(expected);
  bool cart_ok = i1 && i2 && *i1 == *i2 && *i1 == nagel_cart;
  ctx.expect(Check::Dussau, cart_ok, "Cartesian intersections meet at the Nagel point", "Nagel",
             cart_ok ? "Nagel" : "elsewhere");
}

void check_anti_conway(TrialContext& ctx) {
  const Triangle& t = *ctx.triangle;
  Rational expected = Rational(4) * t.r_sq();
  try {
    AntiConwayReport report = anti_conway(t);
    for (const Rational& power : report.nagel_powers)
      ctx.expect(Check::AntiConway, power == expected, "Nagel power is 4 r^2", expected.str(),
                 power.str());

    // Brute-force + float cross-checks per quadruple.
    Rational minus_one(-1);
    Configuration cfg = six_points(t, Triplet{minus_one, minus_one, minus_one});
    constexpr int quads[3][4] = {{kAPrime, kASecond, kBPrime, kCSecond},
                                 {kBPrime, kBSecond, kCPrime, kASecond},
                                 {kCPrime, kCSecond, kAPrime, kBSecond}};
    CartPoint nagel_cart = cfg.frame.to_cartesian(nagel(t));
    for (const auto& quad : quads) {
      std::array<CartPoint, 4> pts{cfg.cart[quad[0]], cfg.cart[quad[1]], cfg.cart[quad[2]],
                                   cfg.cart[quad[3]]};
      BruteForceCircle fit = brute_force_circle(pts);
      ctx.expect(Check::AntiConway, fit.concyclic, "brute-force quadruple circle", "on-circle",
                 "off-circle");
      QuadExt power_exact = cart_dist_sq(nagel_cart, fit.center) - fit.radius_sq;
      ctx.expect(Check::AntiConway, power_exact == QuadExt(expected),
                 "Cartesian power at the Nagel point", expected.str(), power_exact.str());

      double dx = fx(nagel_cart.x) - fx(fit.center.x);
      double dy = fx(nagel_cart.y) - fx(fit.center.y);
      ctx.expect_close(Check::AntiConway, expected.to_double(),
                       dx * dx + dy * dy - fx(fit.radius_sq), "Nagel power via floats");
    }
  } catch (const Error& e) {
    ctx.fail(Check::AntiConway, "anti_conway raised", "4 r^2 everywhere", e.what());
  }
}

void check_congruence(TrialContext& ctx) {
  const Triangle& t = *ctx.triangle;
  Rational minus_one(-1);
  Triplet anti{minus_one, minus_one, minus_one};
  try {
    CongruenceResult res = congruence(t);
    std::vector<Triplet> solutions = sigma_solutions(t);
    std::vector<Triplet> nonzero;
    for (const Triplet& s : solutions)
      if (!s.alpha.is_zero() && !s.beta.is_zero() && !s.gamma.is_zero()) nonzero.push_back(s);

    auto contains = [&](const Triplet& s) {
      return std::find(nonzero.begin(), nonzero.end(), s) != nonzero.end();
    };
    if (res.found) {
      std::string ts = triplet_str(*res.found);
      auto residuals = sigma_residuals(t, *res.found);
      bool zero = residuals[0].is_zero() && residuals[1].is_zero() && residuals[2].is_zero();
      ctx.expect(Check::Congruence, zero, "congruence solves the system", "0,0,0",
                 residuals[0].str() + "," + residuals[1].str() + "," + residuals[2].str(), ts);
      for (const Rational* comp : {&res.found->alpha, &res.found->beta, &res.found->gamma})
        ctx.expect(Check::Congruence, !comp->is_zero() && *comp != minus_one,
                   "component outside {0,-1}", "outside", comp->str(), ts);
      auto lines = dussau_lines(t, *res.found);
      Concurrency conc = concurrent(lines[0], lines[1], lines[2]);
      ctx.expect(Check::Congruence,
                 conc.kind == Concurrency::Kind::Concurrent && same_point(*conc.point, nagel(t)),
                 "congruence lines concur at the Nagel point", "Nagel", "elsewhere", ts);
      ctx.expect(Check::Congruence, nonzero.size() == 2 && contains(anti) && contains(*res.found),
                 "system solutions are exactly {(-1,-1,-1), congruence}", "2 solutions",
                 std::to_string(nonzero.size()) + " solutions", ts);
      // Sampled sign claim; a counterexample must surface here, not vanish.
      ctx.expect(Check::Congruence,
                 !(res.found->alpha.sign() > 0 && res.found->beta.sign() > 0 && res.found->gamma.sign() > 0),
                 "components not all positive", "some component <= 0", "all positive", ts);

      // Float backend: the three line equations vanish at the Nagel point.
      BaryPoint n = nagel(t).normalized();
      for (const BaryLine& line : lines) {
        double value = line.l.to_double() * n.x.to_double() + line.m.to_double() * n.y.to_double() +
                       line.n.to_double() * n.z.to_double();
        double scale = std::max({std::fabs(line.l.to_double()), std::fabs(line.m.to_double()),
                                 std::fabs(line.n.to_double())});
        if (scale <= 1e6) ctx.expect_close(Check::Congruence, 0.0, value / scale, "line through Nagel", ts);
      }
    } else {
      ctx.expect(Check::Congruence, nonzero.size() == 1 && contains(anti),
                 "excluded triangle admits only (-1,-1,-1)", "1 solution",
                 std::to_string(nonzero.size()) + " solutions");
    }
  } catch (const Error& e) {
    ctx.fail(Check::Congruence, "congruence raised", "found or excluded", e.what());
  }
}

BaryPoint random_finite_point(Rng& rng) {
  for (;;) {
    long coords[3];
    for (long& c : coords) c = rng.range(-6, 6);
    if (coords[0] == 0 && coords[1] == 0 && coords[2] == 0) continue;
    if (coords[0] + coords[1] + coords[2] == 0) continue;
    return BaryPoint(Rational(coords[0]), Rational(coords[1]), Rational(coords[2]));
  }
}

/// Sum-zero direction, not the zero vector.
std::array<Rational, 3> random_direction(Rng& rng) {
  for (;;) {
    long d1 = rng.range(-4, 4);
    long d2 = rng.range(-4, 4);
    if (d1 == 0 && d2 == 0) continue;
    return {Rational(d1), Rational(d2), Rational(-d1 - d2)};
  }
}

std::optional<BaryPoint> offset_point(const BaryPoint& base, const std::array<Rational, 3>& dir,
                                      const Rational& t) {
  Rational x = base.x + dir[0] * t;
  Rational y = base.y + dir[1] * t;
  Rational z = base.z + dir[2] * t;
  if (x.is_zero() && y.is_zero() && z.is_zero()) return std::nullopt;
  BaryPoint p(x, y, z);
  if (!p.is_finite()) return std::nullopt;
  return p;
}

/// Second intersection of the circle with the line through `base` (which
/// lies on the circle) in direction `dir`.
std::optional<BaryPoint> second_intersection(const Triangle& t, const BaryCircle& circle,
                                             const BaryPoint& base, const std::array<Rational, 3>& dir) {
  BaryPoint b = base.normalized();
  // The conic form along b + s*dir is A s^2 + B s (no constant term: b is on
  // the circle, and the direction's zero sum keeps the normalization).
  Rational a_sq = t.a().squared(), b_sq = t.b().squared(), c_sq = t.c().squared();
  Rational quad = a_sq * dir[1] * dir[2] + b_sq * dir[2] * dir[0] + c_sq * dir[0] * dir[1];
  Rational lin = a_sq * (b.y * dir[2] + b.z * dir[1]) + b_sq * (b.z * dir[0] + b.x * dir[2]) +
                 c_sq * (b.x * dir[1] + b.y * dir[0]) + circle.u * dir[0] + circle.v * dir[1] +
                 circle.w * dir[2];
  if (quad.is_zero()) return std::nullopt;  // the other intersection is at infinity
  Rational s = -(lin / quad);
  if (s.is_zero()) return std::nullopt;  // tangent: no second point
  return offset_point(b, dir, s);
}

void check_cross(TrialContext& ctx, Rng& rng) {
  const Triangle& t = *ctx.triangle;

  // Three four-point configurations: two forced onto a common circle, one free.
  int budget = 64;
  for (int round = 0; round < 3 && budget > 0; ++round) {
    BaryPoint p1 = random_finite_point(rng);
    BaryPoint p2 = random_finite_point(rng);
    BaryPoint p3 = random_finite_point(rng);
    if (same_point(p1, p2) || same_point(p1, p3) || same_point(p2, p3)) {
      --round;  // resample the whole configuration
      --budget;
      continue;
    }
    BaryCircle circle;
    try {
      circle = circle_through(t, p1, p2, p3);
    } catch (const Error&) {
      --round;
      --budget;
      continue;  // collinear triple
    }

    BaryPoint p4 = p1;
    bool have_p4 = false;
    if (round < 2) {
      auto candidate = second_intersection(t, circle, p1, random_direction(rng));
      if (candidate && !same_point(*candidate, p2) && !same_point(*candidate, p3)) {
        p4 = *candidate;
        have_p4 = true;
      }
    }
    if (!have_p4) {
      do {
        p4 = random_finite_point(rng);
      } while (same_point(p4, p1) || same_point(p4, p2) || same_point(p4, p3));
    }

    bool bary_verdict = concyclic(t, p1, p2, p3, p4);
    CartesianEmbedding frame = embed(t);
    std::array<CartPoint, 4> cart{frame.to_cartesian(p1), frame.to_cartesian(p2),
                                  frame.to_cartesian(p3), frame.to_cartesian(p4)};
    bool cart_verdict = cart_concyclic(cart);
    BruteForceCircle fit = brute_force_circle(cart);
    bool power_verdict = power_of_point(t, p4, circle).is_zero();

    bool unanimous = bary_verdict == cart_verdict && bary_verdict == fit.concyclic &&
                     bary_verdict == power_verdict;
    ctx.expect(Check::Cross, unanimous, "concyclicity backends agree",
               bary_verdict ? "concyclic" : "not concyclic",
               std::string("bary=") + (bary_verdict ? "1" : "0") + " cart=" + (cart_verdict ? "1" : "0") +
                   " fit=" + (fit.concyclic ? "1" : "0") + " power=" + (power_verdict ? "1" : "0"));
  }

  // Feuerbach criterion against the determinant predicate. For sum-zero
  // directions, proportionality reduces to one 2x2 cross component.
  budget = 64;
  for (int round = 0; round < 2 && budget > 0; ++round) {
    BaryPoint pole = random_finite_point(rng);
    auto dir1 = random_direction(rng);
    auto dir2 = random_direction(rng);
    if ((dir1[0] * dir2[1] - dir1[1] * dir2[0]).is_zero()) {
      --round;
      --budget;
      continue;  // same pencil direction
    }
    BaryPoint base = pole.normalized();
    auto d = offset_point(base, dir1, rng.rational(1, 3, 2));
    auto e = offset_point(base, dir1, -rng.rational(1, 3, 2));
    auto m = offset_point(base, dir2, rng.rational(1, 3, 2));
    auto n = offset_point(base, dir2, -rng.rational(1, 3, 2));
    if (!d || !e || !m || !n) {
      --round;
      --budget;
      continue;
    }
    const BaryPoint* pts[4] = {&*d, &*e, &*m, &*n};
    bool distinct = true;
    for (int i = 0; i < 4 && distinct; ++i)
      for (int j = i + 1; j < 4 && distinct; ++j)
        if (same_point(*pts[i], *pts[j])) distinct = false;
    if (!distinct) {
      --round;
      --budget;
      continue;
    }

    bool feuerbach = feuerbach_check(t, pole, *d, *e, *m, *n);
    bool det_verdict = concyclic(t, *d, *e, *m, *n);
    ctx.expect(Check::Cross, feuerbach == det_verdict, "Feuerbach criterion matches concyclic",
               det_verdict ? "concyclic" : "not concyclic", feuerbach ? "concyclic" : "not concyclic");
  }
}

}  // namespace

SuiteReport run_suite(const SampleSpec& spec, const std::vector<Check>& checks, FaultInjection fault) {
  if (spec.count < 1) throw Error(ErrorCode::PreconditionViolated, "count must be at least 1");
  SuiteReport report;
  report.spec = spec;
  std::vector<Check> ordered;
  for (Check c : all_checks())
    if (std::find(checks.begin(), checks.end(), c) != checks.end()) ordered.push_back(c);
  for (Check c : ordered) report.checks.push_back(check_name(c));

  for (int trial = 0; trial < spec.count; ++trial) {
    Rng rng(trial_seed(spec.seed, trial));
    Triangle t = sample_triangle(spec, rng);
    bool scalene = classify(t) == Shape::Scalene;

    TrialContext ctx{&report, trial, &t, FloatPolicy{}};
    for (Check c : ordered) {
      switch (c) {
        case Check::Conway: check_conway(ctx); break;
        case Check::Hexagon: check_hexagon(ctx); break;
        case Check::Family: check_family(ctx, rng, spec); break;
        case Check::Necessity:
          if (scalene) check_necessity(ctx, rng, spec);
          break;
        case Check::Dussau:
          if (scalene) check_dussau(ctx, fault);
          break;
        case Check::AntiConway:
          if (scalene) check_anti_conway(ctx);
          break;
        case Check::Congruence:
          if (scalene) check_congruence(ctx);
          break;
        case Check::Cross: check_cross(ctx, rng); break;
      }
    }
    ++report.trials;
  }
  return report;
}

}  // namespace conway
