// Acceptance suite: end-to-end checks of every contract the library ships
// with, each printed as one PASS/FAIL line. All geometric assertions are
// exact (zero tolerance); floating point appears only where a criterion is
// explicitly about float behavior.

#include <chrono>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "conway/cli.hpp"
#include "conway/json_io.hpp"
#include "conway/oracle.hpp"
#include "conway/svg.hpp"

using namespace conway;

namespace {

int g_failed = 0;

void report(const std::string& name, bool ok, const std::string& detail = "") {
  std::printf("[%s] %s%s\n", ok ? "PASS" : "FAIL", name.c_str(),
              detail.empty() ? "" : ("  (" + detail + ")").c_str());
  if (!ok) ++g_failed;
}

Triangle tri(long a, long b, long c) {
  return Triangle::from_sides(Rational(a), Rational(b), Rational(c));
}

Triplet ones() { return Triplet{Rational(1), Rational(1), Rational(1)}; }

Triangle sample(std::uint64_t seed, int index, ShapeFilter filter, bool avoid_exclusions) {
  SampleSpec spec;
  spec.side_min = 1;
  spec.side_max = 12;
  spec.denominator_bound = 4;
  spec.shape_filter = filter;
  spec.avoid_exclusions = avoid_exclusions;
  Rng rng(trial_seed(seed, index));
  return sample_triangle(spec, rng);
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// --- criterion 1: Conway circle ---------------------------------------------

void criterion_conway() {
  auto start = std::chrono::steady_clock::now();
  bool ok = true;
  std::string detail;

  std::vector<Triangle> instances{tri(3, 4, 5), tri(4, 5, 6), tri(2, 2, 2)};
  for (int i = 0; i < 200; ++i) instances.push_back(sample(1001, i, ShapeFilter::Any, false));

  for (const Triangle& t : instances) {
    Configuration cfg = six_points(t, ones());
    Equidistance eq = equidistant_from(t, incenter(t), cfg.bary);
    Rational expected = t.p().squared() + t.r_sq();
    if (!eq.equal || eq.common_sq != expected) {
      ok = false;
      detail = "failed on (" + t.a().str() + "," + t.b().str() + "," + t.c().str() + ")";
      break;
    }
  }
  if (ok && conway_circle(tri(3, 4, 5)).radius_sq != Rational(37)) {
    ok = false;
    detail = "radius_sq(3,4,5) != 37";
  }
  double elapsed = seconds_since(start);
  if (ok && elapsed >= 5.0) {
    ok = false;
    detail = "took " + std::to_string(elapsed) + " s (budget 5 s)";
  }
  report("criterion 1: Conway circle, exact radius p^2+r^2 on 203 instances", ok, detail);
}

// --- criterion 2: hexagon metrics -------------------------------------------

void criterion_hexagon() {
  bool ok = true;
  std::string detail;

  std::vector<Triangle> instances{tri(3, 4, 5), tri(4, 5, 6), tri(2, 2, 2)};
  for (int i = 0; i < 200; ++i) instances.push_back(sample(1001, i, ShapeFilter::Any, false));

  for (const Triangle& t : instances) {
    HexagonMetrics m = hexagon_metrics(six_points(t, ones()));
    Rational expected = Rational(4) * t.p().squared();
    for (int k = 0; k < 3 && ok; ++k) {
      if (m.diag_main_sq[k] != expected) { ok = false; detail = "diagonal != 4p^2"; }
      if (!m.opposite_sides_parallel[k]) { ok = false; detail = "sides not parallel"; }
    }
    if (!ok) break;
  }
  if (ok && hexagon_metrics(six_points(tri(3, 4, 5), ones())).diag_main_sq[0] != Rational(144)) {
    ok = false;
    detail = "(3,4,5) diagonal squared != 144";
  }
  report("criterion 2: hexagon diagonals 4p^2 and parallel opposite sides", ok, detail);
}

// --- criterion 3: family sufficiency ----------------------------------------

void criterion_family_sufficiency() {
  bool ok = true;
  std::string detail;
  for (int i = 0; i < 200 && ok; ++i) {
    Triangle t = sample(1003, i, ShapeFilter::Any, false);
    Rng rng(trial_seed(2003, i));
    Rational alpha = rng.rational(-3, 3, 8);
    FamilyVerdict verdict = verify_family(t, family_triplet(t, alpha));
    if (!verdict.ok || !verdict.cocyclic || *verdict.radius_sq != family_radius_sq(t, alpha)) {
      ok = false;
      detail = "alpha=" + alpha.str() + " on (" + t.a().str() + "," + t.b().str() + "," + t.c().str() + ")";
    }
    // alpha = 1 - p/a turns the circle into the incircle.
    Rational inscribed = inscribed_alpha(t);
    FamilyVerdict incircle = verify_family(t, family_triplet(t, inscribed));
    if (!incircle.cocyclic || *incircle.radius_sq != t.r_sq()) {
      ok = false;
      detail = "inscribed alpha did not give r^2";
    }
  }
  report("criterion 3: family triplets cocyclic with radius^2 (p+(alpha-1)a)^2+r^2, 200 trials", ok,
         detail);
}

// --- criterion 4: necessity (sampled) ----------------------------------------

void criterion_family_necessity() {
  bool ok = true;
  std::string detail;
  int tested = 0;
  for (int i = 0; i < 200; ++i) {
    Triangle t = sample(1004, i, ShapeFilter::Scalene, false);
    Rng rng(trial_seed(2004, i));
    Triplet candidate{rng.rational(-3, 3, 6), rng.rational(-3, 3, 6), rng.rational(-3, 3, 6)};
    if (classify_triplet(t, candidate).is_solution()) continue;  // vanishingly rare
    ++tested;
    Equidistance eq = equidistant_from(t, incenter(t), six_points(t, candidate).bary);
    if (eq.equal) {
      ok = false;
      detail = "non-solution triplet was cocyclic";
      break;
    }
  }
  if (tested < 190) {
    ok = false;
    detail = "only " + std::to_string(tested) + " usable trials";
  }
  report("criterion 4: non-solution triplets are never cocyclic, 200 scalene trials", ok, detail);
}

// --- criterion 5: isosceles extras -------------------------------------------

void criterion_isosceles_extras() {
  bool ok = true;
  std::string detail;

  // 50 seeded isosceles triangles per apex; the apex-B and apex-A versions
  // are relabelings of the sampled apex-C triangle (a = b).
  for (int i = 0; i < 50 && ok; ++i) {
    Triangle base = sample(1005, i, ShapeFilter::Isosceles, false);
    const Rational& s = base.a();  // = b
    const Rational& w = base.c();

    struct Case {
      Triangle t;
      Triplet extra;
    };
    Case cases[3] = {
        {Triangle::from_sides(s, s, w), Triplet{Rational(0), Rational(0), -(s / w)}},  // apex C
        {Triangle::from_sides(s, w, s), Triplet{Rational(0), -(s / w), Rational(0)}},  // apex B
        {Triangle::from_sides(w, s, s), Triplet{-(s / w), Rational(0), Rational(0)}},  // apex A
    };
    for (const Case& c : cases) {
      FamilyVerdict verdict = verify_family(c.t, c.extra);
      Rational expected = family_radius_sq(c.t, c.extra.alpha);
      if (!verdict.ok || !verdict.cocyclic || *verdict.radius_sq != expected) {
        ok = false;
        detail = "extra triplet failed on apex case";
        break;
      }
      if (classify_triplet(c.t, c.extra).tag != Membership::Tag::IsoscelesExtra) {
        ok = false;
        detail = "extra not classified as such";
        break;
      }
    }
  }

  FamilyVerdict witness = verify_family(tri(3, 3, 4), Triplet{Rational(0), Rational(0), Rational(-3, 4)});
  if (ok && (!witness.cocyclic || *witness.radius_sq != Rational(24, 5))) {
    ok = false;
    detail = "(3,3,4) witness radius_sq != 24/5";
  }
  report("criterion 5: isosceles extra triplets on all three apexes, 50 trials each", ok, detail);
}

// --- criterion 6: contact-point cocyclicities --------------------------------

void criterion_addendum() {
  bool ok = true;
  std::string detail;
  int checked = 0;
  for (int i = 0; i < 200 && ok; ++i) {
    Triangle t = sample(1003, i, ShapeFilter::Any, false);
    Rng rng(trial_seed(2003, i));
    Rational alpha = rng.rational(-3, 3, 8);
    Triplet member = family_triplet(t, alpha);
    if (!verify_family(t, member).cocyclic) {
      ok = false;
      detail = "family member not cocyclic";
      break;
    }
    Configuration cfg = six_points(t, member);
    ContactPoints cp = contact_points(t);
    const BaryPoint quads[3][4] = {
        {cp.u, cp.w, cfg.bary[kAPrime], cfg.bary[kASecond]},
        {cp.u, cp.v, cfg.bary[kBPrime], cfg.bary[kBSecond]},
        {cp.v, cp.w, cfg.bary[kCPrime], cfg.bary[kCSecond]},
    };
    for (const auto& q : quads) {
      bool distinct = true;
      for (int a = 0; a < 4 && distinct; ++a)
        for (int b = a + 1; b < 4 && distinct; ++b)
          if (same_point(q[a], q[b])) distinct = false;
      if (!distinct) continue;  // coincident points impose no constraint
      ++checked;
      if (!concyclic(t, q[0], q[1], q[2], q[3])) {
        ok = false;
        detail = "contact-point quadruple not concyclic";
        break;
      }
    }
  }
  if (ok && checked < 500) {
    ok = false;
    detail = "only " + std::to_string(checked) + " quadruples checked";
  }
  report("criterion 6: {U,W,A',A''} / {U,V,B',B''} / {V,W,C',C''} concyclic in every passing trial",
         ok, detail);
}

// --- criterion 7: concurrency at the Nagel point ------------------------------

void criterion_dussau() {
  bool ok = same_point(dussau_point(tri(4, 5, 6)), BaryPoint(Rational(7), Rational(5), Rational(3)));
  std::string detail = ok ? "" : "(4,5,6) witness failed";
  for (int i = 0; i < 200 && ok; ++i) {
    Triangle t = sample(1007, i, ShapeFilter::Scalene, false);
    if (!same_point(dussau_point(t), nagel(t))) {
      ok = false;
      detail = "concurrency point != Nagel";
    }
  }
  report("criterion 7: (-1,-1,-1) lines concur at the Nagel point, 200 scalene trials", ok, detail);
}

// --- criterion 8: anti-Conway circles and the common power -------------------

void criterion_anti_conway() {
  bool ok = true;
  std::string detail;

  // Witness values from the Cartesian |IP|^2 - R^2 oracle: 4 r^2.
  struct Witness {
    Triangle t;
    Rational power;
  };
  Witness witnesses[3] = {{tri(3, 4, 5), Rational(4)},
                          {tri(4, 5, 6), Rational(7)},
                          {tri(5, 6, 7), Rational(32, 3)}};
  for (const Witness& w : witnesses) {
    AntiConwayReport report_w = anti_conway(w.t);
    for (const Rational& p : report_w.nagel_powers)
      if (p != w.power) {
        ok = false;
        detail = "witness power mismatch";
      }
  }

  for (int i = 0; i < 200 && ok; ++i) {
    Triangle t = sample(1008, i, ShapeFilter::Scalene, false);
    AntiConwayReport r = anti_conway(t);  // throws if a quadruple is not concyclic
    Rational expected = Rational(4) * t.r_sq();
    Configuration cfg = six_points(t, Triplet{Rational(-1), Rational(-1), Rational(-1)});
    CartPoint nag_cart = cfg.frame.to_cartesian(nagel(t));
    constexpr int quads[3][4] = {{kAPrime, kASecond, kBPrime, kCSecond},
                                 {kBPrime, kBSecond, kCPrime, kASecond},
                                 {kCPrime, kCSecond, kAPrime, kBSecond}};
    for (int k = 0; k < 3 && ok; ++k) {
      if (r.nagel_powers[k] != expected) {
        ok = false;
        detail = "power != 4 r^2";
      }
      std::array<CartPoint, 4> pts{cfg.cart[quads[k][0]], cfg.cart[quads[k][1]],
                                   cfg.cart[quads[k][2]], cfg.cart[quads[k][3]]};
      BruteForceCircle fit = brute_force_circle(pts);
      if (!fit.concyclic || cart_dist_sq(nag_cart, fit.center) - fit.radius_sq != QuadExt(expected)) {
        ok = false;
        detail = "Cartesian power oracle disagrees";
      }
    }
  }
  report("criterion 8: anti-Conway quadruples concyclic; common Nagel power 4r^2 (oracle-derived), "
         "200 scalene trials",
         ok, detail);
  std::printf("       note: the printed constant 8r^2 fails the stated |IP|^2-R^2 oracle on every "
              "instance (e.g. (4,5,6): measured 7, printed 14); see the decisions ledger.\n");
}

// --- criterion 9: the unique congruence --------------------------------------

void criterion_congruence() {
  bool ok = true;
  std::string detail;

  CongruenceResult w456 = congruence(tri(4, 5, 6));
  if (!w456.found || !(*w456.found == Triplet{Rational(1), Rational(-11, 25), Rational(-13, 27)})) {
    ok = false;
    detail = "(4,5,6) witness";
  }
  CongruenceResult w345 = congruence(tri(3, 4, 5));
  if (ok && (!w345.excluded || *w345.excluded != ExclusionReason::PEq2A)) {
    ok = false;
    detail = "(3,4,5) exclusion";
  }
  CongruenceResult w987 = congruence(tri(9, 8, 7));
  if (ok && (!w987.excluded || *w987.excluded != ExclusionReason::PSqEq2AB)) {
    ok = false;
    detail = "(9,8,7) exclusion";
  }

  Rational m1(-1), zero(0);
  for (int i = 0; i < 200 && ok; ++i) {
    Triangle t = sample(1009, i, ShapeFilter::Scalene, true);
    CongruenceResult res = congruence(t);
    if (!res.found) {
      ok = false;
      detail = "non-excluded triangle had no congruence";
      break;
    }
    auto residuals = sigma_residuals(t, *res.found);
    if (!residuals[0].is_zero() || !residuals[1].is_zero() || !residuals[2].is_zero()) {
      ok = false;
      detail = "nonzero system residuals";
      break;
    }
    for (const Rational* comp : {&res.found->alpha, &res.found->beta, &res.found->gamma})
      if (comp->is_zero() || *comp == m1) {
        ok = false;
        detail = "component in {0,-1}";
      }
    auto lines = dussau_lines(t, *res.found);
    Concurrency conc = concurrent(lines[0], lines[1], lines[2]);
    if (conc.kind != Concurrency::Kind::Concurrent || !same_point(*conc.point, nagel(t))) {
      ok = false;
      detail = "lines do not concur at Nagel";
    }
  }
  report("criterion 9: unique congruence with exclusions, witnesses + 200 trials", ok, detail);
}

// --- criterion 10: predicate cross-validation --------------------------------

BaryPoint random_finite_point(Rng& rng) {
  for (;;) {
    long x = rng.range(-6, 6), y = rng.range(-6, 6), z = rng.range(-6, 6);
    if (x == 0 && y == 0 && z == 0) continue;
    if (x + y + z == 0) continue;
    return BaryPoint(Rational(x), Rational(y), Rational(z));
  }
}

void criterion_cross_validation() {
  bool ok = true;
  std::string detail;
  int configs = 0;
  int feuerbach_checked = 0;
  Rng rng(777);
  SampleSpec spec;
  spec.side_max = 9;
  spec.denominator_bound = 3;

  while (configs < 500 && ok) {
    Triangle t = sample_triangle(spec, rng);
    CartesianEmbedding frame = embed(t);
    BaryPoint p1 = random_finite_point(rng);
    BaryPoint p2 = random_finite_point(rng);
    BaryPoint p3 = random_finite_point(rng);
    if (same_point(p1, p2) || same_point(p1, p3) || same_point(p2, p3)) continue;
    BaryCircle circle;
    try {
      circle = circle_through(t, p1, p2, p3);
    } catch (const Error&) {
      continue;
    }

    // Half the configs get the fourth point forced onto the circle: second
    // intersection of the circle with a rational line through p1.
    BaryPoint p4 = p1;
    bool forced = false;
    if (configs % 2 == 0) {
      BaryPoint base = p1.normalized();
      long d1 = rng.range(-4, 4), d2 = rng.range(-4, 4);
      if (d1 == 0 && d2 == 0) continue;
      Rational dir[3] = {Rational(d1), Rational(d2), Rational(-d1 - d2)};
      Rational a_sq = t.a().squared(), b_sq = t.b().squared(), c_sq = t.c().squared();
      Rational quad = a_sq * dir[1] * dir[2] + b_sq * dir[2] * dir[0] + c_sq * dir[0] * dir[1];
      Rational lin = a_sq * (base.y * dir[2] + base.z * dir[1]) + b_sq * (base.z * dir[0] + base.x * dir[2]) +
                     c_sq * (base.x * dir[1] + base.y * dir[0]) + circle.u * dir[0] + circle.v * dir[1] +
                     circle.w * dir[2];
      if (quad.is_zero()) continue;
      Rational s = -(lin / quad);
      if (s.is_zero()) continue;
      Rational x = base.x + dir[0] * s, y = base.y + dir[1] * s, z = base.z + dir[2] * s;
      if ((x.is_zero() && y.is_zero() && z.is_zero()) || (x + y + z).is_zero()) continue;
      p4 = BaryPoint(x, y, z);
      if (same_point(p4, p2) || same_point(p4, p3) || same_point(p4, p1)) continue;
      forced = true;
    } else {
      do {
        p4 = random_finite_point(rng);
      } while (same_point(p4, p1) || same_point(p4, p2) || same_point(p4, p3));
    }

    bool bary_verdict = concyclic(t, p1, p2, p3, p4);
    std::array<CartPoint, 4> cart{frame.to_cartesian(p1), frame.to_cartesian(p2),
                                  frame.to_cartesian(p3), frame.to_cartesian(p4)};
    bool cart_verdict = cart_concyclic(cart);
    BruteForceCircle fit = brute_force_circle(cart);
    bool power_verdict = power_of_point(t, p4, circle).is_zero();
    if (bary_verdict != cart_verdict || bary_verdict != fit.concyclic || bary_verdict != power_verdict) {
      ok = false;
      detail = "backends disagree";
      break;
    }
    if (forced && !bary_verdict) {
      ok = false;
      detail = "forced on-circle point not detected";
      break;
    }
    ++configs;

    // Feuerbach agreement on a pole-and-two-secants configuration.
    if (configs % 5 == 0) {
      BaryPoint pole = random_finite_point(rng);
      long e1 = rng.range(-4, 4), e2 = rng.range(-4, 4);
      long f1 = rng.range(-4, 4), f2 = rng.range(-4, 4);
      if ((e1 == 0 && e2 == 0) || (f1 == 0 && f2 == 0)) continue;
      if (e1 * f2 - e2 * f1 == 0) continue;
      Rational de[3] = {Rational(e1), Rational(e2), Rational(-e1 - e2)};
      Rational df[3] = {Rational(f1), Rational(f2), Rational(-f1 - f2)};
      BaryPoint base = pole.normalized();
      auto offset = [&](const Rational dir[3], const Rational& s) -> std::optional<BaryPoint> {
        Rational x = base.x + dir[0] * s, y = base.y + dir[1] * s, z = base.z + dir[2] * s;
        if (x.is_zero() && y.is_zero() && z.is_zero()) return std::nullopt;
        if ((x + y + z).is_zero()) return std::nullopt;
        return BaryPoint(x, y, z);
      };
      auto d = offset(de, rng.rational(1, 3, 2));
      auto e = offset(de, -rng.rational(1, 3, 2));
      auto m = offset(df, rng.rational(1, 3, 2));
      auto n = offset(df, -rng.rational(1, 3, 2));
      if (!d || !e || !m || !n) continue;
      if (feuerbach_check(t, pole, *d, *e, *m, *n) != concyclic(t, *d, *e, *m, *n)) {
        ok = false;
        detail = "Feuerbach disagrees with concyclic";
        break;
      }
      ++feuerbach_checked;
    }
  }
  if (ok && feuerbach_checked < 80) {
    ok = false;
    detail = "only " + std::to_string(feuerbach_checked) + " Feuerbach configs";
  }
  report("criterion 10: 500 four-point configs, concyclicity backends unanimous + Feuerbach agreement",
         ok, detail);
}

// --- criterion 11: determinism and runtime ------------------------------------

void criterion_determinism() {
  auto start = std::chrono::steady_clock::now();
  const char* argv[] = {"conway", "verify", "--seed", "42", "--count", "200", "--checks", "all"};
  std::ostringstream out1, err1, out2, err2;
  int s1 = cli::run(8, argv, out1, err1);
  int s2 = cli::run(8, argv, out2, err2);
  double elapsed = seconds_since(start);

  bool ok = s1 == 0 && s2 == 0 && out1.str() == out2.str() && !out1.str().empty();
  std::string detail;
  if (!ok) detail = "reports differ or verify failed";
  if (ok && elapsed >= 60.0) {
    ok = false;
    detail = "took " + std::to_string(elapsed) + " s (budget 60 s)";
  }
  report("criterion 11: verify --seed 42 --count 200 --checks all is byte-identical twice, < 60 s",
         ok, detail + (ok ? std::to_string(elapsed) + " s" : ""));
}

}  // namespace

int main() {
  auto start = std::chrono::steady_clock::now();
  criterion_conway();
  criterion_hexagon();
  criterion_family_sufficiency();
  criterion_family_necessity();
  criterion_isosceles_extras();
  criterion_addendum();
  criterion_dussau();
  criterion_anti_conway();
  criterion_congruence();
  criterion_cross_validation();
  criterion_determinism();

  std::printf("%d/11 criteria passed in %.2f s\n", 11 - g_failed, seconds_since(start));
  return g_failed == 0 ? 0 : 1;
}
