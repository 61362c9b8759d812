#include "conway/theorems.hpp"

#include <algorithm>

namespace conway {

namespace {

void require_scalene(const Triangle& t, const char* what) {
  if (classify(t) != Shape::Scalene)
    throw Error(ErrorCode::NotScalene, std::string(what) + " requires a scalene triangle");
}

bool quad_distinct(const BaryPoint& p1, const BaryPoint& p2, const BaryPoint& p3, const BaryPoint& p4) {
  const BaryPoint* pts[4] = {&p1, &p2, &p3, &p4};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (same_point(*pts[i], *pts[j])) return false;
  return true;
}

}  // namespace

const char* apex_name(Apex apex) {
  switch (apex) {
    case Apex::A: return "A";
    case Apex::B: return "B";
    case Apex::C: return "C";
  }
  return "?";
}

ConwayCircle conway_circle(const Triangle& t) {
  return ConwayCircle{incenter(t), t.r_sq() + t.p().squared()};
}

Triplet family_triplet(const Triangle& t, const Rational& alpha) {
  Rational shift = alpha - Rational(1);
  return Triplet{alpha, Rational(1) + shift * t.a() / t.b(), Rational(1) + shift * t.a() / t.c()};
}

Rational family_radius_sq(const Triangle& t, const Rational& alpha) {
  Rational half_chord = t.p() + (alpha - Rational(1)) * t.a();
  return half_chord.squared() + t.r_sq();
}

Rational inscribed_alpha(const Triangle& t) {
  return Rational(1) - t.p() / t.a();
}

Membership classify_triplet(const Triangle& t, const Triplet& triplet) {
  Triplet member = family_triplet(t, triplet.alpha);
  if (triplet.beta == member.beta && triplet.gamma == member.gamma) {
    Membership m;
    m.tag = Membership::Tag::InFamilyT;
    m.alpha = triplet.alpha;
    return m;
  }

  Shape shape = classify(t);
  bool equilateral = shape == Shape::Equilateral;
  const Rational zero(0);

  auto extra = [&](Apex apex) {
    Membership m;
    m.tag = Membership::Tag::IsoscelesExtra;
    m.apex = apex;
    return m;
  };
  if ((shape == Shape::IsoscelesApexC || equilateral) &&
      triplet == Triplet{zero, zero, -(t.a() / t.c())})
    return extra(Apex::C);
  if ((shape == Shape::IsoscelesApexB || equilateral) &&
      triplet == Triplet{zero, -(t.c() / t.b()), zero})
    return extra(Apex::B);
  if ((shape == Shape::IsoscelesApexA || equilateral) &&
      triplet == Triplet{-(t.b() / t.a()), zero, zero})
    return extra(Apex::A);

  return Membership{};
}

FamilyVerdict verify_family(const Triangle& t, const Triplet& triplet) {
  Configuration cfg = six_points(t, triplet);
  Membership membership = classify_triplet(t, triplet);
  Equidistance eq = equidistant_from(t, incenter(t), cfg.bary);

  FamilyVerdict verdict;
  verdict.cocyclic = eq.equal;
  verdict.membership = membership;
  if (eq.equal) verdict.radius_sq = eq.common_sq;

  verdict.ok = (eq.equal == membership.is_solution());
  if (verdict.ok && membership.is_solution()) {
    verdict.ok = eq.common_sq == family_radius_sq(t, triplet.alpha);

    ContactPoints cp = contact_points(t);
    const BaryPoint quads[3][4] = {
        {cp.u, cp.w, cfg.bary[kAPrime], cfg.bary[kASecond]},
        {cp.u, cp.v, cfg.bary[kBPrime], cfg.bary[kBSecond]},
        {cp.v, cp.w, cfg.bary[kCPrime], cfg.bary[kCSecond]},
    };
    for (const auto& q : quads) {
      if (!quad_distinct(q[0], q[1], q[2], q[3])) continue;
      if (!concyclic(t, q[0], q[1], q[2], q[3])) {
        verdict.ok = false;
        break;
      }
    }
  }
  return verdict;
}

std::array<BaryLine, 3> dussau_lines(const Triangle& t, const Triplet& triplet) {
  const Rational& a = t.a();
  const Rational& b = t.b();
  const Rational& c = t.c();
  Rational aa = triplet.alpha * a;
  Rational bb = triplet.beta * b;
  Rational cc = triplet.gamma * c;

  // Closed forms of (A'C''), (B'A''), (C'B''); each reduces to the cross
  // product of the corresponding homogeneous point pair.
  BaryLine l1{-(aa * (a + cc)), -((c + aa) * (a + cc)), -(cc * (c + aa))};
  BaryLine l2{-(aa * (a + bb)), -(bb * (b + aa)), -((a + bb) * (b + aa))};
  BaryLine l3{-((b + cc) * (c + bb)), -(bb * (b + cc)), -(cc * (c + bb))};

  auto degenerate = [](const BaryLine& l) { return l.l.is_zero() && l.m.is_zero() && l.n.is_zero(); };
  if (degenerate(l1))
    throw Error(ErrorCode::CoincidentDefiningPoints, "A' and C'' coincide; line (A'C'') undefined");
  if (degenerate(l2))
    throw Error(ErrorCode::CoincidentDefiningPoints, "B' and A'' coincide; line (B'A'') undefined");
  if (degenerate(l3))
    throw Error(ErrorCode::CoincidentDefiningPoints, "C' and B'' coincide; line (C'B'') undefined");
  return {l1, l2, l3};
}

BaryPoint dussau_point(const Triangle& t) {
  require_scalene(t, "dussau_point");
  Rational minus_one(-1);
  auto lines = dussau_lines(t, Triplet{minus_one, minus_one, minus_one});
  Concurrency res = concurrent(lines[0], lines[1], lines[2]);
  if (res.kind != Concurrency::Kind::Concurrent || !same_point(*res.point, nagel(t)))
    throw Error(ErrorCode::VerificationFailed, "(-1,-1,-1) lines do not concur at the Nagel point");
  return *res.point;
}

AntiConwayReport anti_conway(const Triangle& t) {
  require_scalene(t, "anti_conway");
  Rational minus_one(-1);
  Configuration cfg = six_points(t, Triplet{minus_one, minus_one, minus_one});
  BaryPoint nagel_pt = nagel(t);

  constexpr int quads[3][4] = {
      {kAPrime, kASecond, kBPrime, kCSecond},
      {kBPrime, kBSecond, kCPrime, kASecond},
      {kCPrime, kCSecond, kAPrime, kBSecond},
  };

  AntiConwayReport report;
  // Common power of the Nagel point along each secant: IA'.IC'' expands to
  // 4(p-a)(p-b)(p-c)/p = 4 r^2.
  report.expected_power = Rational(4) * t.r_sq();
  for (int k = 0; k < 3; ++k) {
    const BaryPoint& p1 = cfg.bary[quads[k][0]];
    const BaryPoint& p2 = cfg.bary[quads[k][1]];
    const BaryPoint& p3 = cfg.bary[quads[k][2]];
    const BaryPoint& p4 = cfg.bary[quads[k][3]];
    BaryCircle circle = circle_through(t, p1, p2, p3);
    if (!power_of_point(t, p4, circle).is_zero())
      throw Error(ErrorCode::VerificationFailed, "anti-Conway quadruple is not concyclic");
    report.circles[k] = circle;
    report.nagel_powers[k] = power_of_point(t, nagel_pt, circle);
    if (report.nagel_powers[k] != report.expected_power)
      throw Error(ErrorCode::VerificationFailed, "Nagel power differs from 4 r^2");
  }
  return report;
}

const char* exclusion_name(ExclusionReason reason) {
  switch (reason) {
    case ExclusionReason::PEq2A: return "p=2a";
    case ExclusionReason::PEq2B: return "p=2b";
    case ExclusionReason::PEq2C: return "p=2c";
    case ExclusionReason::PSqEq2BC: return "p^2=2bc";
    case ExclusionReason::PSqEq2CA: return "p^2=2ca";
    case ExclusionReason::PSqEq2AB: return "p^2=2ab";
  }
  return "?";
}

CongruenceResult congruence(const Triangle& t) {
  require_scalene(t, "congruence");
  const Rational& a = t.a();
  const Rational& b = t.b();
  const Rational& c = t.c();
  const Rational& p = t.p();
  Rational two(2);
  Rational p_sq = p.squared();

  CongruenceResult result;
  if (p == two * a) { result.excluded = ExclusionReason::PEq2A; return result; }
  if (p == two * b) { result.excluded = ExclusionReason::PEq2B; return result; }
  if (p == two * c) { result.excluded = ExclusionReason::PEq2C; return result; }
  if (p_sq == two * b * c) { result.excluded = ExclusionReason::PSqEq2BC; return result; }
  if (p_sq == two * c * a) { result.excluded = ExclusionReason::PSqEq2CA; return result; }
  if (p_sq == two * a * b) { result.excluded = ExclusionReason::PSqEq2AB; return result; }

  Triplet found{(p_sq - two * b * c) / (p * (p - two * a)),
                (p_sq - two * c * a) / (p * (p - two * b)),
                (p_sq - two * a * b) / (p * (p - two * c))};

  auto residuals = sigma_residuals(t, found);
  if (!residuals[0].is_zero() || !residuals[1].is_zero() || !residuals[2].is_zero())
    throw Error(ErrorCode::VerificationFailed, "congruence triplet does not solve the system");
  Rational minus_one(-1);
  for (const Rational* comp : {&found.alpha, &found.beta, &found.gamma})
    if (comp->is_zero() || *comp == minus_one)
      throw Error(ErrorCode::VerificationFailed, "congruence component in {0, -1}");

  auto lines = dussau_lines(t, found);
  Concurrency res = concurrent(lines[0], lines[1], lines[2]);
  if (res.kind != Concurrency::Kind::Concurrent || !same_point(*res.point, nagel(t)))
    throw Error(ErrorCode::VerificationFailed, "congruence lines do not concur at the Nagel point");

  result.found = found;
  return result;
}

std::array<Rational, 3> sigma_residuals(const Triangle& t, const Triplet& triplet) {
  const Rational& a = t.a();
  const Rational& b = t.b();
  const Rational& c = t.c();
  const Rational& p = t.p();
  const Rational& al = triplet.alpha;
  const Rational& be = triplet.beta;
  const Rational& ga = triplet.gamma;
  return {a * al + c * ga + p * al * ga - (b - p),
          a * al + b * be + p * al * be - (c - p),
          b * be + c * ga + p * be * ga - (a - p)};
}

GammaQuadratic e3prime_roots(const Triangle& t) {
  const Rational& a = t.a();
  const Rational& b = t.b();
  const Rational& c = t.c();
  const Rational& p = t.p();
  Rational two(2);

  GammaQuadratic q;
  q.c2 = p * (two * c - p);
  q.c1 = -(two * (a * b - p * c));
  q.c0 = p.squared() - two * a * b;

  if (q.c2.is_zero()) {
    // p = 2c: degree drops to 1. The linear coefficient cannot vanish too
    // (that would force {a,b} = {c,2c}, a degenerate triangle).
    q.degree = 1;
    q.roots = {-(q.c0 / q.c1)};
    return q;
  }
  q.degree = 2;
  Rational root1(-1);
  Rational root2 = (q.c0 / q.c2) / root1;  // product of roots = c0/c2
  q.roots = {root1, root2};
  if (root2 == root1) q.roots.pop_back();
  return q;
}

std::vector<Triplet> sigma_solutions(const Triangle& t) {
  require_scalene(t, "sigma_solutions");
  const Rational& a = t.a();
  const Rational& b = t.b();
  const Rational& c = t.c();
  const Rational& p = t.p();

  // Candidate gammas: roots of the eliminant quadratic, plus the two values
  // for which the elimination divides by zero.
  std::vector<Rational> candidates = e3prime_roots(t).roots;
  for (const Rational& special : {-(a / p), -(b / p)})
    if (std::find(candidates.begin(), candidates.end(), special) == candidates.end())
      candidates.push_back(special);

  std::vector<Triplet> solutions;
  auto push_solution = [&](const Triplet& s) {
    auto res = sigma_residuals(t, s);
    if (!res[0].is_zero() || !res[1].is_zero() || !res[2].is_zero()) return;
    for (const Triplet& seen : solutions)
      if (seen == s) return;
    solutions.push_back(s);
  };

  for (const Rational& ga : candidates) {
    Rational e1_lhs = a + p * ga;   // alpha * e1_lhs = e1_rhs
    Rational e1_rhs = b - p - c * ga;
    Rational e2_lhs = b + p * ga;   // beta * e2_lhs = e2_rhs
    Rational e2_rhs = a - p - c * ga;

    if (!e1_lhs.is_zero() && !e2_lhs.is_zero()) {
      push_solution(Triplet{e1_rhs / e1_lhs, e2_rhs / e2_lhs, ga});
      continue;
    }

    // One of the leading factors vanishes. Both cannot: that would force
    // a = b. Solve the surviving linear equation and feed the third.
    if (e1_lhs.is_zero()) {
      if (!e1_rhs.is_zero()) continue;  // alpha * 0 = nonzero: no solution
      Rational be = e2_rhs / e2_lhs;
      // Third equation: alpha (a + p beta) = c - p - b beta.
      Rational lhs = a + p * be;
      Rational rhs = c - p - b * be;
      if (!lhs.is_zero()) push_solution(Triplet{rhs / lhs, be, ga});
      // lhs = 0 with rhs = 0 would admit every alpha; the system's geometry
      // rules it out, and push_solution would reject spurious candidates.
    } else {
      if (!e2_rhs.is_zero()) continue;
      Rational al = e1_rhs / e1_lhs;
      // Third equation: beta (b + p alpha) = c - p - a alpha.
      Rational lhs = b + p * al;
      Rational rhs = c - p - a * al;
      if (!lhs.is_zero()) push_solution(Triplet{al, rhs / lhs, ga});
    }
  }
  return solutions;
}

}  // namespace conway
