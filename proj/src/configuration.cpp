#include "conway/configuration.hpp"

#include "conway/predicates.hpp"

namespace conway {

bool operator==(const Triplet& a, const Triplet& b) {
  return a.alpha == b.alpha && a.beta == b.beta && a.gamma == b.gamma;
}

const char* point_label(int index) {
  switch (index) {
    case kAPrime: return "A'";
    case kASecond: return "A''";
    case kBPrime: return "B'";
    case kBSecond: return "B''";
    case kCPrime: return "C'";
    case kCSecond: return "C''";
  }
  return "?";
}

namespace {

CartPoint along(const CartPoint& from, const CartPoint& to, const Rational& scale) {
  // from + scale * (to - from)
  return {from.x + (to.x - from.x) * scale, from.y + (to.y - from.y) * scale};
}

}  // namespace

Configuration six_points(const Triangle& t, const Triplet& triplet) {
  const Rational& a = t.a();
  const Rational& b = t.b();
  const Rational& c = t.c();
  const Rational& al = triplet.alpha;
  const Rational& be = triplet.beta;
  const Rational& ga = triplet.gamma;

  Configuration cfg{t, triplet, embed(t), {}, {}};
  const Rational zero(0);

  // Homogeneous forms; each coordinate sum is a side length, so none of the
  // six points can land at infinity.
  cfg.bary[kAPrime] = BaryPoint(c + al * a, -(al * a), zero);
  cfg.bary[kASecond] = BaryPoint(b + al * a, zero, -(al * a));
  cfg.bary[kBPrime] = BaryPoint(zero, a + be * b, -(be * b));
  cfg.bary[kBSecond] = BaryPoint(-(be * b), c + be * b, zero);
  cfg.bary[kCPrime] = BaryPoint(-(ga * c), zero, b + ga * c);
  cfg.bary[kCSecond] = BaryPoint(zero, -(ga * c), a + ga * c);

  // Independent Cartesian route, straight from the vector definitions.
  const CartPoint& va = cfg.frame.vertex_a;
  const CartPoint& vb = cfg.frame.vertex_b;
  const CartPoint& vc = cfg.frame.vertex_c;
  cfg.cart[kAPrime] = along(va, vb, -(al * a / c));
  cfg.cart[kASecond] = along(va, vc, -(al * a / b));
  cfg.cart[kBPrime] = along(vb, vc, -(be * b / a));
  cfg.cart[kBSecond] = along(vb, va, -(be * b / c));
  cfg.cart[kCPrime] = along(vc, va, -(ga * c / b));
  cfg.cart[kCSecond] = along(vc, vb, -(ga * c / a));

  return cfg;
}

HexagonMetrics hexagon_metrics(const Configuration& cfg) {
  const Triangle& t = cfg.triangle;
  auto dist = [&](int i, int j) { return bary_dist_sq(t, cfg.bary[i], cfg.bary[j]); };

  HexagonMetrics m;
  m.diag_main_sq = {dist(kAPrime, kBSecond), dist(kASecond, kCPrime), dist(kBPrime, kCSecond)};
  m.diag_pairs_sq = {std::pair{dist(kAPrime, kCPrime), dist(kASecond, kBSecond)},
                     std::pair{dist(kAPrime, kBPrime), dist(kBSecond, kCSecond)},
                     std::pair{dist(kBPrime, kCPrime), dist(kASecond, kCSecond)}};

  // Hexagon side order A'A'', A''B', B'B'', B''C', C'C'', C''A'; opposite
  // pairs are three apart. Parallelism is an exact cross-product test on
  // Cartesian directions.
  constexpr int side[6][2] = {{kAPrime, kASecond}, {kASecond, kBPrime}, {kBPrime, kBSecond},
                              {kBSecond, kCPrime}, {kCPrime, kCSecond}, {kCSecond, kAPrime}};
  for (int k = 0; k < 3; ++k) {
    const CartPoint& p1 = cfg.cart[side[k][0]];
    const CartPoint& p2 = cfg.cart[side[k][1]];
    const CartPoint& q1 = cfg.cart[side[k + 3][0]];
    const CartPoint& q2 = cfg.cart[side[k + 3][1]];
    QuadExt cross = (p2.x - p1.x) * (q2.y - q1.y) - (p2.y - p1.y) * (q2.x - q1.x);
    m.opposite_sides_parallel[k] = cross.is_zero();
  }
  return m;
}

}  // namespace conway
