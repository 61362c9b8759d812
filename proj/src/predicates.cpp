#include "conway/predicates.hpp"

namespace conway {

namespace {

Rational det3(const Rational& a11, const Rational& a12, const Rational& a13,
              const Rational& a21, const Rational& a22, const Rational& a23,
              const Rational& a31, const Rational& a32, const Rational& a33) {
  return a11 * (a22 * a33 - a23 * a32) - a12 * (a21 * a33 - a23 * a31) + a13 * (a21 * a32 - a22 * a31);
}

// a^2 yz + b^2 zx + c^2 xy on raw homogeneous coordinates.
Rational circum_form(const Triangle& t, const BaryPoint& p) {
  return t.a().squared() * p.y * p.z + t.b().squared() * p.z * p.x + t.c().squared() * p.x * p.y;
}

void require_finite(const BaryPoint& p, const char* what) {
  if (!p.is_finite())
    throw Error(ErrorCode::PointAtInfinity, std::string(what) + " has coordinate sum zero");
}

}  // namespace

bool same_line(const BaryLine& a, const BaryLine& b) {
  return (a.m * b.n - a.n * b.m).is_zero() && (a.n * b.l - a.l * b.n).is_zero() &&
         (a.l * b.m - a.m * b.l).is_zero();
}

Rational bary_dist_sq(const Triangle& t, const BaryPoint& p, const BaryPoint& q) {
  BaryPoint pn = p.normalized();
  BaryPoint qn = q.normalized();
  Rational dx = pn.x - qn.x;
  Rational dy = pn.y - qn.y;
  Rational dz = pn.z - qn.z;
  // Standard displacement form for dx+dy+dz = 0.
  return -(t.a().squared() * dy * dz) - (t.b().squared() * dz * dx) - (t.c().squared() * dx * dy);
}

BaryLine line_through(const BaryPoint& p, const BaryPoint& q) {
  if (same_point(p, q))
    throw Error(ErrorCode::IdenticalPoints, "no unique line through a point and itself");
  return BaryLine{p.y * q.z - p.z * q.y, p.z * q.x - p.x * q.z, p.x * q.y - p.y * q.x};
}

Concurrency concurrent(const BaryLine& l1, const BaryLine& l2, const BaryLine& l3) {
  const BaryLine* lines[3] = {&l1, &l2, &l3};

  // Find a pair of genuinely distinct lines.
  int i = -1, j = -1;
  for (int s = 0; s < 3 && i < 0; ++s)
    for (int u = s + 1; u < 3 && i < 0; ++u)
      if (!same_line(*lines[s], *lines[u])) {
        i = s;
        j = u;
      }
  if (i < 0) return {Concurrency::Kind::AllIdentical, std::nullopt};

  Rational det = det3(l1.l, l1.m, l1.n, l2.l, l2.m, l2.n, l3.l, l3.m, l3.n);
  if (!det.is_zero()) return {Concurrency::Kind::NotConcurrent, std::nullopt};

  const BaryLine& p = *lines[i];
  const BaryLine& q = *lines[j];
  Rational x = p.m * q.n - p.n * q.m;
  Rational y = p.n * q.l - p.l * q.n;
  Rational z = p.l * q.m - p.m * q.l;
  BaryPoint common(x, y, z);
  if (!common.is_finite())
    throw Error(ErrorCode::ParallelLines, "lines meet at infinity");
  return {Concurrency::Kind::Concurrent, common};
}

bool concyclic(const Triangle& t, const BaryPoint& p1, const BaryPoint& p2, const BaryPoint& p3,
               const BaryPoint& p4) {
  const BaryPoint* pts[4] = {&p1, &p2, &p3, &p4};
  for (int k = 0; k < 4; ++k) {
    require_finite(*pts[k], "concyclic input");
    for (int l = k + 1; l < 4; ++l)
      if (same_point(*pts[k], *pts[l]))
        throw Error(ErrorCode::DuplicatePoint, "concyclic requires pairwise distinct points");
  }

  // Rows [q_i, x_i s_i, y_i s_i, z_i s_i]; the determinant vanishes iff a
  // (1, u, v, w) kernel vector exists, i.e. a common circle.
  Rational row[4][4];
  for (int k = 0; k < 4; ++k) {
    const BaryPoint& p = *pts[k];
    Rational s = p.sum();
    row[k][0] = circum_form(t, p);
    row[k][1] = p.x * s;
    row[k][2] = p.y * s;
    row[k][3] = p.z * s;
  }
  Rational det(0);
  for (int k = 0; k < 4; ++k) {
    int r[3], idx = 0;
    for (int l = 0; l < 4; ++l)
      if (l != k) r[idx++] = l;
    Rational minor = det3(row[r[0]][1], row[r[0]][2], row[r[0]][3],
                          row[r[1]][1], row[r[1]][2], row[r[1]][3],
                          row[r[2]][1], row[r[2]][2], row[r[2]][3]);
    Rational term = row[k][0] * minor;
    det += (k % 2 == 0) ? term : -term;
  }
  return det.is_zero();
}

BaryCircle circle_through(const Triangle& t, const BaryPoint& p1, const BaryPoint& p2, const BaryPoint& p3) {
  const BaryPoint* pts[3] = {&p1, &p2, &p3};
  for (int k = 0; k < 3; ++k) {
    require_finite(*pts[k], "circle_through input");
    for (int l = k + 1; l < 3; ++l)
      if (same_point(*pts[k], *pts[l]))
        throw Error(ErrorCode::DuplicatePoint, "circle_through requires distinct points");
  }

  // With normalized points, u x + v y + w z = -q(x,y,z) for each of the three.
  BaryPoint n1 = p1.normalized(), n2 = p2.normalized(), n3 = p3.normalized();
  Rational q1 = -circum_form(t, n1);
  Rational q2 = -circum_form(t, n2);
  Rational q3 = -circum_form(t, n3);

  Rational det = det3(n1.x, n1.y, n1.z, n2.x, n2.y, n2.z, n3.x, n3.y, n3.z);
  if (det.is_zero())
    throw Error(ErrorCode::CollinearPoints, "no circle through collinear points");

  Rational u = det3(q1, n1.y, n1.z, q2, n2.y, n2.z, q3, n3.y, n3.z) / det;
  Rational v = det3(n1.x, q1, n1.z, n2.x, q2, n2.z, n3.x, q3, n3.z) / det;
  Rational w = det3(n1.x, n1.y, q1, n2.x, n2.y, q2, n3.x, n3.y, q3) / det;
  return BaryCircle{u, v, w};
}

Rational power_of_point(const Triangle& t, const BaryPoint& p, const BaryCircle& circle) {
  require_finite(p, "power_of_point input");
  BaryPoint n = p.normalized();
  Rational q = circum_form(t, n);
  Rational linear = circle.u * n.x + circle.v * n.y + circle.w * n.z;
  // The conic form evaluates to R^2 - d^2 at a normalized point.
  return -(q + linear);
}

Rational secant_product(const Triangle& t, const BaryPoint& p, const BaryPoint& d, const BaryPoint& e) {
  BaryPoint pn = p.normalized();
  BaryPoint dn = d.normalized();
  BaryPoint en = e.normalized();
  Rational dd[3] = {dn.x - pn.x, dn.y - pn.y, dn.z - pn.z};
  Rational de[3] = {en.x - pn.x, en.y - pn.y, en.z - pn.z};

  bool d_zero = dd[0].is_zero() && dd[1].is_zero() && dd[2].is_zero();
  bool e_zero = de[0].is_zero() && de[1].is_zero() && de[2].is_zero();
  if (d_zero || e_zero) return Rational(0);

  // PE = ratio * PD componentwise (the points are collinear with P).
  int k = !dd[0].is_zero() ? 0 : (!dd[1].is_zero() ? 1 : 2);
  Rational ratio = de[k] / dd[k];
  for (int i = 0; i < 3; ++i)
    if (de[i] != ratio * dd[i])
      throw Error(ErrorCode::PreconditionViolated, "secant endpoints are not collinear with the pole");

  return ratio * bary_dist_sq(t, p, d);
}

bool feuerbach_check(const Triangle& t, const BaryPoint& p, const BaryPoint& d, const BaryPoint& e,
                     const BaryPoint& m, const BaryPoint& n) {
  auto collinear = [](const BaryPoint& r1, const BaryPoint& r2, const BaryPoint& r3) {
    return det3(r1.x, r1.y, r1.z, r2.x, r2.y, r2.z, r3.x, r3.y, r3.z).is_zero();
  };
  if (!collinear(p, d, e) || !collinear(p, m, n))
    throw Error(ErrorCode::PreconditionViolated, "Feuerbach criterion needs P,D,E and P,M,N collinear");
  if (same_point(d, e) || same_point(m, n))
    throw Error(ErrorCode::PreconditionViolated, "Feuerbach criterion needs D != E and M != N");

  return secant_product(t, p, d, e) == secant_product(t, p, m, n);
}

Equidistance equidistant_from(const Triangle& t, const BaryPoint& center, std::span<const BaryPoint> points) {
  require_finite(center, "equidistant_from center");
  Equidistance result{true, Rational(0), 0};
  bool first = true;
  for (std::size_t i = 0; i < points.size(); ++i) {
    require_finite(points[i], "equidistant_from point");
    Rational d = bary_dist_sq(t, center, points[i]);
    if (first) {
      result.common_sq = d;
      first = false;
    } else if (d != result.common_sq) {
      return Equidistance{false, Rational(0), i};
    }
  }
  return result;
}

// ---------------------------------------------------------------------------

QuadExt cart_dist_sq(const CartPoint& p, const CartPoint& q) {
  QuadExt dx = p.x - q.x;
  QuadExt dy = p.y - q.y;
  return dx * dx + dy * dy;
}

bool cart_collinear(const CartPoint& p, const CartPoint& q, const CartPoint& r) {
  QuadExt cross = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
  return cross.is_zero();
}

bool cart_concyclic(const std::array<CartPoint, 4>& pts) {
  if (cart_collinear(pts[0], pts[1], pts[2]) && cart_collinear(pts[0], pts[1], pts[3]) &&
      cart_collinear(pts[0], pts[2], pts[3]))
    return false;  // four on a line: the vanishing determinant is not a circle

  // Subtract the last row to reduce |x y x^2+y^2 1| to a 3x3 determinant.
  QuadExt row[3][3];
  for (int k = 0; k < 3; ++k) {
    QuadExt dx = pts[k].x - pts[3].x;
    QuadExt dy = pts[k].y - pts[3].y;
    QuadExt dsq = (pts[k].x * pts[k].x + pts[k].y * pts[k].y) - (pts[3].x * pts[3].x + pts[3].y * pts[3].y);
    row[k][0] = dx;
    row[k][1] = dy;
    row[k][2] = dsq;
  }
  QuadExt det = row[0][0] * (row[1][1] * row[2][2] - row[1][2] * row[2][1]) -
                row[0][1] * (row[1][0] * row[2][2] - row[1][2] * row[2][0]) +
                row[0][2] * (row[1][0] * row[2][1] - row[1][1] * row[2][0]);
  return det.is_zero();
}

std::optional<CartPoint> cart_line_intersection(const CartPoint& p1, const CartPoint& p2,
                                                const CartPoint& q1, const CartPoint& q2) {
  QuadExt r_x = p2.x - p1.x, r_y = p2.y - p1.y;
  QuadExt s_x = q2.x - q1.x, s_y = q2.y - q1.y;
  QuadExt denom = r_x * s_y - r_y * s_x;
  if (denom.is_zero()) return std::nullopt;
  QuadExt t_num = (q1.x - p1.x) * s_y - (q1.y - p1.y) * s_x;
  QuadExt t = t_num / denom;
  return CartPoint{p1.x + r_x * t, p1.y + r_y * t};
}

CartPoint cart_foot_of_perpendicular(const CartPoint& x, const CartPoint& p, const CartPoint& q) {
  QuadExt dx = q.x - p.x, dy = q.y - p.y;
  QuadExt len_sq = dx * dx + dy * dy;
  if (len_sq.is_zero())
    throw Error(ErrorCode::IdenticalPoints, "line endpoints coincide");
  QuadExt t = ((x.x - p.x) * dx + (x.y - p.y) * dy) / len_sq;
  return {p.x + dx * t, p.y + dy * t};
}

QuadExt cart_line_dist_sq(const CartPoint& x, const CartPoint& p, const CartPoint& q) {
  QuadExt dx = q.x - p.x, dy = q.y - p.y;
  QuadExt len_sq = dx * dx + dy * dy;
  if (len_sq.is_zero())
    throw Error(ErrorCode::IdenticalPoints, "line endpoints coincide");
  QuadExt cross = dx * (x.y - p.y) - dy * (x.x - p.x);
  return cross * cross / len_sq;
}

}  // namespace conway
