#include "conway/triangle.hpp"

#include <ostream>

namespace conway {

BaryPoint::BaryPoint(Rational px, Rational py, Rational pz) : x(std::move(px)), y(std::move(py)), z(std::move(pz)) {
  if (x.is_zero() && y.is_zero() && z.is_zero())
    throw Error(ErrorCode::DegenerateBarycentric, "homogeneous triple (0,0,0)");
}

BaryPoint BaryPoint::normalized() const {
  Rational s = sum();
  if (s.is_zero())
    throw Error(ErrorCode::PointAtInfinity, "coordinate sum is zero: (" + x.str() + ":" + y.str() + ":" + z.str() + ")");
  return BaryPoint(x / s, y / s, z / s);
}

bool same_point(const BaryPoint& p, const BaryPoint& q) {
  return (p.y * q.z - p.z * q.y).is_zero() && (p.z * q.x - p.x * q.z).is_zero() &&
         (p.x * q.y - p.y * q.x).is_zero();
}

std::ostream& operator<<(std::ostream& os, const BaryPoint& p) {
  return os << "(" << p.x << " : " << p.y << " : " << p.z << ")";
}

const char* shape_name(Shape s) {
  switch (s) {
    case Shape::Scalene: return "scalene";
    case Shape::IsoscelesApexA: return "isosceles_apex_a";
    case Shape::IsoscelesApexB: return "isosceles_apex_b";
    case Shape::IsoscelesApexC: return "isosceles_apex_c";
    case Shape::Equilateral: return "equilateral";
  }
  return "?";
}

bool operator==(const CartPoint& a, const CartPoint& b) {
  return a.x == b.x && a.y == b.y;
}

Triangle::Triangle(Rational a, Rational b, Rational c)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), p_((a_ + b_ + c_) / Rational(2)) {
  area_sq16_ = Rational(16) * p_ * (p_ - a_) * (p_ - b_) * (p_ - c_);
  r_sq_ = (p_ - a_) * (p_ - b_) * (p_ - c_) / p_;
}

Triangle Triangle::from_sides(const Rational& a, const Rational& b, const Rational& c) {
  if (a.sign() <= 0 || b.sign() <= 0 || c.sign() <= 0)
    throw Error(ErrorCode::NonPositiveSide,
                "sides must be positive: (" + a.str() + ", " + b.str() + ", " + c.str() + ")");
  if (a >= b + c || b >= a + c || c >= a + b)
    throw Error(ErrorCode::TriangleInequalityViolated,
                "degenerate triangle: (" + a.str() + ", " + b.str() + ", " + c.str() + ")");
  return Triangle(a, b, c);
}

Triangle Triangle::from_vertices(const CartPoint& a_vertex, const CartPoint& b_vertex, const CartPoint& c_vertex) {
  auto side = [](const CartPoint& p, const CartPoint& q, const char* name) {
    QuadExt dx = p.x - q.x;
    QuadExt dy = p.y - q.y;
    QuadExt sq = dx * dx + dy * dy;
    Rational root;
    if (!sq.is_rational() || !sq.u().is_perfect_square(&root))
      throw Error(ErrorCode::IrrationalSideLength,
                  std::string("squared length of ") + name + " is not the square of a rational: " + sq.str());
    return root;
  };
  Rational a = side(b_vertex, c_vertex, "BC");
  Rational b = side(a_vertex, c_vertex, "AC");
  Rational c = side(a_vertex, b_vertex, "AB");
  return from_sides(a, b, c);
}

Shape classify(const Triangle& t) {
  bool ab = t.a() == t.b();
  bool ac = t.a() == t.c();
  bool bc = t.b() == t.c();
  if (ab && ac) return Shape::Equilateral;
  if (ab) return Shape::IsoscelesApexC;
  if (ac) return Shape::IsoscelesApexB;
  if (bc) return Shape::IsoscelesApexA;
  return Shape::Scalene;
}

CartesianEmbedding embed(const Triangle& t) {
  Rational disc = t.area_sq16() / (Rational(4) * t.c().squared());
  Rational xc = (t.b().squared() + t.c().squared() - t.a().squared()) / (Rational(2) * t.c());
  CartesianEmbedding e;
  e.disc = disc;
  e.vertex_a = {QuadExt::rational_in(Rational(0), disc), QuadExt::rational_in(Rational(0), disc)};
  e.vertex_b = {QuadExt::rational_in(t.c(), disc), QuadExt::rational_in(Rational(0), disc)};
  e.vertex_c = {QuadExt::rational_in(xc, disc), QuadExt::sqrt_of(disc)};
  return e;
}

CartPoint CartesianEmbedding::to_cartesian(const BaryPoint& p) const {
  BaryPoint n = p.normalized();
  QuadExt x = vertex_a.x * n.x + vertex_b.x * n.y + vertex_c.x * n.z;
  QuadExt y = vertex_a.y * n.x + vertex_b.y * n.y + vertex_c.y * n.z;
  return {x, y};
}

BaryPoint incenter(const Triangle& t) {
  return BaryPoint(t.a(), t.b(), t.c());
}

BaryPoint nagel(const Triangle& t) {
  return BaryPoint(-t.a() + t.b() + t.c(), t.a() - t.b() + t.c(), t.a() + t.b() - t.c());
}

ContactPoints contact_points(const Triangle& t) {
  Rational pa = t.p() - t.a();
  Rational pb = t.p() - t.b();
  Rational pc = t.p() - t.c();
  ContactPoints cp;
  cp.u = BaryPoint(pb, pa, Rational(0));  // on [AB], AU = p-a
  cp.v = BaryPoint(Rational(0), pc, pb);  // on [BC], BV = p-b
  cp.w = BaryPoint(pc, Rational(0), pa);  // on [CA], CW = p-c
  return cp;
}

}  // namespace conway
