#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "conway/oracle.hpp"
#include "conway/predicates.hpp"
#include "conway/triangle.hpp"

using namespace conway;

namespace {

// Independent Heron oracle: 16 A^2 = (a+b+c)(-a+b+c)(a-b+c)(a+b-c).
Rational heron16(const Rational& a, const Rational& b, const Rational& c) {
  return (a + b + c) * (-a + b + c) * (a - b + c) * (a + b - c);
}

Triangle tri(long a, long b, long c) {
  return Triangle::from_sides(Rational(a), Rational(b), Rational(c));
}

Triangle random_triangle(Rng& rng) {
  SampleSpec spec;
  spec.side_min = 1;
  spec.side_max = 12;
  spec.denominator_bound = 5;
  return sample_triangle(spec, rng);
}

}  // namespace

TEST_CASE("triangle_from_sides derived quantities") {
  Triangle t345 = tri(3, 4, 5);
  CHECK(t345.p() == Rational(6));
  CHECK(t345.area_sq16() == Rational(576));  // area 6
  CHECK(t345.area_sq16() == heron16(Rational(3), Rational(4), Rational(5)));
  CHECK(t345.r_sq() == Rational(1));

  Triangle t222 = tri(2, 2, 2);
  CHECK(t222.p() == Rational(3));
  CHECK(t222.area_sq16() == Rational(48));  // area sqrt(3)
  CHECK(t222.area_sq16() == heron16(Rational(2), Rational(2), Rational(2)));
  CHECK(t222.r_sq() == Rational(1, 3));

  CHECK_THROWS_AS(tri(1, 1, 2), Error);   // degenerate
  CHECK_THROWS_AS(tri(1, 1, 3), Error);
  CHECK_THROWS_AS(tri(0, 1, 1), Error);   // nonpositive
  CHECK_THROWS_AS(tri(-2, 3, 4), Error);

  // Heron consistency: p r^2 = (p-a)(p-b)(p-c).
  Rng rng(11);
  for (int i = 0; i < 100; ++i) {
    Triangle t = random_triangle(rng);
    CHECK(t.p() * t.r_sq() == (t.p() - t.a()) * (t.p() - t.b()) * (t.p() - t.c()));
    CHECK(t.area_sq16() == heron16(t.a(), t.b(), t.c()));
  }
}

TEST_CASE("classify") {
  CHECK(classify(tri(4, 5, 6)) == Shape::Scalene);
  CHECK(classify(tri(3, 3, 4)) == Shape::IsoscelesApexC);
  CHECK(classify(tri(3, 4, 3)) == Shape::IsoscelesApexB);
  CHECK(classify(tri(4, 3, 3)) == Shape::IsoscelesApexA);
  CHECK(classify(tri(2, 2, 2)) == Shape::Equilateral);
}

TEST_CASE("embed canonical placement") {
  Triangle t = tri(3, 4, 5);
  CartesianEmbedding e = embed(t);
  CHECK(e.vertex_a.x.is_zero());
  CHECK(e.vertex_a.y.is_zero());
  CHECK(e.vertex_b.x == QuadExt(Rational(5)));
  CHECK(e.vertex_b.y.is_zero());
  CHECK(e.vertex_c.x == QuadExt(Rational(16, 5)));
  CHECK(e.disc == Rational(144, 25));
  // Perfect-square discriminant collapses y_C to the rational 12/5.
  CHECK(e.vertex_c.y.is_rational());
  CHECK(e.vertex_c.y == QuadExt(Rational(12, 5)));

  Triangle eq = tri(2, 2, 2);
  CartesianEmbedding ee = embed(eq);
  CHECK(ee.vertex_c.x == QuadExt(Rational(1)));
  CHECK(ee.disc == Rational(3));
  CHECK_FALSE(ee.vertex_c.y.is_rational());

  Triangle t456 = tri(4, 5, 6);
  CartesianEmbedding e456 = embed(t456);
  CHECK(e456.vertex_c.x == QuadExt(Rational(15, 4)));
  CHECK(e456.disc == Rational(175, 16));  // b^2 - x_C^2 = 25 - 225/16
  QuadExt yc = e456.vertex_c.y;
  CHECK(yc * yc == QuadExt(Rational(175, 16)));
}

TEST_CASE("embed reproduces side lengths exactly") {
  Rng rng(12);
  for (int i = 0; i < 100; ++i) {
    Triangle t = random_triangle(rng);
    CartesianEmbedding e = embed(t);
    CHECK(cart_dist_sq(e.vertex_a, e.vertex_b) == QuadExt(t.c().squared()));
    CHECK(cart_dist_sq(e.vertex_a, e.vertex_c) == QuadExt(t.b().squared()));
    CHECK(cart_dist_sq(e.vertex_b, e.vertex_c) == QuadExt(t.a().squared()));
    CHECK(e.vertex_c.y.sign() > 0);
  }
}

TEST_CASE("incenter and nagel") {
  CHECK(same_point(incenter(tri(3, 4, 5)), BaryPoint(Rational(3), Rational(4), Rational(5))));
  CHECK(same_point(incenter(tri(2, 2, 2)), BaryPoint(Rational(1), Rational(1), Rational(1))));
  CHECK(same_point(incenter(tri(4, 5, 6)), BaryPoint(Rational(4), Rational(5), Rational(6))));

  BaryPoint n345 = nagel(tri(3, 4, 5)).normalized();
  CHECK(n345.x == Rational(1, 2));
  CHECK(n345.y == Rational(1, 3));
  CHECK(n345.z == Rational(1, 6));
  CHECK(same_point(nagel(tri(2, 2, 2)), BaryPoint(Rational(1), Rational(1), Rational(1))));
  BaryPoint n456 = nagel(tri(4, 5, 6)).normalized();
  CHECK(n456.x == Rational(7, 15));
  CHECK(n456.y == Rational(1, 3));
  CHECK(n456.z == Rational(1, 5));
}

TEST_CASE("incenter is equidistant from the side lines with distance^2 = r^2") {
  Rng rng(13);
  for (int i = 0; i < 60; ++i) {
    Triangle t = random_triangle(rng);
    CartesianEmbedding e = embed(t);
    CartPoint inc = e.to_cartesian(incenter(t));
    QuadExt r_sq(t.r_sq());
    CHECK(cart_line_dist_sq(inc, e.vertex_a, e.vertex_b) == r_sq);
    CHECK(cart_line_dist_sq(inc, e.vertex_b, e.vertex_c) == r_sq);
    CHECK(cart_line_dist_sq(inc, e.vertex_c, e.vertex_a) == r_sq);
  }
}

TEST_CASE("nagel point lies strictly inside") {
  Rng rng(14);
  for (int i = 0; i < 100; ++i) {
    Triangle t = random_triangle(rng);
    BaryPoint n = nagel(t);
    CHECK(n.x.sign() > 0);
    CHECK(n.y.sign() > 0);
    CHECK(n.z.sign() > 0);
  }
}

TEST_CASE("contact points against the perpendicular-foot oracle") {
  // Pinned examples first.
  {
    ContactPoints cp = contact_points(tri(3, 4, 5));
    CHECK(same_point(cp.u, BaryPoint(Rational(2), Rational(3), Rational(0))));  // AU = p-a = 3
  }
  {
    ContactPoints cp = contact_points(tri(2, 2, 2));
    CHECK(same_point(cp.u, BaryPoint(Rational(1), Rational(1), Rational(0))));  // midpoint
  }
  {
    ContactPoints cp = contact_points(tri(4, 5, 6));
    CHECK(same_point(cp.v, BaryPoint(Rational(0), Rational(3, 2), Rational(5, 2))));
  }

  // The touch-length property AU = p-a is classical but validated here: each
  // contact point must be the foot of the perpendicular from the incenter.
  Rng rng(15);
  for (int i = 0; i < 60; ++i) {
    Triangle t = random_triangle(rng);
    CartesianEmbedding e = embed(t);
    CartPoint inc = e.to_cartesian(incenter(t));
    ContactPoints cp = contact_points(t);
    CHECK(e.to_cartesian(cp.u) == cart_foot_of_perpendicular(inc, e.vertex_a, e.vertex_b));
    CHECK(e.to_cartesian(cp.v) == cart_foot_of_perpendicular(inc, e.vertex_b, e.vertex_c));
    CHECK(e.to_cartesian(cp.w) == cart_foot_of_perpendicular(inc, e.vertex_c, e.vertex_a));

    // Exact perpendicularity of (incenter -> contact point) to the side.
    CartPoint u = e.to_cartesian(cp.u);
    QuadExt dot = (u.x - inc.x) * (e.vertex_b.x - e.vertex_a.x) + (u.y - inc.y) * (e.vertex_b.y - e.vertex_a.y);
    CHECK(dot.is_zero());
  }
}

TEST_CASE("from_vertices round-trips and rejections") {
  Rng rng(16);
  for (int i = 0; i < 40; ++i) {
    Triangle t = random_triangle(rng);
    CartesianEmbedding e = embed(t);
    Triangle back = Triangle::from_vertices(e.vertex_a, e.vertex_b, e.vertex_c);
    CHECK(back.a() == t.a());
    CHECK(back.b() == t.b());
    CHECK(back.c() == t.c());
  }

  // Unit right isoceles triangle: hypotenuse sqrt(2) is irrational.
  CartPoint o{QuadExt(Rational(0)), QuadExt(Rational(0))};
  CartPoint ex{QuadExt(Rational(1)), QuadExt(Rational(0))};
  CartPoint ey{QuadExt(Rational(0)), QuadExt(Rational(1))};
  CHECK_THROWS_AS(Triangle::from_vertices(ex, o, ey), Error);

  // Collinear vertices violate the triangle inequality.
  CartPoint mid{QuadExt(Rational(1, 2)), QuadExt(Rational(0))};
  CHECK_THROWS_AS(Triangle::from_vertices(o, ex, mid), Error);
}

TEST_CASE("barycentric point basics") {
  CHECK_THROWS_AS(BaryPoint(Rational(0), Rational(0), Rational(0)), Error);
  BaryPoint at_infinity(Rational(1), Rational(-1), Rational(0));
  CHECK_FALSE(at_infinity.is_finite());
  CHECK_THROWS_AS(at_infinity.normalized(), Error);
  CHECK(same_point(BaryPoint(Rational(1), Rational(2), Rational(3)),
                   BaryPoint(Rational(2), Rational(4), Rational(6))));
  CHECK_FALSE(same_point(BaryPoint(Rational(1), Rational(2), Rational(3)),
                         BaryPoint(Rational(1), Rational(2), Rational(4))));
}
