#pragma once

#include <string>

#include "conway/quadext.hpp"
#include "conway/rational.hpp"

namespace conway {

/// Homogeneous barycentric point (x : y : z) relative to a fixed triangle.
/// Scale-equivalent; finite iff x + y + z != 0.
struct BaryPoint {
  Rational x, y, z;

  BaryPoint() : x(0), y(0), z(0) {}
  BaryPoint(Rational px, Rational py, Rational pz);

  Rational sum() const { return x + y + z; }
  bool is_finite() const { return !sum().is_zero(); }

  /// Representative scaled so the coordinates sum to 1.
  BaryPoint normalized() const;
};

/// Scale-invariant equality of homogeneous points.
bool same_point(const BaryPoint& p, const BaryPoint& q);

std::ostream& operator<<(std::ostream& os, const BaryPoint& p);

enum class Shape { Scalene, IsoscelesApexA, IsoscelesApexB, IsoscelesApexC, Equilateral };

const char* shape_name(Shape s);

struct CartPoint {
  QuadExt x, y;
};

bool operator==(const CartPoint& a, const CartPoint& b);

/// Side lengths a = BC, b = AC, c = AB with the derived metric quantities.
/// Constructed only through the validating factories.
class Triangle {
public:
  static Triangle from_sides(const Rational& a, const Rational& b, const Rational& c);

  /// Rebuilds a triangle from exact Cartesian vertices. The three squared
  /// side lengths must be squares of rationals, otherwise the input is
  /// rejected: rational sides are what keeps the whole pipeline exact.
  static Triangle from_vertices(const CartPoint& a_vertex, const CartPoint& b_vertex, const CartPoint& c_vertex);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& c() const { return c_; }
  const Rational& p() const { return p_; }            // semiperimeter
  const Rational& area_sq16() const { return area_sq16_; }  // 16 * area^2 (Heron)
  const Rational& r_sq() const { return r_sq_; }      // inradius squared

private:
  Triangle(Rational a, Rational b, Rational c);

  Rational a_, b_, c_, p_, area_sq16_, r_sq_;
};

Shape classify(const Triangle& t);

/// Canonical placement: A at the origin, B at (c, 0), C above the x-axis.
/// Every point the library constructs from it has coordinates in Q(sqrt(D)).
struct CartesianEmbedding {
  CartPoint vertex_a, vertex_b, vertex_c;
  Rational disc;  // D = area_sq16 / (4 c^2); y_C = sqrt(D)

  /// Cartesian image of a finite barycentric point.
  CartPoint to_cartesian(const BaryPoint& p) const;
};

CartesianEmbedding embed(const Triangle& t);

BaryPoint incenter(const Triangle& t);  // (a : b : c)
BaryPoint nagel(const Triangle& t);     // (-a+b+c : a-b+c : a+b-c)

/// Incircle touch points: U on [AB], V on [BC], W on [CA], with
/// AU = p-a, BV = p-b, CW = p-c along the respective sides.
struct ContactPoints {
  BaryPoint u, v, w;
};

ContactPoints contact_points(const Triangle& t);

}  // namespace conway
