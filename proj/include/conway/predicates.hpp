#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>

#include "conway/triangle.hpp"

namespace conway {

/// Homogeneous barycentric line { (x:y:z) : lx + my + nz = 0 }.
struct BaryLine {
  Rational l, m, n;
};

bool same_line(const BaryLine& a, const BaryLine& b);

/// Circle relative to a fixed triangle's (a,b,c), as the conic
/// a^2 yz + b^2 zx + c^2 xy + (x+y+z)(ux + vy + wz) = 0.
/// The circumcircle is (0,0,0).
struct BaryCircle {
  Rational u, v, w;
};

struct CartCircle {
  CartPoint center;
  QuadExt radius_sq;
};

/// Squared distance between two finite barycentric points; always rational.
Rational bary_dist_sq(const Triangle& t, const BaryPoint& p, const BaryPoint& q);

/// Line through two distinct points (cross product of the homogeneous triples).
BaryLine line_through(const BaryPoint& p, const BaryPoint& q);

struct Concurrency {
  enum class Kind { Concurrent, NotConcurrent, AllIdentical };
  Kind kind;
  std::optional<BaryPoint> point;  // set when Concurrent
};

/// Three lines concur iff det[l1;l2;l3] = 0 and two of them meet at a finite
/// point. A finite common intersection of parallel-only pencils does not
/// exist; that case is reported as ParallelLines.
Concurrency concurrent(const BaryLine& l1, const BaryLine& l2, const BaryLine& l3);

/// Exact cocyclicity of four pairwise distinct finite points: the 4x4
/// determinant with rows [a^2 y z + b^2 z x + c^2 x y, x s, y s, z s].
bool concyclic(const Triangle& t, const BaryPoint& p1, const BaryPoint& p2, const BaryPoint& p3,
               const BaryPoint& p4);

/// Unique circle through three non-collinear finite points.
BaryCircle circle_through(const Triangle& t, const BaryPoint& p1, const BaryPoint& p2, const BaryPoint& p3);

/// Power |PO|^2 - R^2 of a finite point with respect to a circle; exact.
Rational power_of_point(const Triangle& t, const BaryPoint& p, const BaryCircle& circle);

/// Signed product PD . PE for P, D, E collinear, as an exact rational.
Rational secant_product(const Triangle& t, const BaryPoint& p, const BaryPoint& d, const BaryPoint& e);

/// Feuerbach criterion: with (DE) and (MN) meeting at P, the four points
/// D, E, M, N are concyclic iff PD.PE = PM.PN (signed products).
bool feuerbach_check(const Triangle& t, const BaryPoint& p, const BaryPoint& d, const BaryPoint& e,
                     const BaryPoint& m, const BaryPoint& n);

struct Equidistance {
  bool equal;
  Rational common_sq;     // set when equal
  std::size_t offender;   // first index whose distance differs, when !equal
};

Equidistance equidistant_from(const Triangle& t, const BaryPoint& center, std::span<const BaryPoint> points);

// ---------------------------------------------------------------------------
// Cartesian Q(sqrt(D)) path. This exists as an independent oracle for the
// barycentric predicates above, not as a second public formulation.

QuadExt cart_dist_sq(const CartPoint& p, const CartPoint& q);

bool cart_collinear(const CartPoint& p, const CartPoint& q, const CartPoint& r);

/// Zero test of det |x y x^2+y^2 1| plus a collinearity guard, so the verdict
/// means "a genuine circle through all four exists".
bool cart_concyclic(const std::array<CartPoint, 4>& pts);

/// Intersection of lines (p1 p2) and (q1 q2); empty when parallel/identical.
std::optional<CartPoint> cart_line_intersection(const CartPoint& p1, const CartPoint& p2,
                                                const CartPoint& q1, const CartPoint& q2);

/// Foot of the perpendicular from `x` onto the line (p q).
CartPoint cart_foot_of_perpendicular(const CartPoint& x, const CartPoint& p, const CartPoint& q);

/// Squared distance from `x` to the line (p q).
QuadExt cart_line_dist_sq(const CartPoint& x, const CartPoint& p, const CartPoint& q);

}  // namespace conway
