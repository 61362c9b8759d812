#pragma once

#include <optional>
#include <vector>

#include "conway/configuration.hpp"
#include "conway/predicates.hpp"

namespace conway {

/// Circle through the six (1,1,1) points: centered at the incenter with
/// squared radius p^2 + r^2.
struct ConwayCircle {
  BaryPoint center;
  Rational radius_sq;
};

ConwayCircle conway_circle(const Triangle& t);

/// Member of the one-parameter family T: (alpha, 1+(alpha-1)a/b, 1+(alpha-1)a/c).
Triplet family_triplet(const Triangle& t, const Rational& alpha);

/// Squared radius (p + (alpha-1)a)^2 + r^2 of the family circle.
Rational family_radius_sq(const Triangle& t, const Rational& alpha);

/// The alpha for which the family circle degenerates to the incircle: 1 - p/a.
Rational inscribed_alpha(const Triangle& t);

enum class Apex { A, B, C };

const char* apex_name(Apex apex);

/// Verdict of the exact solution test for the six-point cocyclicity about
/// the incenter: family member, isosceles extra, or neither.
struct Membership {
  enum class Tag { InFamilyT, IsoscelesExtra, NotSolution };
  Tag tag = Tag::NotSolution;
  Rational alpha;  // set for InFamilyT
  Apex apex = Apex::A;  // set for IsoscelesExtra

  bool is_solution() const { return tag != Tag::NotSolution; }
};

Membership classify_triplet(const Triangle& t, const Triplet& triplet);

/// End-to-end check of the family theorem on one instance: builds the six
/// points, tests exact equidistance from the incenter, and crosses the
/// observation against classify_triplet. For solutions it also checks the
/// radius formula and the contact-point cocyclicities {U,W,A',A''},
/// {U,V,B',B''}, {V,W,C',C''} (quadruples with coincident points impose no
/// constraint and are skipped).
struct FamilyVerdict {
  bool ok;             // observation and classification agree in full
  bool cocyclic;       // the six points are exactly equidistant from the incenter
  Membership membership;
  std::optional<Rational> radius_sq;  // common squared distance, when cocyclic
};

FamilyVerdict verify_family(const Triangle& t, const Triplet& triplet);

/// The lines (A'C''), (B'A''), (C'B'') in closed homogeneous form.
std::array<BaryLine, 3> dussau_lines(const Triangle& t, const Triplet& triplet);

/// Concurrency point of the (-1,-1,-1) lines of a scalene triangle; always
/// the Nagel point.
BaryPoint dussau_point(const Triangle& t);

/// The three circles of the (-1,-1,-1) configuration, each through four of
/// the six points, with the Nagel point's power wrt each (always 4 r^2).
struct AntiConwayReport {
  std::array<BaryCircle, 3> circles;  // {A',A'',B',C''}, {B',B'',C',A''}, {C',C'',A',B''}
  std::array<Rational, 3> nagel_powers;
  Rational expected_power;  // 4 r^2
};

AntiConwayReport anti_conway(const Triangle& t);

enum class ExclusionReason { PEq2A, PEq2B, PEq2C, PSqEq2BC, PSqEq2CA, PSqEq2AB };

const char* exclusion_name(ExclusionReason reason);  // "p=2a", ..., "p^2=2ab"

/// The unique triplet besides (-1,-1,-1) whose lines still concur at the
/// Nagel point, or the exclusion that rules it out.
struct CongruenceResult {
  std::optional<ExclusionReason> excluded;
  std::optional<Triplet> found;
};

CongruenceResult congruence(const Triangle& t);

/// Residuals of the concurrency system: zero iff the three lines pass
/// through the Nagel point.
///   a alpha + c gamma + p alpha gamma - (b - p)
///   a alpha + b beta  + p alpha beta  - (c - p)
///   b beta  + c gamma + p beta gamma  - (a - p)
std::array<Rational, 3> sigma_residuals(const Triangle& t, const Triplet& triplet);

/// The gamma-quadratic p(2c-p) g^2 - 2(ab-pc) g + (p^2-2ab) = 0 obtained by
/// eliminating alpha and beta; -1 is always a root, and the degree drops to 1
/// exactly when p = 2c.
struct GammaQuadratic {
  Rational c2, c1, c0;
  int degree;  // 2, or 1 when p = 2c
  std::vector<Rational> roots;
};

GammaQuadratic e3prime_roots(const Triangle& t);

/// Complete solution set of the concurrency system over the rationals,
/// including components equal to zero (callers apply the nonzero-component
/// hypothesis). Independent of congruence(): solves the system instead of
/// evaluating the closed form.
std::vector<Triplet> sigma_solutions(const Triangle& t);

}  // namespace conway
