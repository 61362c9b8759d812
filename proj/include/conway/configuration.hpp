#pragma once

#include <array>
#include <utility>

#include "conway/triangle.hpp"

namespace conway {

/// The three side-extension parameters. (1,1,1) is Conway's configuration,
/// (-1,-1,-1) the anti-Conway one.
struct Triplet {
  Rational alpha, beta, gamma;
};

bool operator==(const Triplet& a, const Triplet& b);

/// Fixed index order of the six constructed points.
enum PointIndex : int {
  kAPrime = 0,   // A' on (AB)
  kASecond = 1,  // A'' on (AC)
  kBPrime = 2,   // B' on (BC)
  kBSecond = 3,  // B'' on (BA)
  kCPrime = 4,   // C' on (CA)
  kCSecond = 5,  // C'' on (CB)
};

const char* point_label(int index);  // "A'", "A''", ...

/// The six points of a (triangle, triplet) pair, in barycentric and exact
/// Cartesian form, plus the embedding they live in.
struct Configuration {
  Triangle triangle;
  Triplet triplet;
  CartesianEmbedding frame;
  std::array<BaryPoint, 6> bary;
  std::array<CartPoint, 6> cart;
};

/// Builds all six points. Homogeneous coordinates are kept unnormalized;
/// coincidences with vertices (e.g. gamma = -b/c making C' = A) are legal
/// configurations, not errors.
Configuration six_points(const Triangle& t, const Triplet& triplet);

/// Metrics of the hexagon A'A''B'B''C'C'': squared main diagonals
/// [A'B''], [A''C'], [B'C''], the three pairs of remaining diagonals, and
/// exact parallelism of opposite sides.
struct HexagonMetrics {
  std::array<Rational, 3> diag_main_sq;
  std::array<std::pair<Rational, Rational>, 3> diag_pairs_sq;  // (A'C', A''B''), (A'B', B''C''), (B'C', A''C'')
  std::array<bool, 3> opposite_sides_parallel;                 // A'A''||B''C', A''B'||C'C'', B'B''||C''A'
};

HexagonMetrics hexagon_metrics(const Configuration& cfg);

}  // namespace conway
