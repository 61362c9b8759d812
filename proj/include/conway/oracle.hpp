#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "conway/theorems.hpp"

namespace conway {

/// Deterministic generator: std::mt19937_64 (bit-exact per the C++ standard)
/// with explicit rejection sampling for bounded draws. None of the
/// implementation-defined <random> distributions are used, so identical
/// seeds give identical streams on every platform.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Unbiased draw from [0, bound).
  std::uint64_t below(std::uint64_t bound);

  /// Unbiased draw from [lo, hi], inclusive.
  std::int64_t range(std::int64_t lo, std::int64_t hi);

  /// Rational in [lo, hi] with denominator in [1, den_bound]: draws the
  /// denominator first, then a numerator in [lo*d, hi*d].
  Rational rational(std::int64_t lo, std::int64_t hi, int den_bound);

private:
  std::mt19937_64 engine_;
};

/// SplitMix64 finalizer (public-domain mixing function).
std::uint64_t splitmix64(std::uint64_t x);

/// Sub-seed of trial `index` under master `seed`:
/// splitmix64(seed ^ (0x9E3779B97F4A7C15 * (index + 1))).
std::uint64_t trial_seed(std::uint64_t seed, int index);

enum class ShapeFilter { Any, Scalene, Isosceles, Equilateral };

const char* shape_filter_name(ShapeFilter f);

struct SampleSpec {
  std::uint64_t seed = 0;
  int count = 1;
  int side_min = 1;
  int side_max = 10;
  int denominator_bound = 4;
  ShapeFilter shape_filter = ShapeFilter::Any;
  bool avoid_exclusions = false;
};

/// Rejection-samples a triangle matching the sample spec. Isosceles and
/// equilateral shapes are constructed directly (a = b, resp. a = b = c)
/// instead of being rejection-sampled, since exact side equality would
/// almost never occur.
Triangle sample_triangle(const SampleSpec& spec, Rng& rng);

/// Circumcircle of the first three points via perpendicular-bisector
/// intersection in Q(sqrt(D)), then exact membership of the rest.
struct BruteForceCircle {
  CartPoint center;
  QuadExt radius_sq;
  bool concyclic;        // all points on the circle
  std::size_t offender;  // first off-circle index when !concyclic
};

BruteForceCircle brute_force_circle(std::span<const CartPoint> points);

enum class Check { Conway, Hexagon, Family, Necessity, Dussau, AntiConway, Congruence, Cross };

const char* check_name(Check c);
std::vector<Check> all_checks();
std::vector<Check> parse_checks(const std::vector<std::string>& names);  // "all" expands

/// Test-only sabotage switch used to demonstrate that the harness actually
/// detects broken geometry; not reachable from the CLI.
enum class FaultInjection { None, FlipDussauLineSign };

struct SuiteFailure {
  int trial;
  std::string check;
  std::string triangle;  // "a,b,c"
  std::string triplet;   // "alpha,beta,gamma" or ""
  std::string detail;
  std::string expected;
  std::string actual;
};

struct SuiteReport {
  SampleSpec spec;
  std::vector<std::string> checks;
  int trials = 0;
  std::vector<SuiteFailure> failures;
};

/// Runs the selected theorem verifiers plus brute-force and float
/// cross-checks on `spec.count` sampled triangles. Failures are data, not
/// errors; scalene-only checks skip non-scalene samples.
SuiteReport run_suite(const SampleSpec& spec, const std::vector<Check>& checks,
                      FaultInjection fault = FaultInjection::None);

}  // namespace conway
