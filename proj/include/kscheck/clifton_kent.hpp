#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>

#include "kscheck/geometry.hpp"
#include "kscheck/random.hpp"

namespace kscheck {

// Eight nearly-ideal directions: two anchors a', b' within epsilon of
// (1,1,1)/sqrt(3) and (1,1,-1)/sqrt(3), and six context vectors forming two
// exactly orthonormal triads {v1,v3,v5} and {v2,v4,v6} (within floating
// tolerance) such that the five "leak" products
//   a'.v1, a'.v2, b'.v3, b'.v4, v5.v6
// all stay below sin(kCkLeakFactor * epsilon) in magnitude.
struct CKConfiguration {
  RealVector3 a_prime;
  RealVector3 b_prime;
  std::array<RealVector3, 6> v;  // v[0] = v1', ..., v[5] = v6'
  double epsilon = 0.0;
};

// Bound factor for the five leak products: anchors move by at most epsilon,
// context vectors by at most epsilon/4 plus a Gram-Schmidt correction of the
// same order, so every leak angle stays below 3 * epsilon.
inline constexpr double kCkLeakFactor = 3.0;

inline CKConfiguration ideal_ck_configuration() {
  const double r3 = 1.0 / std::sqrt(3.0);
  const double r2 = 1.0 / std::sqrt(2.0);
  CKConfiguration c;
  c.a_prime = {r3, r3, r3};
  c.b_prime = {r3, r3, -r3};
  c.v = {RealVector3{r2, 0.0, -r2}, RealVector3{0.0, r2, -r2},
         RealVector3{r2, 0.0, r2},  RealVector3{0.0, r2, r2},
         RealVector3{0.0, 1.0, 0.0}, RealVector3{1.0, 0.0, 0.0}};
  c.epsilon = 0.0;
  return c;
}

namespace detail {

// Rodrigues rotation of v about the unit axis k by angle theta.
inline RealVector3 rotate(const RealVector3& v, const RealVector3& k,
                          double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return c * v + s * cross(k, v) + ((1.0 - c) * dot(k, v)) * k;
}

inline RealVector3 random_unit_axis(Rng& rng) {
  const double z = 2.0 * uniform_double01(rng) - 1.0;
  const double phi = 2.0 * std::numbers::pi * uniform_double01(rng);
  const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
  return {r * std::cos(phi), r * std::sin(phi), z};
}

// Random rotation by an angle strictly below max_angle.
inline RealVector3 jitter(const RealVector3& v, double max_angle, Rng& rng) {
  const RealVector3 axis = random_unit_axis(rng);
  const double angle = uniform_double01(rng) * max_angle * 0.999999;
  return rotate(v, axis, angle);
}

}  // namespace detail

// Builds a seeded perturbation of the ideal configuration: the anchors are
// rotated by up to epsilon, the six context vectors by up to epsilon/4, and
// each triad is then re-orthonormalized (Gram-Schmidt anchored at v1' resp.
// v2', third member completed by the cross product). All structure invariants
// are checked before returning. epsilon = 0 reproduces the ideal
// configuration.
inline CKConfiguration build_ck_configuration(double epsilon,
                                              std::uint64_t seed) {
  if (!(epsilon >= 0.0) || epsilon >= 0.1) {
    throw std::invalid_argument(
        "build_ck_configuration: epsilon must lie in [0, 0.1)");
  }
  CKConfiguration c = ideal_ck_configuration();
  const CKConfiguration ideal = c;
  c.epsilon = epsilon;
  if (epsilon > 0.0) {
    Rng rng(splitmix64(seed));
    c.a_prime = detail::jitter(c.a_prime, epsilon, rng);
    c.b_prime = detail::jitter(c.b_prime, epsilon, rng);
    for (auto& vi : c.v) vi = detail::jitter(vi, epsilon / 4.0, rng);
  }
  // Re-orthonormalize {v1, v3, v5} around v1 and {v2, v4, v6} around v2.
  c.v[0] = normalized(c.v[0]);
  c.v[2] = normalized(c.v[2] - dot(c.v[2], c.v[0]) * c.v[0]);
  c.v[4] = cross(c.v[2], c.v[0]);
  c.v[1] = normalized(c.v[1]);
  c.v[3] = normalized(c.v[3] - dot(c.v[3], c.v[1]) * c.v[1]);
  c.v[5] = cross(c.v[1], c.v[3]);

  const double tol = 1e-12;
  auto require = [](bool ok, const char* what) {
    if (!ok) {
      throw std::logic_error(std::string("build_ck_configuration: ") + what);
    }
  };
  for (const auto& vi : c.v) require(approx_unit(vi, tol), "triad member not unit");
  require(approx_unit(c.a_prime, tol), "a' not unit");
  require(approx_unit(c.b_prime, tol), "b' not unit");
  require(std::abs(dot(c.v[0], c.v[2])) <= tol, "triad 1 not orthogonal");
  require(std::abs(dot(c.v[0], c.v[4])) <= tol, "triad 1 not orthogonal");
  require(std::abs(dot(c.v[2], c.v[4])) <= tol, "triad 1 not orthogonal");
  require(std::abs(dot(c.v[1], c.v[3])) <= tol, "triad 2 not orthogonal");
  require(std::abs(dot(c.v[1], c.v[5])) <= tol, "triad 2 not orthogonal");
  require(std::abs(dot(c.v[3], c.v[5])) <= tol, "triad 2 not orthogonal");
  require(angle_between(c.a_prime, ideal.a_prime) <= epsilon + tol,
          "a' moved beyond epsilon");
  require(angle_between(c.b_prime, ideal.b_prime) <= epsilon + tol,
          "b' moved beyond epsilon");
  const double leak_bound = std::sin(kCkLeakFactor * epsilon) + tol;
  require(std::abs(dot(c.v[0], c.a_prime)) <= leak_bound, "leak a'.v1");
  require(std::abs(dot(c.v[1], c.a_prime)) <= leak_bound, "leak a'.v2");
  require(std::abs(dot(c.v[2], c.b_prime)) <= leak_bound, "leak b'.v3");
  require(std::abs(dot(c.v[3], c.b_prime)) <= leak_bound, "leak b'.v4");
  require(std::abs(dot(c.v[4], c.v[5])) <= leak_bound, "leak v5.v6");
  return c;
}

}  // namespace kscheck
