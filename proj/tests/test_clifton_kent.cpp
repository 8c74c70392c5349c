#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "kscheck/clifton_kent.hpp"
#include "kscheck/quantum.hpp"

using namespace kscheck;

TEST_CASE("ideal configuration facts") {
  CKConfiguration c = ideal_ck_configuration();
  CHECK(std::abs(dot(c.v[0], c.a_prime)) <= 1e-12);
  CHECK(std::abs(dot(c.v[1], c.a_prime)) <= 1e-12);
  CHECK(std::abs(dot(c.v[2], c.b_prime)) <= 1e-12);
  CHECK(std::abs(dot(c.v[3], c.b_prime)) <= 1e-12);
  CHECK(std::abs(dot(c.v[4], c.v[5])) <= 1e-12);
  CHECK(transition_prob(c.a_prime, c.b_prime) ==
        Catch::Approx(1.0 / 9.0).margin(1e-12));
  CHECK(ck_union_bound(c) <= 1e-12);
}

TEST_CASE("epsilon zero reproduces the ideal configuration") {
  CKConfiguration c = build_ck_configuration(0.0, 7);
  CKConfiguration ideal = ideal_ck_configuration();
  CHECK(angle_between(c.a_prime, ideal.a_prime) <= 1e-12);
  CHECK(angle_between(c.b_prime, ideal.b_prime) <= 1e-12);
  for (int i = 0; i < 6; ++i) {
    CHECK(angle_between(c.v[i], ideal.v[i]) <= 1e-9);
  }
  CHECK(ck_union_bound(c) <= 1e-12);
}

TEST_CASE("epsilon out of range is rejected") {
  CHECK_THROWS_AS(build_ck_configuration(0.5, 1), std::invalid_argument);
  CHECK_THROWS_AS(build_ck_configuration(0.1, 1), std::invalid_argument);
  CHECK_THROWS_AS(build_ck_configuration(-1e-3, 1), std::invalid_argument);
}

TEST_CASE("structure invariants hold across seeds and scales") {
  CKConfiguration ideal = ideal_ck_configuration();
  for (double eps : {1e-2, 1e-3, 1e-4}) {
    const double leak_bound = std::sin(kCkLeakFactor * eps) + 1e-12;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      // Construction failures raise; the builder checks triad orthogonality,
      // unit norms, anchor angles and leak bounds itself.
      CKConfiguration c = build_ck_configuration(eps, seed);
      CHECK(angle_between(c.a_prime, ideal.a_prime) <= eps);
      CHECK(angle_between(c.b_prime, ideal.b_prime) <= eps);
      CHECK(std::abs(dot(c.v[0], c.v[2])) <= 1e-12);
      CHECK(std::abs(dot(c.v[0], c.v[4])) <= 1e-12);
      CHECK(std::abs(dot(c.v[2], c.v[4])) <= 1e-12);
      CHECK(std::abs(dot(c.v[1], c.v[3])) <= 1e-12);
      CHECK(std::abs(dot(c.v[1], c.v[5])) <= 1e-12);
      CHECK(std::abs(dot(c.v[3], c.v[5])) <= 1e-12);
      CHECK(std::abs(dot(c.v[0], c.a_prime)) <= leak_bound);
      CHECK(std::abs(dot(c.v[1], c.a_prime)) <= leak_bound);
      CHECK(std::abs(dot(c.v[2], c.b_prime)) <= leak_bound);
      CHECK(std::abs(dot(c.v[3], c.b_prime)) <= leak_bound);
      CHECK(std::abs(dot(c.v[4], c.v[5])) <= leak_bound);
      // Continuity of the anchor overlap around 1/9.
      const double overlap = transition_prob(c.a_prime, c.b_prime);
      CHECK(overlap >= 1.0 / 9.0 - 3.0 * eps);
      CHECK(overlap <= 1.0 / 9.0 + 3.0 * eps);
    }
  }
}

TEST_CASE("small scatter keeps every leak square below 1e-5") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    CKConfiguration c = build_ck_configuration(1e-3, seed);
    const double leaks[5] = {dot(c.v[0], c.a_prime), dot(c.v[1], c.a_prime),
                             dot(c.v[2], c.b_prime), dot(c.v[3], c.b_prime),
                             dot(c.v[4], c.v[5])};
    for (double l : leaks) CHECK(l * l <= 1e-5);
  }
}

TEST_CASE("union bound shrinks with the scatter angle") {
  for (double eps : {1e-2, 1e-3}) {
    int violations = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      double big = ck_union_bound(build_ck_configuration(eps, seed));
      double small = ck_union_bound(build_ck_configuration(eps / 10.0, seed));
      if (!(small < big)) ++violations;
    }
    CHECK(violations <= 5);
  }
}

TEST_CASE("prediction gap: union bound far below the anchor overlap") {
  for (double eps : {1e-2, 1e-3}) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      CKConfiguration c = build_ck_configuration(eps, seed);
      CHECK(ck_union_bound(c) < 0.01);
      CHECK(transition_prob(c.a_prime, c.b_prime) > 0.09);
    }
  }
}
