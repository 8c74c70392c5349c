#include <catch2/catch_amalgamated.hpp>

#include "kscheck/frames.hpp"
#include "kscheck/meyer.hpp"
#include "kscheck/random.hpp"

using namespace kscheck;

TEST_CASE("primitive integer representatives") {
  PrimitiveIntegerRep r =
      primitive_integer_rep(RationalUnitVector3(Rational(0), Rational(3, 5),
                                                Rational(4, 5)));
  CHECK(r.a == 0);
  CHECK(r.b == 3);
  CHECK(r.c == 4);
  CHECK(r.n == 5);

  r = primitive_integer_rep(
      RationalUnitVector3(Rational(1), Rational(0), Rational(0)));
  CHECK(r.a == 1);
  CHECK(r.n == 1);

  r = primitive_integer_rep(RationalUnitVector3(Rational(2, 3), Rational(2, 3),
                                                Rational(1, 3)));
  CHECK(r.a == 2);
  CHECK(r.b == 2);
  CHECK(r.c == 1);
  CHECK(r.n == 3);
}

TEST_CASE("primitive representative invariants hold for random points") {
  using boost::multiprecision::gcd;
  Rng rng(splitmix64(21));
  for (int i = 0; i < 5000; ++i) {
    RationalUnitVector3 v = random_rational_frame(rng, 30).axes[0];
    PrimitiveIntegerRep r = primitive_integer_rep(v);
    CHECK(gcd(gcd(r.a, r.b), r.c) == 1);
    CHECK(r.a * r.a + r.b * r.b + r.c * r.c == r.n * r.n);
    CHECK(r.n % 2 == 1);
    int odd = (r.a % 2 != 0) + (r.b % 2 != 0) + (r.c % 2 != 0);
    CHECK(odd == 1);
  }
}

TEST_CASE("parity coloring examples") {
  CHECK(meyer_color(RationalUnitVector3(Rational(1), Rational(0), Rational(0))) ==
        Axis::X);
  CHECK(meyer_color(RationalUnitVector3(Rational(0), Rational(3, 5),
                                        Rational(4, 5))) == Axis::Y);
  CHECK(meyer_color(RationalUnitVector3(Rational(2, 3), Rational(2, 3),
                                        Rational(1, 3))) == Axis::Z);
}

TEST_CASE("parity coloring is sign-invariant") {
  Rng rng(splitmix64(22));
  for (int i = 0; i < 10000; ++i) {
    RationalUnitVector3 v = random_rational_frame(rng).axes[uniform_below(rng, 3)];
    CHECK(meyer_color(v) == meyer_color(RationalUnitVector3(-v.vec())));
  }
}

TEST_CASE("orthogonal triads receive three distinct colors") {
  // The explicit triad {(2,2,1), (2,-1,-2), (1,-2,2)}/3 is mutually
  // orthogonal and colored Z, Y, X.
  RationalUnitVector3 t1(Rational(2, 3), Rational(2, 3), Rational(1, 3));
  RationalUnitVector3 t2(Rational(2, 3), Rational(-1, 3), Rational(-2, 3));
  RationalUnitVector3 t3(Rational(1, 3), Rational(-2, 3), Rational(2, 3));
  CHECK(dot(t1, t2) == 0);
  CHECK(dot(t1, t3) == 0);
  CHECK(dot(t2, t3) == 0);
  CHECK(meyer_color(t1) == Axis::Z);
  CHECK(meyer_color(t2) == Axis::Y);
  CHECK(meyer_color(t3) == Axis::X);

  Rng rng(splitmix64(23));
  for (int i = 0; i < 10000; ++i) {
    RationalFrame f = random_rational_frame(rng);
    Axis a = meyer_color(f.axes[0]);
    Axis b = meyer_color(f.axes[1]);
    Axis c = meyer_color(f.axes[2]);
    CHECK(a != b);
    CHECK(a != c);
    CHECK(b != c);
  }
}

TEST_CASE("orthogonal pairs receive distinct colors") {
  Rng rng(splitmix64(24));
  for (int i = 0; i < 10000; ++i) {
    RationalFrame f = random_rational_frame(rng);
    std::size_t first = uniform_below(rng, 3);
    std::size_t second = (first + 1 + uniform_below(rng, 2)) % 3;
    CHECK(meyer_color(f.axes[first]) != meyer_color(f.axes[second]));
  }
}

TEST_CASE("meyer_value answers 1 exactly on the chosen color class") {
  RationalUnitVector3 ex(Rational(1), Rational(0), Rational(0));
  RationalUnitVector3 ey(Rational(0), Rational(1), Rational(0));
  CHECK(meyer_value(ex, Axis::X) == 1);
  CHECK(meyer_value(ey, Axis::X) == 0);

  Rng rng(splitmix64(25));
  for (int i = 0; i < 2000; ++i) {
    RationalFrame f = random_rational_frame(rng);
    for (Axis axis : {Axis::X, Axis::Y, Axis::Z}) {
      int sum = meyer_value(f.axes[0], axis) + meyer_value(f.axes[1], axis) +
                meyer_value(f.axes[2], axis);
      CHECK(sum == 1);
    }
  }
}
