#pragma once

#include <stdexcept>

#include "kscheck/geometry.hpp"

namespace kscheck {

enum class Axis { X, Y, Z };

inline char axis_letter(Axis a) {
  switch (a) {
    case Axis::X: return 'X';
    case Axis::Y: return 'Y';
    case Axis::Z: return 'Z';
  }
  throw std::logic_error("axis_letter: bad axis");
}

inline Axis axis_from_letter(char ch) {
  switch (ch) {
    case 'X': case 'x': return Axis::X;
    case 'Y': case 'y': return Axis::Y;
    case 'Z': case 'z': return Axis::Z;
  }
  throw std::invalid_argument("axis_from_letter: expected X, Y or Z");
}

// Integer representative (a, b, c; n) of a rational unit vector:
// (a, b, c)/n with gcd(a, b, c) = 1 and a^2 + b^2 + c^2 = n^2.
// For such a point n is odd and exactly one of a, b, c is odd (squares are
// 0 or 1 mod 4, and three even components would contradict primitivity).
struct PrimitiveIntegerRep {
  Int a;
  Int b;
  Int c;
  Int n;
};

inline PrimitiveIntegerRep primitive_integer_rep(const RationalUnitVector3& u) {
  using boost::multiprecision::gcd;
  using boost::multiprecision::lcm;
  const RationalVector3& v = u.vec();
  Int l = lcm(lcm(den(v.x), den(v.y)), den(v.z));
  PrimitiveIntegerRep rep{num(v.x) * (l / den(v.x)), num(v.y) * (l / den(v.y)),
                          num(v.z) * (l / den(v.z)), l};
  // Clearing the least common denominator of a reduced unit vector already
  // gives a primitive triple; these are consistency checks, not reductions.
  if (gcd(gcd(rep.a, rep.b), rep.c) != 1) {
    throw std::logic_error("primitive_integer_rep: representative not primitive");
  }
  if (rep.a * rep.a + rep.b * rep.b + rep.c * rep.c != rep.n * rep.n) {
    throw std::logic_error("primitive_integer_rep: norm identity violated");
  }
  if (rep.n % 2 == 0) {
    throw std::logic_error("primitive_integer_rep: even denominator");
  }
  return rep;
}

// Three-coloring of the rational unit sphere by the axis of the unique odd
// coordinate of the primitive integer representative. Orthogonal rational
// unit vectors always receive distinct colors, which is what the property
// tests enforce. Sign-invariant by construction.
inline Axis meyer_color(const RationalUnitVector3& u) {
  PrimitiveIntegerRep rep = primitive_integer_rep(u);
  const bool ax = (rep.a % 2) != 0;
  const bool ay = (rep.b % 2) != 0;
  const bool az = (rep.c % 2) != 0;
  if (ax + ay + az != 1) {
    throw std::logic_error("meyer_color: expected exactly one odd coordinate");
  }
  if (ax) return Axis::X;
  if (ay) return Axis::Y;
  return Axis::Z;
}

// The induced yes/no assignment: answer 1 iff the vector's color matches the
// chosen axis. On any exactly orthogonal rational triad the three colors are
// distinct, so exactly one member answers 1.
inline int meyer_value(const RationalUnitVector3& u, Axis one_axis) {
  return meyer_color(u) == one_axis ? 1 : 0;
}

}  // namespace kscheck
