#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>

#include "kscheck/geometry.hpp"
#include "kscheck/random.hpp"

namespace kscheck {

// An exactly orthonormal triad of rational unit vectors. Columns of an
// orthogonal matrix over Q, so apply() preserves norms and angles exactly.
struct RationalFrame {
  std::array<RationalUnitVector3, 3> axes;

  // Image of p under the linear map sending e_x, e_y, e_z to the axes.
  RationalVector3 apply(const RationalVector3& p) const {
    return p.x * axes[0].vec() + p.y * axes[1].vec() + p.z * axes[2].vec();
  }
  RationalUnitVector3 apply(const RationalUnitVector3& p) const {
    return RationalUnitVector3(apply(p.vec()));
  }
};

namespace detail {
inline void check_frame(const RationalFrame& f) {
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (dot(f.axes[i], f.axes[j]) != 0) {
        throw std::logic_error("RationalFrame: axes not orthogonal");
      }
    }
  }
}
}  // namespace detail

// Rows of the rotation matrix of an integer quaternion, divided by its norm.
// Any nonzero integer quaternion yields an exactly orthonormal rational triad.
inline RationalFrame frame_from_quaternion(const Int& w, const Int& x,
                                           const Int& y, const Int& z) {
  if (w == 0 && x == 0 && y == 0 && z == 0) {
    throw std::invalid_argument("frame_from_quaternion: zero quaternion");
  }
  Rational n(w * w + x * x + y * y + z * z);
  RationalFrame f{{RationalUnitVector3(Rational(w * w + x * x - y * y - z * z) / n,
                                       Rational(2 * (x * y - w * z)) / n,
                                       Rational(2 * (x * z + w * y)) / n),
                   RationalUnitVector3(Rational(2 * (x * y + w * z)) / n,
                                       Rational(w * w - x * x + y * y - z * z) / n,
                                       Rational(2 * (y * z - w * x)) / n),
                   RationalUnitVector3(Rational(2 * (x * z - w * y)) / n,
                                       Rational(2 * (y * z + w * x)) / n,
                                       Rational(w * w - x * x - y * y + z * z) / n)}};
  detail::check_frame(f);
  return f;
}

// Exactly orthonormal rational triad from a random integer quaternion with
// components in [-range, range].
inline RationalFrame random_rational_frame(Rng& rng, int range = 20) {
  for (;;) {
    Int w(uniform_int_in(rng, -range, range));
    Int x(uniform_int_in(rng, -range, range));
    Int y(uniform_int_in(rng, -range, range));
    Int z(uniform_int_in(rng, -range, range));
    if (w == 0 && x == 0 && y == 0 && z == 0) continue;
    return frame_from_quaternion(w, x, y, z);
  }
}

// Orthonormal rational frame whose third axis is the given target: the
// reflection through the perpendicular bisector plane of e_z and target
// (identity when target = e_z). Such a frame exists for every rational unit
// vector; reflections need no normalization, so everything stays rational.
// Note: the map has determinant -1 when target != e_z, which is irrelevant
// here since only orthonormality is used. The reflection is an involution.
inline RationalFrame frame_aligning_ez_to(const RationalUnitVector3& target) {
  const RationalVector3 ez{Rational(0), Rational(0), Rational(1)};
  if (target.vec() == ez) {
    return RationalFrame{
        {RationalUnitVector3(Rational(1), Rational(0), Rational(0)),
         RationalUnitVector3(Rational(0), Rational(1), Rational(0)),
         RationalUnitVector3(ez)}};
  }
  RationalVector3 w = target.vec() - ez;
  Rational ww = norm_squared(w);
  auto reflect = [&](const RationalVector3& p) {
    Rational coef = 2 * dot(p, w) / ww;
    return p - coef * w;
  };
  RationalFrame f{
      {RationalUnitVector3(reflect({Rational(1), Rational(0), Rational(0)})),
       RationalUnitVector3(reflect({Rational(0), Rational(1), Rational(0)})),
       RationalUnitVector3(reflect(ez))}};
  if (f.axes[2] != target) {
    throw std::logic_error("frame_aligning_ez_to: reflection missed target");
  }
  detail::check_frame(f);
  return f;
}

}  // namespace kscheck
