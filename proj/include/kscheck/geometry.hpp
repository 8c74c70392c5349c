#pragma once

#include <cmath>
#include <compare>
#include <stdexcept>
#include <string>

#include "kscheck/rational.hpp"

namespace kscheck {

// ---------------------------------------------------------------------------
// Exact rational 3-vectors
// ---------------------------------------------------------------------------

struct RationalVector3 {
  Rational x;
  Rational y;
  Rational z;

  bool operator==(const RationalVector3& o) const {
    return x == o.x && y == o.y && z == o.z;
  }
  bool operator!=(const RationalVector3& o) const { return !(*this == o); }

  RationalVector3 operator-() const { return {-x, -y, -z}; }
  RationalVector3 operator+(const RationalVector3& o) const {
    return {x + o.x, y + o.y, z + o.z};
  }
  RationalVector3 operator-(const RationalVector3& o) const {
    return {x - o.x, y - o.y, z - o.z};
  }
};

inline RationalVector3 operator*(const Rational& k, const RationalVector3& v) {
  return {k * v.x, k * v.y, k * v.z};
}

inline Rational dot(const RationalVector3& u, const RationalVector3& v) {
  return u.x * v.x + u.y * v.y + u.z * v.z;
}

inline RationalVector3 cross(const RationalVector3& u,
                             const RationalVector3& v) {
  return {u.y * v.z - u.z * v.y, u.z * v.x - u.x * v.z,
          u.x * v.y - u.y * v.x};
}

inline Rational norm_squared(const RationalVector3& v) { return dot(v, v); }

inline bool is_zero(const RationalVector3& v) {
  return v.x == 0 && v.y == 0 && v.z == 0;
}

// Lexicographic order, usable as a map comparator for deduplication.
inline bool lexicographic_less(const RationalVector3& a,
                               const RationalVector3& b) {
  if (a.x != b.x) return a.x < b.x;
  if (a.y != b.y) return a.y < b.y;
  return a.z < b.z;
}

// A rational point of the unit sphere; x^2 + y^2 + z^2 = 1 holds exactly.
class RationalUnitVector3 {
 public:
  explicit RationalUnitVector3(RationalVector3 v) : v_(std::move(v)) {
    if (norm_squared(v_) != 1) {
      throw std::invalid_argument("RationalUnitVector3: squared norm is not 1");
    }
  }
  RationalUnitVector3(Rational x, Rational y, Rational z)
      : RationalUnitVector3(
            RationalVector3{std::move(x), std::move(y), std::move(z)}) {}

  const RationalVector3& vec() const { return v_; }
  const Rational& x() const { return v_.x; }
  const Rational& y() const { return v_.y; }
  const Rational& z() const { return v_.z; }

  bool operator==(const RationalUnitVector3& o) const { return v_ == o.v_; }
  bool operator!=(const RationalUnitVector3& o) const { return v_ != o.v_; }

 private:
  RationalVector3 v_;
};

inline Rational dot(const RationalUnitVector3& u, const RationalUnitVector3& v) {
  return dot(u.vec(), v.vec());
}

// v and -v represent the same projector; the fixed convention is that the
// first nonzero component is positive. Idempotent.
inline RationalUnitVector3 canonicalize(const RationalUnitVector3& u) {
  const RationalVector3& v = u.vec();
  const Rational* first = nullptr;
  if (v.x != 0) {
    first = &v.x;
  } else if (v.y != 0) {
    first = &v.y;
  } else {
    first = &v.z;
  }
  if (*first < 0) return RationalUnitVector3(-v);
  return u;
}

// ---------------------------------------------------------------------------
// Exact points of the unit circle: pairs (c, s) with c^2 + s^2 = 1
// ---------------------------------------------------------------------------

class CircleParameter {
 public:
  CircleParameter(Rational c, Rational s) : c_(std::move(c)), s_(std::move(s)) {
    if (c_ * c_ + s_ * s_ != 1) {
      throw std::invalid_argument("CircleParameter: c^2 + s^2 != 1");
    }
  }

  const Rational& c() const { return c_; }
  const Rational& s() const { return s_; }

 private:
  Rational c_;
  Rational s_;
};

// Half-angle parameterization: c = (1-t^2)/(1+t^2), s = 2t/(1+t^2).
// Hits every rational circle point except (-1, 0).
inline CircleParameter circle_param_from_tangent(const Rational& t) {
  Rational d = 1 + t * t;
  return CircleParameter((1 - t * t) / d, (2 * t) / d);
}

// ---------------------------------------------------------------------------
// Double-precision vectors for the perturbed (irrational) constructions
// ---------------------------------------------------------------------------

struct RealVector3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  RealVector3 operator-() const { return {-x, -y, -z}; }
  RealVector3 operator+(const RealVector3& o) const {
    return {x + o.x, y + o.y, z + o.z};
  }
  RealVector3 operator-(const RealVector3& o) const {
    return {x - o.x, y - o.y, z - o.z};
  }
};

inline RealVector3 operator*(double k, const RealVector3& v) {
  return {k * v.x, k * v.y, k * v.z};
}

inline double dot(const RealVector3& u, const RealVector3& v) {
  return u.x * v.x + u.y * v.y + u.z * v.z;
}

inline RealVector3 cross(const RealVector3& u, const RealVector3& v) {
  return {u.y * v.z - u.z * v.y, u.z * v.x - u.x * v.z, u.x * v.y - u.y * v.x};
}

inline double norm(const RealVector3& v) { return std::sqrt(dot(v, v)); }

inline RealVector3 normalized(const RealVector3& v) {
  double n = norm(v);
  if (n == 0.0) throw std::domain_error("normalized: zero vector");
  return {v.x / n, v.y / n, v.z / n};
}

inline bool approx_unit(const RealVector3& v, double tol = 1e-12) {
  return std::abs(dot(v, v) - 1.0) <= tol;
}

inline RealVector3 to_real(const RationalVector3& v) {
  return {to_double(v.x), to_double(v.y), to_double(v.z)};
}

inline RealVector3 to_real(const RationalUnitVector3& v) {
  return to_real(v.vec());
}

// Angle in [0, pi] between two nonzero vectors.
inline double angle_between(const RealVector3& u, const RealVector3& v) {
  double nu = norm(u);
  double nv = norm(v);
  if (nu == 0.0 || nv == 0.0) {
    throw std::domain_error("angle_between: zero vector");
  }
  double c = dot(u, v) / (nu * nv);
  if (c > 1.0) c = 1.0;
  if (c < -1.0) c = -1.0;
  return std::acos(c);
}

}  // namespace kscheck
