#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "kscheck/frames.hpp"
#include "kscheck/geometry.hpp"
#include "kscheck/random.hpp"

namespace kscheck {

// Draws rational unit vectors within angle epsilon of a rational target.
//
// Construction: dyadic points (p, q) = (P, Q)/2^k are drawn uniformly from
// the disk of radius tan(epsilon/2) and mapped stereographically to
//   d = (2p, 2q, 1 - p^2 - q^2) / (1 + p^2 + q^2),
// a rational unit vector with angle(d, e_z) = 2*atan(sqrt(p^2+q^2)) <=
// epsilon exactly. d is then transported by an exact rational orthonormal
// frame taking e_z to the target, which preserves the angle bound exactly.
// The distribution is approximately (not exactly) uniform over the cap: the
// stereographic pullback is disk-uniform, which is flat to O(epsilon^2).
class DirectionSampler {
 public:
  DirectionSampler(RationalUnitVector3 target, double epsilon)
      : target_(std::move(target)),
        frame_(frame_aligning_ez_to(target_)),
        epsilon_(epsilon) {
    if (!(epsilon >= 0.0) || epsilon >= std::numbers::pi / 2.0) {
      throw std::invalid_argument(
          "DirectionSampler: epsilon must lie in [0, pi/2)");
    }
    if (epsilon_ > 0.0) {
      // Grid exponent: at least 2^12 grid steps across the cap radius when
      // representable, denominators capped at 2^60.
      scale_bits_ = 26;
      auto grid_radius = [&](int bits) {
        const double r = std::tan(epsilon_ / 2.0) * (1.0 - 1e-12);
        return static_cast<std::int64_t>(std::floor(std::ldexp(r, bits)));
      };
      while (scale_bits_ < 60 && grid_radius(scale_bits_) < (1 << 12)) {
        scale_bits_ += 4;
      }
      bound_ = grid_radius(scale_bits_);
    }
  }

  const RationalUnitVector3& target() const { return target_; }

  RationalUnitVector3 sample(Rng& rng) const {
    if (epsilon_ == 0.0 || bound_ == 0) return target_;
    Int p_num, q_num;
    const Int limit = Int(bound_) * Int(bound_);
    for (;;) {
      p_num = Int(uniform_int_in(rng, -bound_, bound_));
      q_num = Int(uniform_int_in(rng, -bound_, bound_));
      if (p_num * p_num + q_num * q_num <= limit) break;
    }
    Int scale = Int(1) << scale_bits_;
    Rational p = make_rational(std::move(p_num), scale);
    Rational q = make_rational(std::move(q_num), scale);
    Rational r2 = p * p + q * q;
    Rational denom = 1 + r2;
    RationalVector3 d{2 * p / denom, 2 * q / denom, (1 - r2) / denom};
    return RationalUnitVector3(frame_.apply(d));
  }

 private:
  RationalUnitVector3 target_;
  RationalFrame frame_;
  double epsilon_ = 0.0;
  std::int64_t bound_ = 0;
  int scale_bits_ = 26;
};

inline RationalUnitVector3 sample_direction_near(
    const RationalUnitVector3& target, double epsilon, Rng& rng) {
  return DirectionSampler(target, epsilon).sample(rng);
}

}  // namespace kscheck
