#pragma once

#include <any>
#include <memory>
#include <stdexcept>
#include <string>

#include "kscheck/frames.hpp"
#include "kscheck/geometry.hpp"
#include "kscheck/meyer.hpp"
#include "kscheck/random.hpp"

namespace kscheck {

// A deterministic noncontextual outcome rule. The answer depends only on the
// hidden state drawn once per particle and on the realized direction, never
// on co-measured directions.
class NCHVModel {
 public:
  virtual ~NCHVModel() = default;
  virtual std::string name() const = 0;
  virtual std::any sample_hidden(Rng& rng) const = 0;
  virtual int outcome(const std::any& hidden,
                      const RationalUnitVector3& direction) const = 0;
};

// Fixed global parity coloring; the hidden state is empty. Answers 1 exactly
// on the chosen color class.
class MeyerModel final : public NCHVModel {
 public:
  explicit MeyerModel(Axis one_axis) : one_axis_(one_axis) {}

  std::string name() const override {
    return std::string("meyer(one_axis=") + axis_letter(one_axis_) + ")";
  }
  std::any sample_hidden(Rng&) const override { return std::any(); }
  int outcome(const std::any&,
              const RationalUnitVector3& direction) const override {
    return meyer_value(direction, one_axis_);
  }
  Axis one_axis() const { return one_axis_; }

 private:
  Axis one_axis_;
};

// Per-particle mixture of parity colorings: the hidden state is an exact
// rational rotation drawn from random integer quaternions, applied to the
// direction before coloring. Each hidden state is still a valid coloring of
// the rational sphere, so the mixture is noncontextual.
class RotatedMeyerModel final : public NCHVModel {
 public:
  explicit RotatedMeyerModel(Axis one_axis, int quaternion_range = 20)
      : one_axis_(one_axis), range_(quaternion_range) {}

  std::string name() const override {
    return std::string("rotated-meyer(one_axis=") + axis_letter(one_axis_) +
           ")";
  }
  std::any sample_hidden(Rng& rng) const override {
    return random_rational_frame(rng, range_);
  }
  int outcome(const std::any& hidden,
              const RationalUnitVector3& direction) const override {
    const auto* frame = std::any_cast<RationalFrame>(&hidden);
    if (frame == nullptr) {
      throw std::invalid_argument("RotatedMeyerModel: wrong hidden state");
    }
    return meyer_value(frame->apply(direction), one_axis_);
  }

 private:
  Axis one_axis_;
  int range_;
};

}  // namespace kscheck
