#pragma once

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "kscheck/family.hpp"
#include "kscheck/nchv_model.hpp"
#include "kscheck/quantum.hpp"
#include "kscheck/random.hpp"
#include "kscheck/sampler.hpp"

namespace kscheck {

struct PrecisionSpec {
  double epsilon = 0.0;      // cap half-angle of realized-direction scatter
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;

  void validate() const {
    if (!(epsilon >= 0.0) || epsilon >= std::numbers::pi / 2.0) {
      throw std::invalid_argument("PrecisionSpec: epsilon not in [0, pi/2)");
    }
    if (samples < 1) {
      throw std::invalid_argument("PrecisionSpec: samples must be >= 1");
    }
  }
};

struct EnsembleCounts {
  std::uint64_t trials = 0;
  std::uint64_t accepted = 0;    // preparation filter passed
  std::uint64_t measured_a = 0;  // accepted even trials, measured along A
  std::uint64_t ones_a = 0;
  std::uint64_t measured_c = 0;  // accepted odd trials, measured along C
  std::uint64_t ones_c = 0;

  EnsembleCounts& operator+=(const EnsembleCounts& o) {
    trials += o.trials;
    accepted += o.accepted;
    measured_a += o.measured_a;
    ones_a += o.ones_a;
    measured_c += o.measured_c;
    ones_c += o.ones_c;
    return *this;
  }
};

struct EnsembleReport {
  std::string model;
  EnsembleCounts counts;
  double p_b = 0.0;
  double p_a_given_b = 0.0;
  double p_c_given_b = 0.0;
  double f_estimate = 0.0;        // p_a_given_b + p_c_given_b
  double confidence_radius = 0.0; // 3 sigma, binomial, both terms combined
  bool degenerate = false;        // no accepted trials on one of the branches
  double epsilon = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

namespace detail {

inline unsigned experiment_thread_count() {
  // KSCHECK_THREADS picks the worker count; results are identical for any
  // value because every trial owns an engine seeded from (seed, trial index).
  if (const char* env = std::getenv("KSCHECK_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1 && v <= 64) return static_cast<unsigned>(v);
  }
  return 1;
}

template <typename TrialFn>
EnsembleCounts run_trials(std::uint64_t samples, std::uint64_t seed,
                          const TrialFn& trial) {
  const unsigned workers = experiment_thread_count();
  if (workers <= 1) {
    EnsembleCounts counts;
    for (std::uint64_t i = 0; i < samples; ++i) {
      Rng rng(sub_seed(seed, i));
      trial(i, rng, counts);
    }
    counts.trials = samples;
    return counts;
  }
  std::vector<EnsembleCounts> partial(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w]() {
      for (std::uint64_t i = w; i < samples; i += workers) {
        Rng rng(sub_seed(seed, i));
        trial(i, rng, partial[w]);
      }
    });
  }
  for (auto& t : pool) t.join();
  EnsembleCounts counts;
  for (const auto& p : partial) counts += p;
  counts.trials = samples;
  return counts;
}

inline EnsembleReport make_report(std::string model, EnsembleCounts counts,
                                  const PrecisionSpec& spec) {
  EnsembleReport r;
  r.model = std::move(model);
  r.counts = counts;
  r.epsilon = spec.epsilon;
  r.samples = spec.samples;
  r.seed = spec.seed;
  r.p_b = static_cast<double>(counts.accepted) /
          static_cast<double>(counts.trials);
  if (counts.measured_a == 0 || counts.measured_c == 0) {
    r.degenerate = true;
    return r;
  }
  r.p_a_given_b = static_cast<double>(counts.ones_a) /
                  static_cast<double>(counts.measured_a);
  r.p_c_given_b = static_cast<double>(counts.ones_c) /
                  static_cast<double>(counts.measured_c);
  r.f_estimate = r.p_a_given_b + r.p_c_given_b;
  const double var_a = r.p_a_given_b * (1.0 - r.p_a_given_b) /
                       static_cast<double>(counts.measured_a);
  const double var_c = r.p_c_given_b * (1.0 - r.p_c_given_b) /
                       static_cast<double>(counts.measured_c);
  r.confidence_radius = 3.0 * std::sqrt(var_a + var_c);
  return r;
}

}  // namespace detail

// One finite-precision run under a noncontextual model. Per trial, with an
// engine seeded by (seed, trial index): draw the hidden state; realize a
// direction within epsilon of B and keep the trial iff the model answers 1
// there; on kept trials measure along a realized direction near A (even
// trial indices) or near C (odd ones) and record the answer. Fully
// deterministic given the spec.
inline EnsembleReport run_nchv_experiment(const NCHVModel& model,
                                          const FamilyParameters& params,
                                          const PrecisionSpec& spec) {
  spec.validate();
  NineVectorSet set = build_nine_vectors(params);
  const DirectionSampler near_a(set.a, spec.epsilon);
  const DirectionSampler near_b(set.b, spec.epsilon);
  const DirectionSampler near_c(set.c, spec.epsilon);
  EnsembleCounts counts = detail::run_trials(
      spec.samples, spec.seed,
      [&](std::uint64_t index, Rng& rng, EnsembleCounts& c) {
        const std::any hidden = model.sample_hidden(rng);
        const RationalUnitVector3 b_dir = near_b.sample(rng);
        if (model.outcome(hidden, b_dir) != 1) return;
        ++c.accepted;
        if (index % 2 == 0) {
          const RationalUnitVector3 a_dir = near_a.sample(rng);
          ++c.measured_a;
          c.ones_a += static_cast<std::uint64_t>(model.outcome(hidden, a_dir));
        } else {
          const RationalUnitVector3 c_dir = near_c.sample(rng);
          ++c.measured_c;
          c.ones_c += static_cast<std::uint64_t>(model.outcome(hidden, c_dir));
        }
      });
  return detail::make_report(model.name(), counts, spec);
}

// Same protocol with quantum statistics: preparation along the realized
// B-direction always succeeds, and a measurement along realized direction u
// answers 1 with probability (u . b)^2 (computed exactly, then sampled).
inline EnsembleReport run_qm_reference(const FamilyParameters& params,
                                       const PrecisionSpec& spec) {
  spec.validate();
  NineVectorSet set = build_nine_vectors(params);
  const DirectionSampler near_a(set.a, spec.epsilon);
  const DirectionSampler near_b(set.b, spec.epsilon);
  const DirectionSampler near_c(set.c, spec.epsilon);
  EnsembleCounts counts = detail::run_trials(
      spec.samples, spec.seed,
      [&](std::uint64_t index, Rng& rng, EnsembleCounts& c) {
        const RationalUnitVector3 b_dir = near_b.sample(rng);
        ++c.accepted;
        const bool along_a = (index % 2 == 0);
        const RationalUnitVector3 m_dir =
            along_a ? near_a.sample(rng) : near_c.sample(rng);
        const double prob = to_double(transition_prob(m_dir, b_dir));
        const int outcome = uniform_double01(rng) < prob ? 1 : 0;
        if (along_a) {
          ++c.measured_a;
          c.ones_a += static_cast<std::uint64_t>(outcome);
        } else {
          ++c.measured_c;
          c.ones_c += static_cast<std::uint64_t>(outcome);
        }
      });
  return detail::make_report("qm-born", counts, spec);
}

struct SweepEntry {
  double epsilon = 0.0;
  std::optional<EnsembleReport> model_report;
  std::optional<EnsembleReport> qm_report;
};

struct SweepReport {
  std::string model;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::vector<SweepEntry> entries;  // strictly decreasing epsilon
};

inline void validate_sweep_epsilons(const std::vector<double>& epsilons) {
  if (epsilons.empty()) {
    throw std::invalid_argument("precision_sweep: no epsilons");
  }
  for (std::size_t i = 0; i + 1 < epsilons.size(); ++i) {
    if (!(epsilons[i] > epsilons[i + 1])) {
      throw std::invalid_argument(
          "precision_sweep: epsilons must be strictly decreasing");
    }
  }
}

// One report per epsilon for the model, with the quantum reference run
// alongside. Sub-seeds: entry k uses sub_seed(seed, 2k) for the model run and
// sub_seed(seed, 2k+1) for the reference run.
inline SweepReport precision_sweep(const NCHVModel& model,
                                   const FamilyParameters& params,
                                   const std::vector<double>& epsilons,
                                   std::uint64_t samples, std::uint64_t seed) {
  validate_sweep_epsilons(epsilons);
  SweepReport sweep;
  sweep.model = model.name();
  sweep.samples = samples;
  sweep.seed = seed;
  for (std::size_t k = 0; k < epsilons.size(); ++k) {
    SweepEntry entry;
    entry.epsilon = epsilons[k];
    entry.model_report = run_nchv_experiment(
        model, params, PrecisionSpec{epsilons[k], samples, sub_seed(seed, 2 * k)});
    entry.qm_report = run_qm_reference(
        params, PrecisionSpec{epsilons[k], samples, sub_seed(seed, 2 * k + 1)});
    sweep.entries.push_back(std::move(entry));
  }
  return sweep;
}

// Reference-only sweep (same sub-seed lane as the reference runs above).
inline SweepReport qm_reference_sweep(const FamilyParameters& params,
                                      const std::vector<double>& epsilons,
                                      std::uint64_t samples,
                                      std::uint64_t seed) {
  validate_sweep_epsilons(epsilons);
  SweepReport sweep;
  sweep.model = "qm-born";
  sweep.samples = samples;
  sweep.seed = seed;
  for (std::size_t k = 0; k < epsilons.size(); ++k) {
    SweepEntry entry;
    entry.epsilon = epsilons[k];
    entry.qm_report = run_qm_reference(
        params, PrecisionSpec{epsilons[k], samples, sub_seed(seed, 2 * k + 1)});
    sweep.entries.push_back(std::move(entry));
  }
  return sweep;
}

}  // namespace kscheck
