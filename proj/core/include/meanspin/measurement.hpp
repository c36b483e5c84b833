#pragma once

#include <array>
#include <cstdint>
#include <utility>

#include "meanspin/types.hpp"

namespace meanspin {

/// Deterministic 64-bit generator: SplitMix64 over a state derived from
/// (seed, stream). Identical (seed, stream) reproduces identical output
/// sequences bit for bit; distinct streams of one seed are decorrelated by a
/// golden-ratio offset before mixing. Cheap to construct, so give every
/// independent task its own stream id instead of sharing a generator.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next_u64();
  /// Uniform on [0, 1) with 53 random mantissa bits.
  double next_uniform();
  /// Standard normal via Box-Muller; draws two uniforms per pair and caches
  /// the second deviate.
  double next_normal();

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t state_;
  double cached_normal_ = 0.0;
  bool has_cached_normal_ = false;
};

/// Outcome tally of projective measurements of one spin component:
/// `plus_count` of `shots` gave +1/2.
struct AxisCounts {
  Axis axis = Axis::Z;
  std::uint64_t shots = 0;
  std::uint64_t plus_count = 0;
};

/// One measured spin component: sample mean of the +-1/2 outcomes and its
/// binomial standard error.
struct ComponentEstimate {
  Axis axis = Axis::Z;
  double value = 0.0;
  double std_error = 0.0;
};

struct MeanSpinEstimate {
  std::array<ComponentEstimate, 3> components;  // X, Y, Z order
  std::uint64_t total_shots = 0;
};

/// Entropy estimate propagated from finite-shot spin measurements.
struct MeasurementEstimate {
  std::array<ComponentEstimate, 3> components;  // X, Y, Z order
  double raw_magnitude = 0.0;       // unclamped Euclidean norm of estimates
  double magnitude_estimate = 0.0;  // clamped to [0, 1/2]
  double entropy_estimate = 0.0;    // bits
  double entropy_low = 0.0;         // 95% interval, clamped to [0, 1]
  double entropy_high = 0.0;
  std::uint64_t total_shots = 0;
  std::uint64_t seed = 0;
};

/// Born probability of the +1/2 outcome when measuring `axis` on `atom`:
/// p_plus = 1/2 + <J_axis>, so the sample mean of +-1/2-valued outcomes
/// estimates the spin component.
double axis_outcome_prob(const PureTwoQubitState& psi, Atom atom, Axis axis);

/// Binomial draw of plus-counts for `shots` ideal projective measurements.
/// Exact per-shot inverse transform up to kExactSamplingShots shots; a
/// normal approximation (rounded and clamped) above that. Both paths are
/// deterministic in the RngStream. Rejects shots = 0.
AxisCounts simulate_counts(const PureTwoQubitState& psi, Atom atom, Axis axis,
                           std::uint64_t shots, RngStream& rng);

inline constexpr std::uint64_t kExactSamplingShots = 10000;

/// Component estimates from one tally per axis: value = plus_count/shots - 1/2,
/// standard error = sqrt(p_hat (1 - p_hat) / shots). The three tallies must
/// come from the same state and atom; that is the caller's responsibility,
/// since counts alone cannot prove it.
MeanSpinEstimate estimate_mean_spin(const AxisCounts& cx, const AxisCounts& cy,
                                    const AxisCounts& cz);

/// Plug the estimated magnitude into the entropy formula and propagate a 95%
/// confidence interval by the delta method: the magnitude's standard error
/// is the gradient-weighted combination of the component errors, both
/// magnitude endpoints are mapped through the entropy curve, and the result
/// is clamped to [0, 1]. Near r = 0 the delta method degenerates (the norm's
/// gradient is undefined), so when the raw magnitude is below the combined
/// standard error the interval's upper end widens to 1.
MeasurementEstimate estimate_entropy(const MeanSpinEstimate& est);

/// State drawn uniformly (Haar) from the pure-state sphere: 4 independent
/// standard complex Gaussian amplitudes, normalized.
PureTwoQubitState haar_random_state(RngStream& rng);

/// Full simulated campaign: `shots_per_axis` projective measurements along
/// each of X, Y, Z on one atom (stream ids 0, 1, 2 of `seed`), reduced to a
/// MeasurementEstimate. Byte-deterministic in (psi, atom, shots, seed).
struct MeasurementRun {
  std::array<AxisCounts, 3> counts;  // X, Y, Z order
  MeasurementEstimate estimate;
};

MeasurementRun measure_state(const PureTwoQubitState& psi, Atom atom,
                             std::uint64_t shots_per_axis, std::uint64_t seed);

}  // namespace meanspin
