#include "meanspin/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "meanspin/entropy.hpp"
#include "meanspin/qstate.hpp"

namespace meanspin {

namespace {

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream)
    : seed_(seed), stream_(stream), state_(mix64(seed + kGolden * (stream + 1))) {}

std::uint64_t RngStream::next_u64() {
  state_ += kGolden;
  return mix64(state_);
}

double RngStream::next_uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::next_normal() {
  if (has_cached_normal_) {
    has_cached_normal_ = false;
    return cached_normal_;
  }
  // Box-Muller; shift the first uniform off zero so the log is finite.
  const double u1 = 1.0 - next_uniform();
  const double u2 = next_uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  cached_normal_ = radius * std::sin(angle);
  has_cached_normal_ = true;
  return radius * std::cos(angle);
}

double axis_outcome_prob(const PureTwoQubitState& psi, Atom atom, Axis axis) {
  const MeanSpinVector j = mean_spin_vector(psi, atom);
  double component = 0.0;
  switch (axis) {
    case Axis::X: component = j.jx; break;
    case Axis::Y: component = j.jy; break;
    case Axis::Z: component = j.jz; break;
  }
  return std::clamp(0.5 + component, 0.0, 1.0);
}

AxisCounts simulate_counts(const PureTwoQubitState& psi, Atom atom, Axis axis,
                           std::uint64_t shots, RngStream& rng) {
  if (shots == 0) throw std::invalid_argument("shots must be >= 1");
  const double p = axis_outcome_prob(psi, atom, axis);

  std::uint64_t plus = 0;
  if (shots <= kExactSamplingShots) {
    for (std::uint64_t i = 0; i < shots; ++i)
      if (rng.next_uniform() < p) ++plus;
  } else {
    // Normal approximation to the binomial, rounded and clamped; O(1) per
    // axis regardless of shot count.
    const double mean = static_cast<double>(shots) * p;
    const double sigma = std::sqrt(static_cast<double>(shots) * p * (1.0 - p));
    const double draw = std::round(mean + sigma * rng.next_normal());
    plus = static_cast<std::uint64_t>(
        std::clamp(draw, 0.0, static_cast<double>(shots)));
  }
  return AxisCounts{axis, shots, plus};
}

MeanSpinEstimate estimate_mean_spin(const AxisCounts& cx, const AxisCounts& cy,
                                    const AxisCounts& cz) {
  auto reduce = [](const AxisCounts& c) {
    if (c.shots == 0) throw std::invalid_argument("empty tally");
    const double p_hat =
        static_cast<double>(c.plus_count) / static_cast<double>(c.shots);
    return ComponentEstimate{
        c.axis, p_hat - 0.5,
        std::sqrt(p_hat * (1.0 - p_hat) / static_cast<double>(c.shots))};
  };
  MeanSpinEstimate est;
  est.components = {reduce(cx), reduce(cy), reduce(cz)};
  est.total_shots = cx.shots + cy.shots + cz.shots;
  return est;
}

MeasurementEstimate estimate_entropy(const MeanSpinEstimate& est) {
  MeasurementEstimate out;
  out.components = est.components;
  out.total_shots = est.total_shots;

  double norm_sq = 0.0;
  double var_sq_sum = 0.0;  // sum of (value * std_error)^2
  double se_sq_sum = 0.0;
  for (const auto& c : est.components) {
    norm_sq += c.value * c.value;
    var_sq_sum += c.value * c.value * c.std_error * c.std_error;
    se_sq_sum += c.std_error * c.std_error;
  }
  out.raw_magnitude = std::sqrt(norm_sq);
  out.magnitude_estimate = std::clamp(out.raw_magnitude, 0.0, 0.5);
  out.entropy_estimate = entropy_from_magnitude(out.magnitude_estimate);

  const double combined_se = std::sqrt(se_sq_sum);
  const double magnitude_se =
      out.raw_magnitude > 0.0 ? std::sqrt(var_sq_sum) / out.raw_magnitude : 0.0;

  const double delta = 1.96 * magnitude_se;
  const double r_low = std::clamp(out.raw_magnitude - delta, 0.0, 0.5);
  const double r_high = std::clamp(out.raw_magnitude + delta, 0.0, 0.5);
  // The entropy curve falls with r, so the magnitude interval maps reversed.
  out.entropy_low = std::clamp(entropy_from_magnitude(r_high), 0.0, 1.0);
  out.entropy_high = std::clamp(entropy_from_magnitude(r_low), 0.0, 1.0);
  if (out.raw_magnitude < combined_se) out.entropy_high = 1.0;

  return out;
}

PureTwoQubitState haar_random_state(RngStream& rng) {
  std::array<Complex, 4> amps;
  for (auto& a : amps) a = Complex(rng.next_normal(), rng.next_normal());
  return make_state(amps, /*auto_renormalize=*/true);
}

MeasurementRun measure_state(const PureTwoQubitState& psi, Atom atom,
                             std::uint64_t shots_per_axis, std::uint64_t seed) {
  MeasurementRun run;
  const Axis axes[3] = {Axis::X, Axis::Y, Axis::Z};
  for (int i = 0; i < 3; ++i) {
    RngStream rng(seed, static_cast<std::uint64_t>(i));
    run.counts[i] = simulate_counts(psi, atom, axes[i], shots_per_axis, rng);
  }
  run.estimate =
      estimate_entropy(estimate_mean_spin(run.counts[0], run.counts[1], run.counts[2]));
  run.estimate.seed = seed;
  return run;
}

}  // namespace meanspin
