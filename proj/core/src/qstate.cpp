#include "meanspin/qstate.hpp"

#include <cmath>
#include <stdexcept>

namespace meanspin {

namespace {

bool all_finite(const std::array<Complex, 4>& amps) {
  for (const auto& a : amps)
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) return false;
  return true;
}

}  // namespace

SpinOperator spin_operator(Axis axis) {
  const Complex h(0.5, 0.0);
  Mat2 m;
  switch (axis) {
    case Axis::X:
      m(0, 1) = h;
      m(1, 0) = h;
      break;
    case Axis::Y:
      m(0, 1) = Complex(0.0, -0.5);
      m(1, 0) = Complex(0.0, 0.5);
      break;
    case Axis::Z:
      m(0, 0) = h;
      m(1, 1) = -h;
      break;
  }
  return SpinOperator{m, axis};
}

Mat2 commutator(const Mat2& a, const Mat2& b) { return a * b - b * a; }

PureTwoQubitState make_state(const std::array<Complex, 4>& amps,
                             bool auto_renormalize) {
  if (!all_finite(amps))
    throw std::invalid_argument("state amplitudes must be finite");
  PureTwoQubitState psi{amps};
  const double n = std::sqrt(psi.norm_sq());
  if (std::abs(n - 1.0) <= kNormTolerance) {
    // Snap to unit norm even inside the tolerance window.
    for (auto& a : psi.amps) a /= n;
    return psi;
  }
  if (!auto_renormalize)
    throw std::invalid_argument("state norm " + std::to_string(n) +
                                " deviates from 1 beyond tolerance");
  if (n < kZeroNormFloor)
    throw std::invalid_argument("state norm below representable floor");
  for (auto& a : psi.amps) a /= n;
  return psi;
}

SingleQubitState make_single_qubit_state(Complex up, Complex down,
                                         bool auto_renormalize) {
  if (!std::isfinite(up.real()) || !std::isfinite(up.imag()) ||
      !std::isfinite(down.real()) || !std::isfinite(down.imag()))
    throw std::invalid_argument("state amplitudes must be finite");
  SingleQubitState s{up, down};
  const double n = std::sqrt(s.norm_sq());
  if (std::abs(n - 1.0) > kNormTolerance) {
    if (!auto_renormalize)
      throw std::invalid_argument("single-qubit norm " + std::to_string(n) +
                                  " deviates from 1 beyond tolerance");
    if (n < kZeroNormFloor)
      throw std::invalid_argument("single-qubit norm below representable floor");
  }
  s.up /= n;
  s.down /= n;
  return s;
}

PureTwoQubitState tensor_product_state(const SingleQubitState& s1,
                                       const SingleQubitState& s2,
                                       bool auto_renormalize) {
  auto check = [&](const SingleQubitState& s, const char* which) {
    const double n = std::sqrt(s.norm_sq());
    if (std::abs(n - 1.0) > kNormTolerance && !auto_renormalize)
      throw std::invalid_argument(std::string(which) +
                                  " input is not normalized");
  };
  check(s1, "atom-1");
  check(s2, "atom-2");
  std::array<Complex, 4> amps{
      s1.up * s2.up,
      s1.up * s2.down,
      s1.down * s2.up,
      s1.down * s2.down,
  };
  return make_state(amps, /*auto_renormalize=*/true);
}

SuperposeResult superpose(double c1, const PureTwoQubitState& p1,
                          double c2, const PureTwoQubitState& p2) {
  std::array<Complex, 4> amps;
  for (int k = 0; k < 4; ++k) amps[k] = c1 * p1.amps[k] + c2 * p2.amps[k];
  double raw_norm_sq = 0.0;
  for (const auto& a : amps) raw_norm_sq += std::norm(a);
  const double raw_norm = std::sqrt(raw_norm_sq);
  if (raw_norm < kZeroNormFloor)
    throw std::invalid_argument("superposition cancels to (near) zero");
  const bool orthogonal = std::abs(inner(p1, p2)) <= kNormTolerance;
  if (orthogonal && std::abs(c1 * c1 + c2 * c2 - 1.0) > kNormTolerance)
    throw std::invalid_argument(
        "weights of an orthogonal superposition must satisfy c1^2 + c2^2 = 1");
  for (auto& a : amps) a /= raw_norm;
  return SuperposeResult{PureTwoQubitState{amps}, raw_norm};
}

DensityMatrix1Q partial_trace(const PureTwoQubitState& psi, Atom atom) {
  // Index k = 2*a + b with a, b in {0, 1}: a = atom-1 row, b = atom-2 row.
  auto amp = [&](int a, int b) { return psi.amps[2 * a + b]; };
  Mat2 rho;
  if (atom == Atom::One) {
    for (int a = 0; a < 2; ++a)
      for (int a2 = 0; a2 < 2; ++a2)
        for (int b = 0; b < 2; ++b)
          rho(a, a2) += amp(a, b) * std::conj(amp(a2, b));
  } else {
    for (int b = 0; b < 2; ++b)
      for (int b2 = 0; b2 < 2; ++b2)
        for (int a = 0; a < 2; ++a)
          rho(b, b2) += amp(a, b) * std::conj(amp(a, b2));
  }
  return DensityMatrix1Q{rho};
}

MeanSpinVector mean_spin_vector(const PureTwoQubitState& psi, Atom atom) {
  const Mat2 rho = partial_trace(psi, atom).matrix;
  auto component = [&](Axis axis) {
    const Complex t = (rho * spin_operator(axis).matrix).trace();
    if (std::abs(t.imag()) > kImagResidueTolerance)
      throw std::runtime_error(
          "spin expectation has a non-negligible imaginary part; "
          "state is corrupted");
    return t.real();
  };
  return MeanSpinVector{component(Axis::X), component(Axis::Y),
                        component(Axis::Z)};
}

double spin_magnitude(const MeanSpinVector& j) {
  return std::sqrt(j.jx * j.jx + j.jy * j.jy + j.jz * j.jz);
}

ConstraintReport validate_constraints(const SchmidtDecomposition& d,
                                      double tolerance) {
  ConstraintReport report;
  auto add = [&](std::string name, double residual) {
    report.checks.push_back(
        ConstraintCheck{std::move(name), residual, residual <= tolerance});
  };

  add("u1_normalized", std::abs(d.u1.norm_sq() - 1.0));
  add("u2_normalized", std::abs(d.u2.norm_sq() - 1.0));
  add("v1_normalized", std::abs(d.v1.norm_sq() - 1.0));
  add("v2_normalized", std::abs(d.v2.norm_sq() - 1.0));
  add("weights_normalized", std::abs(d.c1 * d.c1 + d.c2 * d.c2 - 1.0));

  // Orthogonality of each local basis pair, stated as the cross-amplitude
  // identity u1.up * conj(u2.up) = -u1.down * conj(u2.down); its modulus is
  // exactly |<u2|u1>|, so it doubles as the inner-product check.
  add("u_orthogonal",
      std::abs(d.u1.up * std::conj(d.u2.up) + d.u1.down * std::conj(d.u2.down)));
  add("v_orthogonal",
      std::abs(d.v1.up * std::conj(d.v2.up) + d.v1.down * std::conj(d.v2.down)));

  // Orthogonal unit pairs swap component moduli.
  add("u_moduli_swapped_up",
      std::abs(std::norm(d.u1.up) - std::norm(d.u2.down)));
  add("u_moduli_swapped_down",
      std::abs(std::norm(d.u1.down) - std::norm(d.u2.up)));
  add("v_moduli_swapped_up",
      std::abs(std::norm(d.v1.up) - std::norm(d.v2.down)));
  add("v_moduli_swapped_down",
      std::abs(std::norm(d.v1.down) - std::norm(d.v2.up)));

  report.all_pass = true;
  for (const auto& c : report.checks) report.all_pass &= c.pass;
  return report;
}

}  // namespace meanspin
