#include "meanspin/schmidt.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "meanspin/qstate.hpp"

namespace meanspin {

namespace {

SingleQubitState orthogonal_complement(const SingleQubitState& s) {
  return SingleQubitState{-std::conj(s.down), std::conj(s.up)};
}

void normalize(SingleQubitState& s) {
  const double n = std::sqrt(s.norm_sq());
  s.up /= n;
  s.down /= n;
}

// Rotate the pair so the larger-modulus component of u is real nonnegative;
// the compensating phase goes into v, leaving u x v unchanged.
void fix_phase(SingleQubitState& u, SingleQubitState& v) {
  const Complex lead =
      std::norm(u.up) >= std::norm(u.down) ? u.up : u.down;
  const double mag = std::abs(lead);
  if (mag == 0.0) return;
  const Complex phase = lead / mag;
  u.up /= phase;
  u.down /= phase;
  v.up *= phase;
  v.down *= phase;
}

}  // namespace

SchmidtDecomposition schmidt_decompose(const PureTwoQubitState& psi) {
  // M[a][b] = amps[2a + b]; A = M^dagger M is Hermitian PSD with unit trace.
  const Complex m00 = psi.amps[0], m01 = psi.amps[1];
  const Complex m10 = psi.amps[2], m11 = psi.amps[3];

  const double a = std::norm(m00) + std::norm(m10);
  const double d = std::norm(m01) + std::norm(m11);
  const Complex b = std::conj(m00) * m01 + std::conj(m10) * m11;

  const double half_diff = 0.5 * (a - d);
  const double w = std::sqrt(half_diff * half_diff + std::norm(b));
  const double lp = 0.5 * (a + d) + w;
  const double lm = 0.5 * (a + d) - w;

  // Eigenvector of A for the larger eigenvalue: both algebraic candidates
  // solve (A - lp)w = 0; take the better-conditioned one. When both vanish
  // A is (numerically) a multiple of the identity and any basis works.
  SingleQubitState wp;
  {
    const Complex cand1_up = b, cand1_dn = Complex(lp - a, 0.0);
    const Complex cand2_up = Complex(lp - d, 0.0), cand2_dn = std::conj(b);
    const double n1 = std::norm(cand1_up) + std::norm(cand1_dn);
    const double n2 = std::norm(cand2_up) + std::norm(cand2_dn);
    if (std::max(n1, n2) < 1e-30) {
      wp = SingleQubitState{Complex(1, 0), Complex(0, 0)};
    } else if (n1 >= n2) {
      wp = SingleQubitState{cand1_up, cand1_dn};
    } else {
      wp = SingleQubitState{cand2_up, cand2_dn};
    }
    normalize(wp);
  }
  const SingleQubitState wm = orthogonal_complement(wp);

  SchmidtDecomposition out;
  out.c1 = std::sqrt(std::clamp(lp, 0.0, 1.0));
  out.c2 = std::sqrt(std::clamp(lm, 0.0, 1.0));
  out.degenerate = (out.c1 - out.c2) <= kDegeneracyTolerance;

  // Schmidt atom-2 vectors are the conjugated right singular vectors.
  out.v1 = SingleQubitState{std::conj(wp.up), std::conj(wp.down)};
  out.v2 = SingleQubitState{std::conj(wm.up), std::conj(wm.down)};

  auto left_vector = [&](const SingleQubitState& right, double c) {
    return SingleQubitState{(m00 * right.up + m01 * right.down) / c,
                            (m10 * right.up + m11 * right.down) / c};
  };
  out.u1 = left_vector(wp, out.c1);
  normalize(out.u1);
  if (out.c2 > kZeroNormFloor) {
    out.u2 = left_vector(wm, out.c2);
    normalize(out.u2);
  } else {
    // Product state: the second left vector is unconstrained; complete the
    // basis explicitly.
    out.c2 = 0.0;
    out.u2 = orthogonal_complement(out.u1);
  }

  fix_phase(out.u1, out.v1);
  fix_phase(out.u2, out.v2);
  return out;
}

PureTwoQubitState reconstruct(const SchmidtDecomposition& d) {
  if (d.c2 < 0.0 || d.c1 < d.c2)
    throw std::invalid_argument("Schmidt coefficients must satisfy c1 >= c2 >= 0");
  if (std::abs(d.c1 * d.c1 + d.c2 * d.c2 - 1.0) > kTraceTolerance)
    throw std::invalid_argument("Schmidt coefficients must satisfy c1^2 + c2^2 = 1");
  if (std::abs(d.u1.norm_sq() - 1.0) > kNormTolerance ||
      std::abs(d.u2.norm_sq() - 1.0) > kNormTolerance ||
      std::abs(d.v1.norm_sq() - 1.0) > kNormTolerance ||
      std::abs(d.v2.norm_sq() - 1.0) > kNormTolerance)
    throw std::invalid_argument("Schmidt basis states must be normalized");
  if (std::abs(inner(d.u1, d.u2)) > kOrthogonalityTolerance ||
      std::abs(inner(d.v1, d.v2)) > kOrthogonalityTolerance)
    throw std::invalid_argument("Schmidt basis states must be orthogonal");

  std::array<Complex, 4> amps;
  const SingleQubitState* us[2] = {&d.u1, &d.u2};
  const SingleQubitState* vs[2] = {&d.v1, &d.v2};
  const double cs[2] = {d.c1, d.c2};
  for (int row = 0; row < 2; ++row) {
    for (int col = 0; col < 2; ++col) {
      Complex s = 0.0;
      for (int i = 0; i < 2; ++i) {
        const Complex ua = row == 0 ? us[i]->up : us[i]->down;
        const Complex vb = col == 0 ? vs[i]->up : vs[i]->down;
        s += cs[i] * ua * vb;
      }
      amps[2 * row + col] = s;
    }
  }
  return make_state(amps);
}

std::pair<double, double> schmidt_probs_from_magnitude(double r) {
  if (r < -kClampTolerance || r > 0.5 + kClampTolerance)
    throw std::invalid_argument("magnitude must lie in [0, 1/2]");
  r = std::clamp(r, 0.0, 0.5);
  const double p1 = 0.5 + r;
  // 1 - p1 is exact for p1 in [1/2, 1], so the pair sums to 1 exactly.
  return {p1, 1.0 - p1};
}

}  // namespace meanspin
