#include "meanspin/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "meanspin/qstate.hpp"

namespace meanspin {

double binary_entropy_bits(double p) {
  if (!std::isfinite(p) || p < -kClampTolerance || p > 1.0 + kClampTolerance)
    throw std::invalid_argument("probability must lie in [0, 1]");
  p = std::clamp(p, 0.0, 1.0);
  const double q = 1.0 - p;
  double s = 0.0;
  if (p > 0.0) s -= p * std::log2(p);
  if (q > 0.0) s -= q * std::log2(q);
  return s;
}

double entropy_eigen(const DensityMatrix1Q& rho) {
  const Mat2& m = rho.matrix;
  if (max_abs_diff(m, m.adjoint()) > kHermitianTolerance)
    throw std::invalid_argument("density matrix must be Hermitian");
  const Complex tr = m.trace();
  if (std::abs(tr - Complex(1.0, 0.0)) > kTraceTolerance)
    throw std::invalid_argument("density matrix must have unit trace");

  // Eigenvalues of a 2x2 Hermitian matrix in closed form.
  const double half_tr = 0.5 * tr.real();
  const double disc = half_tr * half_tr - m.det().real();
  const double w = std::sqrt(std::max(disc, 0.0));
  const double lo = half_tr - w;
  if (lo < -kPsdTolerance)
    throw std::invalid_argument("density matrix must be positive semidefinite");

  // Rounding can push eigenvalues a hair outside [0, 1]; clamp before the log.
  const double hi = std::clamp(half_tr + w, 0.0, 1.0);
  return binary_entropy_bits(hi);
}

double entropy_from_magnitude(double r) {
  if (!std::isfinite(r) || r < -kClampTolerance || r > 0.5 + kClampTolerance)
    throw std::invalid_argument("magnitude must lie in [0, 1/2]");
  r = std::clamp(r, 0.0, 0.5);
  return binary_entropy_bits(0.5 + r);
}

Entanglement classify_entanglement(double r, double eps) {
  if (eps <= 0.0) throw std::invalid_argument("eps must be positive");
  if (!std::isfinite(r) || r < -kClampTolerance || r > 0.5 + kClampTolerance)
    throw std::invalid_argument("magnitude must lie in [0, 1/2]");
  r = std::clamp(r, 0.0, 0.5);
  return r >= 0.5 - eps ? Entanglement::Unentangled : Entanglement::Entangled;
}

EntropyReport analyze(const PureTwoQubitState& psi) {
  EntropyReport rep;
  rep.magnitude_atom1 = spin_magnitude(mean_spin_vector(psi, Atom::One));
  rep.magnitude_atom2 = spin_magnitude(mean_spin_vector(psi, Atom::Two));
  rep.s_eigen_atom1 = entropy_eigen(partial_trace(psi, Atom::One));
  rep.s_eigen_atom2 = entropy_eigen(partial_trace(psi, Atom::Two));
  rep.s_from_magnitude = entropy_from_magnitude(rep.magnitude_atom1);
  rep.entangled =
      classify_entanglement(rep.magnitude_atom1) == Entanglement::Entangled;
  return rep;
}

}  // namespace meanspin
