#pragma once

#include "meanspin/types.hpp"

namespace meanspin {

enum class Entanglement { Entangled, Unentangled };

/// Everything the library can say about one state's entanglement, computed
/// along both routes (reduced-density-matrix eigenvalues and the mean-spin
/// magnitude formula) for both atoms.
struct EntropyReport {
  double s_eigen_atom1 = 0.0;     // bits
  double s_eigen_atom2 = 0.0;     // bits
  double s_from_magnitude = 0.0;  // bits, from atom 1's magnitude
  double magnitude_atom1 = 0.0;
  double magnitude_atom2 = 0.0;
  bool entangled = false;
};

/// -p*log2(p) - (1-p)*log2(1-p) with 0*log2(0) = 0. Inputs within
/// kClampTolerance of [0, 1] are clamped; anything further out is rejected.
double binary_entropy_bits(double p);

/// Von Neumann entropy (bits) of a single-atom density matrix from its
/// analytically computed eigenvalues. This is the reference route against
/// which the magnitude formula is verified: it never looks at mean spins.
/// Rejects input violating the DensityMatrix1Q invariants.
double entropy_eigen(const DensityMatrix1Q& rho);

/// Entropy of either partial trace directly from the magnitude r of one
/// atom's mean spin vector: binary_entropy_bits(1/2 + r). Accepts r in
/// [0, 1/2] with kClampTolerance slack.
double entropy_from_magnitude(double r);

/// Unentangled iff r >= 1/2 - eps. The default eps suits exact states;
/// noisy estimates should pass a statistically derived eps instead.
Entanglement classify_entanglement(double r, double eps = kDefaultUnentangledEps);

/// Full report for one state: both atoms' magnitudes, both eigenvalue-route
/// entropies, and the magnitude-route entropy (atom 1's magnitude).
EntropyReport analyze(const PureTwoQubitState& psi);

}  // namespace meanspin
