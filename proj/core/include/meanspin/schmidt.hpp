#pragma once

#include <utility>

#include "meanspin/types.hpp"

namespace meanspin {

/// Schmidt decomposition of a normalized pure two-qubit state.
///
/// The 4 amplitudes are reshaped into the 2x2 matrix M[a][b] = amplitude of
/// (atom1 = a, atom2 = b); the singular values of M, sorted descending, are
/// (c1, c2) and the singular vectors give the local bases. Implemented in
/// closed form through the eigendecomposition of M^dagger M, not a general SVD
/// routine for a fixed 2x2 problem.
///
/// Phase convention: the larger-modulus component of each u_i is made real
/// nonnegative, with the compensating phase pushed into v_i, so equal states
/// decompose into bitwise-reproducible output.
SchmidtDecomposition schmidt_decompose(const PureTwoQubitState& psi);

/// c1*(u1 x v1) + c2*(u2 x v2). Rejects input violating the
/// SchmidtDecomposition invariants (ordering, weight normalization, basis
/// orthonormality).
PureTwoQubitState reconstruct(const SchmidtDecomposition& d);

/// Invert the magnitude relation: the squared Schmidt coefficients are
/// (1/2 + r, 1/2 - r). Accepts r in [0, 1/2] with kClampTolerance slack
/// (overshoot is clamped); anything further out is rejected as an invalid
/// magnitude, e.g. an unclamped noisy estimate.
std::pair<double, double> schmidt_probs_from_magnitude(double r);

}  // namespace meanspin
