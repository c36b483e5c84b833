#pragma once

#include <string>
#include <vector>

#include "meanspin/types.hpp"

namespace meanspin {

/// Matrix of J_axis in the {|+1/2>, |-1/2>} basis (hbar = 1).
/// J_z is diagonal (1/2, -1/2); J_x and J_y are the off-diagonal pair.
SpinOperator spin_operator(Axis axis);

/// ab - ba.
Mat2 commutator(const Mat2& a, const Mat2& b);

/// Validate amplitudes and build a state. Rejects non-finite entries always;
/// rejects norm deviating from 1 beyond kNormTolerance unless
/// `auto_renormalize` is set, in which case any norm above kZeroNormFloor is
/// accepted and divided out.
PureTwoQubitState make_state(const std::array<Complex, 4>& amps,
                             bool auto_renormalize = false);

SingleQubitState make_single_qubit_state(Complex up, Complex down,
                                         bool auto_renormalize = false);

/// Product state of two single-atom states under the fixed basis order.
/// Inputs must be normalized within kNormTolerance unless `auto_renormalize`.
PureTwoQubitState tensor_product_state(const SingleQubitState& s1,
                                       const SingleQubitState& s2,
                                       bool auto_renormalize = false);

struct SuperposeResult {
  PureTwoQubitState state;
  /// Norm of c1*p1 + c2*p2 before the final renormalization; 1 for
  /// orthogonal inputs with normalized weights.
  double raw_norm = 1.0;
};

/// Weighted superposition c1*p1 + c2*p2, renormalized. When p1 and p2 are
/// orthogonal the weights must satisfy c1^2 + c2^2 = 1 within kNormTolerance;
/// non-orthogonal inputs are accepted and the applied correction is reported
/// in `raw_norm`. Throws when the sum cancels below kZeroNormFloor.
SuperposeResult superpose(double c1, const PureTwoQubitState& p1,
                          double c2, const PureTwoQubitState& p2);

/// Reduced state of the chosen atom: Tr_other(|psi><psi|).
DensityMatrix1Q partial_trace(const PureTwoQubitState& psi, Atom atom);

/// (<J_x>, <J_y>, <J_z>) of the chosen atom, computed as Tr(rho * J_axis)
/// through the reduced density matrix. Each trace must be real within
/// kImagResidueTolerance; a larger imaginary residue signals a corrupted
/// state and throws.
MeanSpinVector mean_spin_vector(const PureTwoQubitState& psi, Atom atom);

/// Euclidean norm of the mean spin vector. For a pure two-qubit state this
/// equals |c1^2 - c2^2| / 2 in terms of the Schmidt coefficients.
double spin_magnitude(const MeanSpinVector& j);

struct ConstraintCheck {
  std::string name;
  double residual = 0.0;
  bool pass = false;
};

struct ConstraintReport {
  std::vector<ConstraintCheck> checks;
  bool all_pass = false;
};

/// Check the algebraic constraints a valid Schmidt form must satisfy:
/// unit norm of each basis state, c1^2 + c2^2 = 1, orthogonality of the two
/// atom-1 states and of the two atom-2 states, and the modulus equalities
/// that orthogonality implies (|u1.up| = |u2.down|, |u1.down| = |u2.up|,
/// and the same for the v pair). Residuals are reported per check against
/// `tolerance`; nothing throws.
ConstraintReport validate_constraints(const SchmidtDecomposition& d,
                                      double tolerance = kNormTolerance);

}  // namespace meanspin
