#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>

namespace meanspin {

using Complex = std::complex<double>;

// Tolerances shared across the library. Values are part of the public
// contract: callers may rely on inputs within these bounds being accepted.
inline constexpr double kNormTolerance = 1e-9;        // state normalization on ingestion
inline constexpr double kHermitianTolerance = 1e-12;  // density-matrix Hermiticity
inline constexpr double kTraceTolerance = 1e-10;      // density-matrix unit trace
inline constexpr double kPsdTolerance = 1e-12;        // eigenvalue >= -kPsdTolerance
inline constexpr double kImagResidueTolerance = 1e-10;  // expectation-value imaginary part
inline constexpr double kClampTolerance = 1e-12;      // boundary clamp for probabilities/magnitudes
inline constexpr double kZeroNormFloor = 1e-12;       // destructive-cancellation floor
inline constexpr double kOrthogonalityTolerance = 1e-10;
inline constexpr double kDegeneracyTolerance = 1e-12;  // equal Schmidt coefficients
inline constexpr double kDefaultUnentangledEps = 1e-9;

enum class Axis { X, Y, Z };
enum class Atom { One = 1, Two = 2 };

inline const char* axis_name(Axis a) {
  switch (a) {
    case Axis::X: return "X";
    case Axis::Y: return "Y";
    default: return "Z";
  }
}

/// 2x2 complex matrix, row-major. Small enough that all algebra is done
/// inline by value; no external linear-algebra dependency.
struct Mat2 {
  std::array<Complex, 4> m{};  // m[2*row + col]

  Complex& operator()(int row, int col) { return m[2 * row + col]; }
  const Complex& operator()(int row, int col) const { return m[2 * row + col]; }

  static Mat2 identity() { return Mat2{{Complex(1, 0), {}, {}, Complex(1, 0)}}; }

  Mat2 adjoint() const {
    Mat2 r;
    r(0, 0) = std::conj((*this)(0, 0));
    r(0, 1) = std::conj((*this)(1, 0));
    r(1, 0) = std::conj((*this)(0, 1));
    r(1, 1) = std::conj((*this)(1, 1));
    return r;
  }

  Complex trace() const { return m[0] + m[3]; }
  Complex det() const { return m[0] * m[3] - m[1] * m[2]; }
};

inline Mat2 operator*(const Mat2& a, const Mat2& b) {
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      r(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j);
  return r;
}

inline Mat2 operator*(Complex s, const Mat2& a) {
  Mat2 r = a;
  for (auto& x : r.m) x *= s;
  return r;
}

inline Mat2 operator+(const Mat2& a, const Mat2& b) {
  Mat2 r;
  for (int i = 0; i < 4; ++i) r.m[i] = a.m[i] + b.m[i];
  return r;
}

inline Mat2 operator-(const Mat2& a, const Mat2& b) {
  Mat2 r;
  for (int i = 0; i < 4; ++i) r.m[i] = a.m[i] - b.m[i];
  return r;
}

/// Largest entrywise |a - b|.
inline double max_abs_diff(const Mat2& a, const Mat2& b) {
  double d = 0.0;
  for (int i = 0; i < 4; ++i) d = std::max(d, std::abs(a.m[i] - b.m[i]));
  return d;
}

/// One two-level atom: amplitudes of |+1/2> and |-1/2>.
struct SingleQubitState {
  Complex up{1.0, 0.0};
  Complex down{0.0, 0.0};

  double norm_sq() const { return std::norm(up) + std::norm(down); }
};

/// <a|b> in the {|+1/2>, |-1/2>} basis.
inline Complex inner(const SingleQubitState& a, const SingleQubitState& b) {
  return std::conj(a.up) * b.up + std::conj(a.down) * b.down;
}

/// Pure state of two two-level atoms. Amplitudes are stored in the fixed
/// basis order [(+,+), (+,-), (-,+), (-,-)] where the first sign is atom 1's
/// m-value; index k = 2*(atom1 is -1/2) + (atom2 is -1/2).
struct PureTwoQubitState {
  std::array<Complex, 4> amps{Complex(1, 0), {}, {}, {}};

  double norm_sq() const {
    double s = 0.0;
    for (const auto& a : amps) s += std::norm(a);
    return s;
  }
};

inline Complex inner(const PureTwoQubitState& a, const PureTwoQubitState& b) {
  Complex s = 0.0;
  for (int k = 0; k < 4; ++k) s += std::conj(a.amps[k]) * b.amps[k];
  return s;
}

/// |<a|b>|^2: phase-invariant state equality measure.
inline double fidelity(const PureTwoQubitState& a, const PureTwoQubitState& b) {
  return std::norm(inner(a, b));
}

/// Spin component operator for one atom (hbar = 1), eigenvalues +-1/2.
struct SpinOperator {
  Mat2 matrix;
  Axis axis;
};

/// Reduced 2x2 state of a single atom: Hermitian, PSD, unit trace.
struct DensityMatrix1Q {
  Mat2 matrix;
};

/// (<J_x>, <J_y>, <J_z>) for one atom, hbar = 1. Each component lies in
/// [-1/2, 1/2] and the Euclidean norm never exceeds 1/2 for valid states.
struct MeanSpinVector {
  double jx = 0.0;
  double jy = 0.0;
  double jz = 0.0;
};

/// Schmidt form c1*(u1 x v1) + c2*(u2 x v2) with c1 >= c2 >= 0 and
/// orthonormal single-atom bases {u1,u2} (atom 1) and {v1,v2} (atom 2).
/// `degenerate` marks c1 == c2 within kDegeneracyTolerance, where the basis
/// choice is not unique and the returned one is just the solver's pick.
struct SchmidtDecomposition {
  double c1 = 1.0;
  double c2 = 0.0;
  SingleQubitState u1, u2;
  SingleQubitState v1, v2;
  bool degenerate = false;
};

}  // namespace meanspin
