#pragma once

// Every numerical threshold used by the library lives here.
namespace ebchan::tol {

/// Max |m - m^dagger| entry accepted as Hermitian.
inline constexpr double kHermiticity = 1e-12;
/// Reconstruction residual for SVD / canonical form.
inline constexpr double kReconstruction = 1e-10;
/// Absolute eigenvalue accuracy of the Jacobi solver for dim <= 16.
inline constexpr double kEigen = 1e-11;
/// Jacobi stop: off-diagonal Frobenius norm (relative to max(1, |A|_F)),
/// plus a relative test on each remaining entry.
inline constexpr double kJacobiOffDiagonal = 1e-14;
inline constexpr int kJacobiMaxSweeps = 100;

/// A Choi matrix with min eigenvalue >= -kCompletePositivity is CP.
inline constexpr double kCompletePositivity = 1e-10;
/// PT margin >= -kEbMargin counts as entanglement-breaking.
inline constexpr double kEbMargin = 1e-10;
/// Smallest PT margin whose sign survives the rounding of a unit-trace Choi
/// matrix. Time-resolved analyses (onset, scans) only call a point EB once its
/// margin reaches this value.
inline constexpr double kMarginResolution = 1e-14;
/// |margin| <= kKnifeEdge is excluded from closed-form vs numeric comparisons.
inline constexpr double kKnifeEdge = 1e-9;
/// A canonical singular value at or below this counts as vanishing.
inline constexpr double kVanishingLambda = 1e-10;
/// A canonical translation component at or below this counts as zero.
inline constexpr double kVanishingTranslation = 1e-10;
/// Slack on closed-form inequalities.
inline constexpr double kClosedForm = 1e-12;

/// Trace / Hermiticity slack for accepting a matrix as a density matrix.
inline constexpr double kState = 1e-10;
/// Unit-norm slack for rotation axes.
inline constexpr double kAxis = 1e-10;
/// Reconstructed states with an eigenvalue below -kNonPositive are rejected.
inline constexpr double kNonPositive = 1e-8;

}  // namespace ebchan::tol
