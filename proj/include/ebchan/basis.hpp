#pragma once

#include <cstddef>
#include <vector>

#include "ebchan/linalg.hpp"

namespace ebchan {

using BlochVector = Vec3;

/// Order of the generalized Gell-Mann operators.
///
/// Interleaved: (S01, A01, S02, A02, ..., S(d-2)(d-1), A(d-2)(d-1), D1, ..., D(d-1))
/// Grouped:     (S01, S02, ..., A01, A02, ..., D1, ..., D(d-1))
///
/// Sjk = |j><k| + |k><j|, Ajk = -i|j><k| + i|k><j| and
/// Dl = sqrt(2/(l(l+1))) (sum_{j<l} |j><j| - l|l><l|).
enum class GellMannOrdering { Interleaved, Grouped };

const char* to_string(GellMannOrdering ordering) noexcept;

/// d^2 - 1 Hermitian traceless d x d operators with tr(Xi Xj) = 2 delta_ij.
struct OperatorBasis {
    std::size_t d = 0;
    std::vector<ComplexMatrix> ops;
};

/// Coefficients x_i = tr(rho X_i) of a state in a Gell-Mann basis.
struct CoherenceVector {
    std::size_t d = 0;
    std::vector<double> x;
};

/// (sigma_x, sigma_y, sigma_z). Identical to gell_mann_basis(2) in either
/// ordering.
OperatorBasis pauli_basis();

/// Throws BadDimension for d < 2.
OperatorBasis gell_mann_basis(std::size_t d, GellMannOrdering ordering = GellMannOrdering::Interleaved);

/// I/d + 1/2 sum x_i X_i. Hermitian with unit trace; positivity is the
/// caller's concern. Throws DimensionMismatch if x has the wrong length.
ComplexMatrix state_from_coherence(const CoherenceVector& x,
                                   GellMannOrdering ordering = GellMannOrdering::Interleaved);

/// x_i = tr(rho X_i). Throws NotAState unless rho is d x d, Hermitian and
/// has unit trace (within tol::kState).
CoherenceVector coherence_from_state(const ComplexMatrix& rho, std::size_t d,
                                     GellMannOrdering ordering = GellMannOrdering::Interleaved);

/// 1/2 (I + r . sigma).
ComplexMatrix state_from_bloch(const BlochVector& r);

/// r_i = tr(rho sigma_i); same preconditions as coherence_from_state.
BlochVector bloch_from_state(const ComplexMatrix& rho);

}  // namespace ebchan
