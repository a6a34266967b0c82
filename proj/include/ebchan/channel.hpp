#pragma once

#include <cstddef>
#include <vector>

#include "ebchan/basis.hpp"
#include "ebchan/linalg.hpp"

namespace ebchan {

/// A qubit channel as an affine map on Bloch vectors, r -> n + M r.
///
/// Equivalently the 4x4 Pauli transfer matrix [[1, 0], [n, M]].
struct QubitChannelAffine {
    Vec3 n{};
    Mat3 m = identity3();

    static QubitChannelAffine identity() { return {}; }
    /// M = diag(lambda), translation n.
    static QubitChannelAffine diagonal(const Vec3& lambda, const Vec3& n = {});

    [[nodiscard]] Vec3 apply(const BlochVector& r) const noexcept;
    /// Action on a 2x2 operator (linear extension of the affine map).
    [[nodiscard]] ComplexMatrix apply(const ComplexMatrix& op) const;

    friend bool operator==(const QubitChannelAffine&, const QubitChannelAffine&) = default;
};

/// King-Ruskai form: m = r_post * diag(lambda) * r_pre, n = r_post * n_canonical.
///
/// The canonical channel r -> n_canonical + diag(lambda) r is unitarily
/// equivalent to the original. lambda is signed and keeps the axis order of
/// the frame closest to the identity.
struct CanonicalDecomposition {
    Vec3 lambda{};
    Vec3 n{};
    Mat3 r_pre = identity3();
    Mat3 r_post = identity3();

    [[nodiscard]] QubitChannelAffine as_channel() const { return QubitChannelAffine::diagonal(lambda, n); }
};

/// (Phi (x) I)(|psi><psi|) for the singlet |psi> = (|01> - |10>)/sqrt(2).
struct ChoiState {
    ComplexMatrix m{4};
};

struct CptpReport {
    bool is_cp = false;
    double min_choi_eig = 0.0;
};

/// Affine map on d-dimensional coherence vectors: x -> n + M x.
struct QuditAffineMap {
    std::size_t d = 0;
    std::vector<double> n;
    /// Row-major (d^2 - 1) x (d^2 - 1).
    std::vector<double> m;

    static QuditAffineMap identity(std::size_t d);
    static QuditAffineMap diagonal(std::size_t d, std::vector<double> lambda, std::vector<double> n);

    [[nodiscard]] std::size_t size() const noexcept { return d * d - 1; }
    double& at(std::size_t row, std::size_t col) { return m[row * size() + col]; }
    [[nodiscard]] double at(std::size_t row, std::size_t col) const { return m[row * size() + col]; }

    /// Throws DimensionMismatch on inconsistent shapes and NonFinite on NaN/Inf.
    void validate() const;
};

/// 1/4 (I(x)I - X(x)X - Y(x)Y - Z(x)Z).
ComplexMatrix singlet_state();

/// Works for non-CP maps too.
ChoiState choi(const QubitChannelAffine& phi);

CptpReport validate_cptp(const QubitChannelAffine& phi);

CanonicalDecomposition canonical_form(const QubitChannelAffine& phi);

/// outer after inner.
QubitChannelAffine compose(const QubitChannelAffine& outer, const QubitChannelAffine& inner) noexcept;

/// Rotation of the Bloch ball by `angle` about the unit vector `axis`
/// (right-handed). Throws BadAxis if |axis| deviates from 1 by more than tol::kAxis.
QubitChannelAffine unitary_channel(const Vec3& axis, double angle);

/// x' = n + M x in the chosen Gell-Mann frame; returns I/d + 1/2 x'.X.
/// Throws DimensionMismatch / NotAState on bad input.
ComplexMatrix apply_qudit_map(const QuditAffineMap& map, const ComplexMatrix& rho,
                              GellMannOrdering ordering = GellMannOrdering::Interleaved);

}  // namespace ebchan
