#pragma once

// Shared generators and independent oracles for the test suites.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <vector>

#include "ebchan/channel.hpp"
#include "ebchan/linalg.hpp"
#include "ebchan/random.hpp"

namespace ebchan::testing {

inline Vec3 uniform_vec3(Rng& rng, double lo, double hi) {
    return {rng.uniform(lo, hi), rng.uniform(lo, hi), rng.uniform(lo, hi)};
}

inline Mat3 uniform_mat3(Rng& rng, double lo, double hi) {
    Mat3 m{};
    for (auto& row : m)
        for (auto& x : row) x = rng.uniform(lo, hi);
    return m;
}

inline ComplexMatrix random_complex(Rng& rng, std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) m(i, j) = Complex(rng.gaussian(), rng.gaussian());
    return m;
}

inline ComplexMatrix random_hermitian(Rng& rng, std::size_t dim) {
    const ComplexMatrix a = random_complex(rng, dim);
    return (a + a.adjoint()) * Complex(0.5);
}

/// Density matrix A A^dagger / tr.
inline ComplexMatrix random_state(Rng& rng, std::size_t dim) {
    const ComplexMatrix a = random_complex(rng, dim);
    ComplexMatrix rho = a * a.adjoint();
    return rho * (Complex(1.0) / rho.trace());
}

// --- Eigen bridge: the independent eigensolver and matrix functions. -----

inline Eigen::MatrixXcd to_eigen(const ComplexMatrix& m) {
    Eigen::MatrixXcd out(m.dim(), m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j) out(i, j) = m(i, j);
    return out;
}

inline ComplexMatrix from_eigen(const Eigen::MatrixXcd& m) {
    ComplexMatrix out(static_cast<std::size_t>(m.rows()));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
    return out;
}

/// Ascending eigenvalues from Eigen's self-adjoint solver.
inline std::vector<double> oracle_eigenvalues(const ComplexMatrix& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(to_eigen(m), Eigen::EigenvaluesOnly);
    const Eigen::VectorXd v = solver.eigenvalues();
    return {v.data(), v.data() + v.size()};
}

inline double oracle_min_eigenvalue(const ComplexMatrix& m) { return oracle_eigenvalues(m).front(); }

/// Haar-ish random unitary from the QR of a Gaussian matrix.
inline ComplexMatrix random_unitary(Rng& rng, std::size_t dim) {
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(to_eigen(random_complex(rng, dim)));
    return from_eigen(qr.householderQ() * Eigen::MatrixXcd::Identity(dim, dim));
}

inline std::vector<double> sorted(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    return v;
}

inline double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double worst = a.size() == b.size() ? 0.0 : INFINITY;
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

template <std::size_t N>
std::vector<double> sorted(const std::array<double, N>& a) {
    return sorted(std::vector<double>(a.begin(), a.end()));
}

// --- Channel oracles built from Kraus operators. ------------------------

inline const std::array<ComplexMatrix, 3>& paulis() {
    static const std::array<ComplexMatrix, 3> p{
        ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}},
        ComplexMatrix{{0.0, Complex(0.0, -1.0)}, {Complex(0.0, 1.0), 0.0}},
        ComplexMatrix{{1.0, 0.0}, {0.0, -1.0}},
    };
    return p;
}

inline ComplexMatrix apply_kraus(const std::vector<ComplexMatrix>& kraus, const ComplexMatrix& rho) {
    ComplexMatrix out(rho.dim());
    for (const auto& k : kraus) out += k * rho * k.adjoint();
    return out;
}

/// Affine form of a Kraus channel: n_j = tr(s_j Phi(I)) / 2, M_ji = tr(s_j Phi(s_i)) / 2.
inline QubitChannelAffine affine_from_kraus(const std::vector<ComplexMatrix>& kraus) {
    QubitChannelAffine phi;
    const ComplexMatrix image_identity = apply_kraus(kraus, ComplexMatrix::identity(2));
    for (std::size_t j = 0; j < 3; ++j) phi.n[j] = 0.5 * trace_of_product(paulis()[j], image_identity).real();
    for (std::size_t i = 0; i < 3; ++i) {
        const ComplexMatrix image = apply_kraus(kraus, paulis()[i]);
        for (std::size_t j = 0; j < 3; ++j) phi.m[j][i] = 0.5 * trace_of_product(paulis()[j], image).real();
    }
    return phi;
}

/// Random CPTP Kraus set: G_k S^{-1/2} with S = sum G_k^dagger G_k.
inline std::vector<ComplexMatrix> random_kraus(Rng& rng, int count) {
    std::vector<ComplexMatrix> g;
    Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(2, 2);
    for (int k = 0; k < count; ++k) {
        g.push_back(random_complex(rng, 2));
        const Eigen::MatrixXcd e = to_eigen(g.back());
        s += e.adjoint() * e;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(s);
    const Eigen::MatrixXcd inv_sqrt = solver.operatorInverseSqrt();
    std::vector<ComplexMatrix> out;
    for (const auto& k : g) out.push_back(from_eigen(to_eigen(k) * inv_sqrt));
    return out;
}

/// Random CPTP qubit channel with 1 to 4 Kraus operators.
inline QubitChannelAffine random_cptp(Rng& rng) {
    const int count = 1 + static_cast<int>(rng.uniform() * 4.0);
    return affine_from_kraus(random_kraus(rng, std::min(count, 4)));
}

/// Choi state by brute force: (Phi (x) I) on the singlet projector, with Phi
/// applied to each 2x2 block |a><b| of the first factor.
inline ComplexMatrix oracle_choi(const std::vector<ComplexMatrix>& kraus) {
    const double r = 1.0 / std::sqrt(2.0);
    std::vector<Complex> psi{0.0, r, -r, 0.0};
    ComplexMatrix out(4);
    for (std::size_t a = 0; a < 2; ++a) {
        for (std::size_t b = 0; b < 2; ++b) {
            ComplexMatrix unit(2);
            unit(a, b) = 1.0;
            const ComplexMatrix image = apply_kraus(kraus, unit);
            for (std::size_t c = 0; c < 2; ++c)
                for (std::size_t d = 0; d < 2; ++d) {
                    const Complex coeff = psi[2 * a + c] * std::conj(psi[2 * b + d]);
                    for (std::size_t i = 0; i < 2; ++i)
                        for (std::size_t j = 0; j < 2; ++j) out(2 * i + c, 2 * j + d) += coeff * image(i, j);
                }
        }
    }
    return out;
}

/// Partial transpose on the second qubit by explicit index swap.
inline ComplexMatrix oracle_partial_transpose(const ComplexMatrix& m) {
    ComplexMatrix out(4);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k)
                for (std::size_t l = 0; l < 2; ++l) out(2 * i + j, 2 * k + l) = m(2 * i + l, 2 * k + j);
    return out;
}

}  // namespace ebchan::testing
