#include "ebchan/channel.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "ebchan/errors.hpp"
#include "ebchan/tolerances.hpp"

namespace ebchan {

QubitChannelAffine QubitChannelAffine::diagonal(const Vec3& lambda, const Vec3& n) {
    return QubitChannelAffine{n, diag3(lambda)};
}

Vec3 QubitChannelAffine::apply(const BlochVector& r) const noexcept {
    Vec3 out = matvec(m, r);
    for (int i = 0; i < 3; ++i) out[i] += n[i];
    return out;
}

ComplexMatrix QubitChannelAffine::apply(const ComplexMatrix& op) const {
    if (op.dim() != 2) throw DimensionMismatch("QubitChannelAffine::apply expects a 2x2 operator");
    const OperatorBasis paulis = pauli_basis();
    const Complex identity_part = 0.5 * op.trace();
    std::array<Complex, 3> a{};
    for (int i = 0; i < 3; ++i) a[i] = 0.5 * trace_of_product(op, paulis.ops[i]);

    ComplexMatrix out = ComplexMatrix::identity(2) * identity_part;
    for (int j = 0; j < 3; ++j) {
        Complex coeff = identity_part * n[j];
        for (int i = 0; i < 3; ++i) coeff += m[j][i] * a[i];
        out += paulis.ops[j] * coeff;
    }
    return out;
}

QuditAffineMap QuditAffineMap::identity(std::size_t d) {
    QuditAffineMap map;
    map.d = d;
    map.n.assign(map.size(), 0.0);
    map.m.assign(map.size() * map.size(), 0.0);
    for (std::size_t i = 0; i < map.size(); ++i) map.at(i, i) = 1.0;
    return map;
}

QuditAffineMap QuditAffineMap::diagonal(std::size_t d, std::vector<double> lambda, std::vector<double> n) {
    QuditAffineMap map;
    map.d = d;
    if (lambda.size() != map.size() || n.size() != map.size()) {
        throw DimensionMismatch("QuditAffineMap::diagonal: expected " + std::to_string(map.size()) + " entries");
    }
    map.n = std::move(n);
    map.m.assign(map.size() * map.size(), 0.0);
    for (std::size_t i = 0; i < map.size(); ++i) map.at(i, i) = lambda[i];
    return map;
}

void QuditAffineMap::validate() const {
    if (d < 2) throw BadDimension("QuditAffineMap: d must be >= 2");
    if (n.size() != size() || m.size() != size() * size()) {
        throw DimensionMismatch("QuditAffineMap: expected n of length " + std::to_string(size()) +
                                " and M of " + std::to_string(size() * size()) + " entries");
    }
    const auto finite = [](double x) { return std::isfinite(x); };
    if (!std::all_of(n.begin(), n.end(), finite) || !std::all_of(m.begin(), m.end(), finite)) {
        throw NonFinite("QuditAffineMap: non-finite entry");
    }
}

ComplexMatrix singlet_state() {
    const OperatorBasis paulis = pauli_basis();
    const ComplexMatrix id = ComplexMatrix::identity(2);
    ComplexMatrix psi = kron(id, id);
    for (const auto& s : paulis.ops) psi -= kron(s, s);
    return psi * Complex(0.25);
}

ChoiState choi(const QubitChannelAffine& phi) {
    // The singlet is 1/4 sum_a c_a s_a (x) s_a with c = (1, -1, -1, -1);
    // the channel acts on the first factor only.
    const OperatorBasis paulis = pauli_basis();
    const ComplexMatrix id = ComplexMatrix::identity(2);
    ChoiState out;
    out.m = kron(phi.apply(id), id);
    for (const auto& s : paulis.ops) out.m -= kron(phi.apply(s), s);
    out.m *= 0.25;
    return out;
}

CptpReport validate_cptp(const QubitChannelAffine& phi) {
    CptpReport report;
    report.min_choi_eig = hermitian_eigenvalues(choi(phi).m).min();
    report.is_cp = report.min_choi_eig >= -tol::kCompletePositivity;
    return report;
}

namespace {

constexpr std::array<std::array<int, 3>, 6> kPermutations{{
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
}};

int permutation_parity(const std::array<int, 3>& p) noexcept {
    int inversions = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (p[i] > p[j]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

double trace3(const Mat3& a) noexcept { return a[0][0] + a[1][1] + a[2][2]; }

}  // namespace

CanonicalDecomposition canonical_form(const QubitChannelAffine& phi) {
    const Svd3 svd = svd3(phi.m);
    const Vec3 values = svd.signed_values();

    // Any column permutation with paired sign flips of (u, v) that keeps both
    // frames in SO(3) reproduces m. Pick the frames closest to the identity so
    // that already-diagonal maps come back untouched.
    CanonicalDecomposition best;
    double best_score = -1e300;
    int best_negatives = 4;
    for (const auto& perm : kPermutations) {
        const int parity = permutation_parity(perm);
        for (int a_mask = 0; a_mask < 8; ++a_mask) {
            for (int b_mask = 0; b_mask < 8; ++b_mask) {
                Vec3 a{};
                Vec3 b{};
                int a_prod = 1;
                int b_prod = 1;
                for (int i = 0; i < 3; ++i) {
                    a[i] = (a_mask >> i) & 1 ? -1.0 : 1.0;
                    b[i] = (b_mask >> i) & 1 ? -1.0 : 1.0;
                    a_prod *= static_cast<int>(a[i]);
                    b_prod *= static_cast<int>(b[i]);
                }
                if (parity * a_prod != 1 || parity * b_prod != 1) continue;

                Mat3 u{};
                Mat3 v{};
                Vec3 lambda{};
                for (int j = 0; j < 3; ++j) {
                    for (int i = 0; i < 3; ++i) {
                        u[i][j] = svd.u[i][perm[j]] * a[j];
                        v[i][j] = svd.v[i][perm[j]] * b[j];
                    }
                    lambda[j] = values[perm[j]] * a[j] * b[j];
                }
                const double score = trace3(u) + trace3(v);
                const int negatives = static_cast<int>(std::count_if(lambda.begin(), lambda.end(),
                                                                     [](double x) { return x < 0.0; }));
                const bool better = score > best_score + 1e-12 ||
                                    (std::abs(score - best_score) <= 1e-12 && negatives < best_negatives);
                if (better) {
                    best_score = score;
                    best_negatives = negatives;
                    best.lambda = lambda;
                    best.r_post = u;
                    best.r_pre = transpose(v);
                }
            }
        }
    }
    best.n = matvec(transpose(best.r_post), phi.n);
    return best;
}

QubitChannelAffine compose(const QubitChannelAffine& outer, const QubitChannelAffine& inner) noexcept {
    QubitChannelAffine out;
    out.m = matmul(outer.m, inner.m);
    out.n = outer.apply(inner.n);
    return out;
}

QubitChannelAffine unitary_channel(const Vec3& axis, double angle) {
    const double len = norm(axis);
    if (!std::isfinite(len) || std::abs(len - 1.0) > tol::kAxis) {
        throw BadAxis("unitary_channel: axis must be a unit vector, |axis| = " + std::to_string(len));
    }
    if (!std::isfinite(angle)) throw NonFinite("unitary_channel: non-finite angle");
    const Vec3 k{axis[0] / len, axis[1] / len, axis[2] / len};
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    const double t = 1.0 - c;
    // Rodrigues' formula.
    QubitChannelAffine out;
    out.m = Mat3{{
        {c + t * k[0] * k[0], t * k[0] * k[1] - s * k[2], t * k[0] * k[2] + s * k[1]},
        {t * k[1] * k[0] + s * k[2], c + t * k[1] * k[1], t * k[1] * k[2] - s * k[0]},
        {t * k[2] * k[0] - s * k[1], t * k[2] * k[1] + s * k[0], c + t * k[2] * k[2]},
    }};
    return out;
}

ComplexMatrix apply_qudit_map(const QuditAffineMap& map, const ComplexMatrix& rho, GellMannOrdering ordering) {
    map.validate();
    if (rho.dim() != map.d) {
        throw DimensionMismatch("apply_qudit_map: map has d = " + std::to_string(map.d) + ", state has dim " +
                                std::to_string(rho.dim()));
    }
    const CoherenceVector x = coherence_from_state(rho, map.d, ordering);
    CoherenceVector out{map.d, map.n};
    for (std::size_t i = 0; i < map.size(); ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < map.size(); ++j) acc += map.at(i, j) * x.x[j];
        out.x[i] += acc;
    }
    return state_from_coherence(out, ordering);
}

}  // namespace ebchan
