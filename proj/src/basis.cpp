#include "ebchan/basis.hpp"

#include <cmath>
#include <string>

#include "ebchan/errors.hpp"
#include "ebchan/tolerances.hpp"

namespace ebchan {

const char* to_string(GellMannOrdering ordering) noexcept {
    switch (ordering) {
        case GellMannOrdering::Interleaved: return "interleaved";
        case GellMannOrdering::Grouped: return "grouped";
    }
    return "unknown";
}

OperatorBasis pauli_basis() {
    const Complex i{0.0, 1.0};
    OperatorBasis basis;
    basis.d = 2;
    basis.ops.push_back(ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}});
    basis.ops.push_back(ComplexMatrix{{0.0, -i}, {i, 0.0}});
    basis.ops.push_back(ComplexMatrix{{1.0, 0.0}, {0.0, -1.0}});
    return basis;
}

OperatorBasis gell_mann_basis(std::size_t d, GellMannOrdering ordering) {
    if (d < 2) throw BadDimension("gell_mann_basis: d must be >= 2, got " + std::to_string(d));
    const Complex i{0.0, 1.0};

    std::vector<ComplexMatrix> symmetric;
    std::vector<ComplexMatrix> antisymmetric;
    for (std::size_t j = 0; j + 1 < d; ++j)
        for (std::size_t k = j + 1; k < d; ++k) {
            ComplexMatrix s(d);
            s(j, k) = 1.0;
            s(k, j) = 1.0;
            symmetric.push_back(std::move(s));
            ComplexMatrix a(d);
            a(j, k) = -i;
            a(k, j) = i;
            antisymmetric.push_back(std::move(a));
        }

    OperatorBasis basis;
    basis.d = d;
    basis.ops.reserve(d * d - 1);
    if (ordering == GellMannOrdering::Interleaved) {
        for (std::size_t p = 0; p < symmetric.size(); ++p) {
            basis.ops.push_back(std::move(symmetric[p]));
            basis.ops.push_back(std::move(antisymmetric[p]));
        }
    } else {
        for (auto& s : symmetric) basis.ops.push_back(std::move(s));
        for (auto& a : antisymmetric) basis.ops.push_back(std::move(a));
    }

    for (std::size_t l = 1; l < d; ++l) {
        const double scale = std::sqrt(2.0 / static_cast<double>(l * (l + 1)));
        ComplexMatrix diag(d);
        for (std::size_t j = 0; j < l; ++j) diag(j, j) = scale;
        diag(l, l) = -scale * static_cast<double>(l);
        basis.ops.push_back(std::move(diag));
    }
    return basis;
}

ComplexMatrix state_from_coherence(const CoherenceVector& x, GellMannOrdering ordering) {
    if (x.d < 2 || x.x.size() != x.d * x.d - 1) {
        throw DimensionMismatch("state_from_coherence: expected " + std::to_string(x.d * x.d - 1) +
                                " coefficients for d = " + std::to_string(x.d) + ", got " +
                                std::to_string(x.x.size()));
    }
    const OperatorBasis basis = gell_mann_basis(x.d, ordering);
    ComplexMatrix rho = ComplexMatrix::identity(x.d) * Complex(1.0 / static_cast<double>(x.d));
    for (std::size_t k = 0; k < basis.ops.size(); ++k) {
        if (x.x[k] == 0.0) continue;
        rho += basis.ops[k] * Complex(0.5 * x.x[k]);
    }
    return rho;
}

namespace {

void require_state(const ComplexMatrix& rho, std::size_t d) {
    if (rho.dim() != d) {
        throw NotAState("expected a " + std::to_string(d) + "x" + std::to_string(d) + " matrix, got dim " +
                        std::to_string(rho.dim()));
    }
    const double defect = hermiticity_defect(rho);
    if (defect > tol::kState) throw NotAState("not Hermitian: defect " + std::to_string(defect));
    const Complex tr = rho.trace();
    if (std::abs(tr - 1.0) > tol::kState) throw NotAState("trace is not 1: " + std::to_string(tr.real()));
}

}  // namespace

CoherenceVector coherence_from_state(const ComplexMatrix& rho, std::size_t d, GellMannOrdering ordering) {
    require_state(rho, d);
    const OperatorBasis basis = gell_mann_basis(d, ordering);
    CoherenceVector out;
    out.d = d;
    out.x.reserve(basis.ops.size());
    for (const auto& op : basis.ops) {
        const Complex c = trace_of_product(rho, op);
        if (std::abs(c.imag()) > tol::kState) throw NotAState("coefficient has imaginary part " + std::to_string(c.imag()));
        out.x.push_back(c.real());
    }
    return out;
}

ComplexMatrix state_from_bloch(const BlochVector& r) {
    return state_from_coherence(CoherenceVector{2, {r[0], r[1], r[2]}});
}

BlochVector bloch_from_state(const ComplexMatrix& rho) {
    const CoherenceVector x = coherence_from_state(rho, 2);
    return {x.x[0], x.x[1], x.x[2]};
}

}  // namespace ebchan
