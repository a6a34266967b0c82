#include "ebchan/ebtest.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ebchan/errors.hpp"
#include "ebchan/tolerances.hpp"

namespace ebchan {

const char* to_string(EbMethod method) noexcept {
    switch (method) {
        case EbMethod::NumericPPT: return "NumericPPT";
        case EbMethod::Theorem1: return "Theorem1";
        case EbMethod::Theorem2: return "Theorem2";
        case EbMethod::Theorem3: return "Theorem3";
    }
    return "unknown";
}

const char* to_string(SebClass value) noexcept {
    switch (value) {
        case SebClass::NotEB: return "NotEB";
        case SebClass::SEBByTheorem4: return "SEBByTheorem4";
        case SebClass::EBUnknownAmendability: return "EBUnknownAmendability";
    }
    return "unknown";
}

double ppt_margin(const QubitChannelAffine& phi) {
    return hermitian_eigenvalues(partial_transpose(choi(phi).m, 2, 2)).min();
}

EBVerdict is_eb_numeric(const QubitChannelAffine& phi) {
    const ChoiState state = choi(phi);
    EBVerdict verdict;
    verdict.choi_min_eig = hermitian_eigenvalues(state.m).min();
    if (verdict.choi_min_eig < -tol::kCompletePositivity) {
        throw NotCP("channel is not completely positive: min Choi eigenvalue " +
                    std::to_string(verdict.choi_min_eig));
    }
    verdict.margin = hermitian_eigenvalues(partial_transpose(state.m, 2, 2)).min();
    verdict.is_eb = verdict.margin >= -tol::kEbMargin;
    verdict.method = EbMethod::NumericPPT;
    return verdict;
}

std::vector<double> ppt_margins(std::span<const QubitChannelAffine> channels) {
    std::vector<double> out(channels.size());
    const auto count = static_cast<std::ptrdiff_t>(channels.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t k = 0; k < count; ++k) out[k] = ppt_margin(channels[k]);
    return out;
}

std::vector<double> ppt_margins_serial(std::span<const QubitChannelAffine> channels) {
    std::vector<double> out;
    out.reserve(channels.size());
    for (const auto& phi : channels) out.push_back(ppt_margin(phi));
    return out;
}

SpectrumPair unital_spectra(const Vec3& lambda) noexcept {
    const auto [l1, l2, l3] = lambda;
    SpectrumPair s;
    s.rho = {(1 + l1 - l2 - l3) / 4, (1 - l1 + l2 - l3) / 4, (1 - l1 - l2 + l3) / 4, (1 + l1 + l2 + l3) / 4};
    s.pt = {(1 - l1 - l2 - l3) / 4, (1 - l1 + l2 + l3) / 4, (1 + l1 - l2 + l3) / 4, (1 + l1 + l2 - l3) / 4};
    return s;
}

bool unital_eb_condition(const Vec3& lambda) noexcept {
    return std::abs(lambda[0]) + std::abs(lambda[1]) + std::abs(lambda[2]) <= 1.0 + tol::kClosedForm;
}

bool unital_nonnegativity_condition(const Vec3& lambda) noexcept {
    const auto [l1, l2, l3] = lambda;
    const double lhs = std::min((1 - l3) * (1 - l3), (1 + l3) * (1 + l3));
    const double rhs = std::max((l1 - l2) * (l1 - l2), (l1 + l2) * (l1 + l2));
    return lhs >= rhs - tol::kClosedForm;
}

std::array<double, 4> lambda1_zero_spectrum(double lambda2, double lambda3, const Vec3& n) noexcept {
    const double lambda_sq = lambda2 * lambda2 + lambda3 * lambda3;
    const double n_sq = dot(n, n);
    const double cross_term = std::sqrt(lambda2 * lambda2 * lambda3 * lambda3 + lambda2 * lambda2 * n[1] * n[1] +
                                        lambda3 * lambda3 * n[2] * n[2]);
    const double inner = std::sqrt(std::max(0.0, lambda_sq + n_sq - 2 * cross_term));
    const double outer = std::sqrt(lambda_sq + n_sq + 2 * cross_term);
    return {(1 - inner) / 4, (1 + inner) / 4, (1 - outer) / 4, (1 + outer) / 4};
}

namespace {

void require_axis(int axis) {
    if (axis < 0 || axis > 2) throw PreconditionViolated("axis must be 0, 1 or 2, got " + std::to_string(axis));
}

// (l_b, l_c, l_a) with the translation axis a moved last.
Vec3 move_axis_last(const Vec3& lambda, int axis) {
    switch (axis) {
        case 0: return {lambda[1], lambda[2], lambda[0]};
        case 1: return {lambda[0], lambda[2], lambda[1]};
        default: return lambda;
    }
}

}  // namespace

bool theorem3_condition(const Vec3& lambda, double n_axis, int axis) {
    require_axis(axis);
    const auto [l1, l2, l3] = move_axis_last(lambda, axis);
    const double lhs = std::min(1 - l3, 1 + l3);
    const double rhs = std::max(std::hypot(l1 + l2, n_axis), std::hypot(l1 - l2, n_axis));
    return lhs >= rhs - tol::kClosedForm;
}

bool theorem3_condition(const Vec3& lambda, const Vec3& n) {
    int axis = 2;
    int nonzero = 0;
    for (int i = 0; i < 3; ++i) {
        if (n[i] != 0.0) {
            axis = i;
            ++nonzero;
        }
    }
    if (nonzero > 1) {
        throw PreconditionViolated("theorem3_condition: translation has more than one nonzero component");
    }
    return theorem3_condition(lambda, n[axis], axis);
}

SpectrumPair theorem3_spectra(const Vec3& lambda, double n_axis, int axis) {
    require_axis(axis);
    const auto [l1, l2, l3] = move_axis_last(lambda, axis);
    const double diff = std::hypot(l1 - l2, n_axis);
    const double sum = std::hypot(l1 + l2, n_axis);
    SpectrumPair s;
    s.rho = {(1 - l3 - diff) / 4, (1 - l3 + diff) / 4, (1 + l3 - sum) / 4, (1 + l3 + sum) / 4};
    s.pt = {(1 - l3 - sum) / 4, (1 - l3 + sum) / 4, (1 + l3 - diff) / 4, (1 + l3 + diff) / 4};
    return s;
}

ClosedFormVerdict closed_form_verdict(const CanonicalDecomposition& canonical) {
    const auto& lambda = canonical.lambda;
    Vec3 n = canonical.n;
    int translated_axes = 0;
    int axis = 2;
    for (int i = 0; i < 3; ++i) {
        if (std::abs(n[i]) <= tol::kVanishingTranslation) {
            n[i] = 0.0;
        } else {
            ++translated_axes;
            axis = i;
        }
    }
    const bool vanishing_lambda = std::any_of(lambda.begin(), lambda.end(),
                                              [](double l) { return std::abs(l) <= tol::kVanishingLambda; });

    ClosedFormVerdict out;
    if (translated_axes == 0) {
        out.theorem = EbMethod::Theorem1;
        out.is_eb = unital_eb_condition(lambda);
    } else if (vanishing_lambda) {
        out.theorem = EbMethod::Theorem2;
        out.is_eb = true;
    } else if (translated_axes == 1) {
        out.theorem = EbMethod::Theorem3;
        out.is_eb = theorem3_condition(lambda, n[axis], axis);
    }
    return out;
}

SebClass classify_seb(const QubitChannelAffine& phi) {
    if (!is_eb_numeric(phi).is_eb) return SebClass::NotEB;
    const Vec3 lambda = canonical_form(phi).lambda;
    const bool vanishing = std::any_of(lambda.begin(), lambda.end(),
                                       [](double l) { return std::abs(l) <= tol::kVanishingLambda; });
    return vanishing ? SebClass::SEBByTheorem4 : SebClass::EBUnknownAmendability;
}

}  // namespace ebchan
