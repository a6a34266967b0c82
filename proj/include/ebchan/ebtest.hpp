#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "ebchan/channel.hpp"

namespace ebchan {

enum class EbMethod { NumericPPT, Theorem1, Theorem2, Theorem3 };
const char* to_string(EbMethod method) noexcept;

/// margin is the smallest eigenvalue of the partially transposed Choi state.
/// is_eb <=> margin >= -tol::kEbMargin.
struct EBVerdict {
    bool is_eb = false;
    double margin = 0.0;
    double choi_min_eig = 0.0;
    EbMethod method = EbMethod::NumericPPT;
};

enum class SebClass { NotEB, SEBByTheorem4, EBUnknownAmendability };
const char* to_string(SebClass value) noexcept;

/// Closed-form eigenvalues of the Choi state (rho) and of its partial
/// transpose (pt).
struct SpectrumPair {
    std::array<double, 4> rho{};
    std::array<double, 4> pt{};
};

/// Minimum eigenvalue of the partially transposed Choi state. No CP check.
double ppt_margin(const QubitChannelAffine& phi);

/// Numeric PPT verdict. For 2x2 systems PPT is equivalent to separability.
/// Throws NotCP if the Choi state has an eigenvalue below -tol::kCompletePositivity.
EBVerdict is_eb_numeric(const QubitChannelAffine& phi);

/// Batch PPT margins (OpenMP). Output order matches input order.
std::vector<double> ppt_margins(std::span<const QubitChannelAffine> channels);
/// Serial reference for ppt_margins.
std::vector<double> ppt_margins_serial(std::span<const QubitChannelAffine> channels);

/// Unital diagonal channel diag(lambda).
///   rho: (1+l1-l2-l3, 1-l1+l2-l3, 1-l1-l2+l3, 1+l1+l2+l3) / 4
///   pt:  (1-l1-l2-l3, 1-l1+l2+l3, 1+l1-l2+l3, 1+l1+l2-l3) / 4
SpectrumPair unital_spectra(const Vec3& lambda) noexcept;

/// |l1| + |l2| + |l3| <= 1.
bool unital_eb_condition(const Vec3& lambda) noexcept;

/// min{(1-l3)^2, (1+l3)^2} >= max{(l1-l2)^2, (l1+l2)^2}; equivalent to
/// unital_eb_condition for |l3| <= 1.
bool unital_nonnegativity_condition(const Vec3& lambda) noexcept;

/// Shared spectrum of the Choi state and its partial transpose for
/// lambda = (0, lambda2, lambda3) and arbitrary translation n.
std::array<double, 4> lambda1_zero_spectrum(double lambda2, double lambda3, const Vec3& n) noexcept;

/// EB condition for a diagonal channel whose translation lies on one axis
/// (0, 1 or 2):
///   min{1 - l_a, 1 + l_a} >= max{sqrt((l_b + l_c)^2 + n_a^2), sqrt((l_b - l_c)^2 + n_a^2)}.
bool theorem3_condition(const Vec3& lambda, double n_axis, int axis = 2);

/// Same, taking the full translation. Throws PreconditionViolated when more
/// than one component of n is nonzero.
bool theorem3_condition(const Vec3& lambda, const Vec3& n);

/// Closed-form spectra for translation n_axis on `axis` (default z).
SpectrumPair theorem3_spectra(const Vec3& lambda, double n_axis, int axis = 2);

/// Which closed-form criterion applies to the canonical form of phi, and its verdict.
struct ClosedFormVerdict {
    std::optional<EbMethod> theorem;
    bool is_eb = false;
};

/// Theorem 1 when the canonical translation vanishes, Theorem 2 when a
/// canonical lambda vanishes, Theorem 3 when the translation lies on one
/// axis; otherwise no theorem applies.
ClosedFormVerdict closed_form_verdict(const CanonicalDecomposition& canonical);

/// Strong-EB classification via a vanishing canonical lambda.
/// Throws NotCP.
SebClass classify_seb(const QubitChannelAffine& phi);

}  // namespace ebchan
