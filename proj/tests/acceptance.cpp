// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance                 run every criterion, print a summary
//   acceptance --criterion N   run criterion N only
//
// Exit status: 0 when every selected criterion passes, 1 on a failure, and
// kKnownUnattainable when the only failures are criteria listed in
// kDocumentedRed (reported as skipped by ctest, never as passed).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <set>
#include <string>
#include <vector>

#include "ebchan/amend.hpp"
#include "ebchan/ebtest.hpp"
#include "ebchan/markov.hpp"
#include "ebchan/random.hpp"
#include "ebchan/tolerances.hpp"

namespace {

using namespace ebchan;

constexpr int kKnownUnattainable = 77;
// The built-in two-qubit map cannot produce the published output under
// either basis ordering; see the decisions ledger.
const std::set<int> kDocumentedRed{9};

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

double max_sorted_diff(std::array<double, 4> closed, const std::vector<double>& numeric) {
    std::sort(closed.begin(), closed.end());
    double worst = 0.0;
    for (std::size_t i = 0; i < 4; ++i) worst = std::max(worst, std::abs(closed[i] - numeric[i]));
    return worst;
}

std::vector<Vec3> cp_unital_sample(std::uint64_t seed, int count) {
    Rng rng(seed);
    std::vector<Vec3> out;
    while (static_cast<int>(out.size()) < count) {
        const Vec3 l{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
        if (validate_cptp(QubitChannelAffine::diagonal(l)).is_cp) out.push_back(l);
    }
    return out;
}

Outcome closed_form_unital_spectra() {
    const auto start = std::chrono::steady_clock::now();
    const auto sample = cp_unital_sample(1001, 10000);
    double worst = 0.0;
    for (const Vec3& l : sample) {
        const ComplexMatrix rho = choi(QubitChannelAffine::diagonal(l)).m;
        const SpectrumPair s = unital_spectra(l);
        worst = std::max(worst, max_sorted_diff(s.rho, hermitian_eigenvalues(rho).values));
        worst = std::max(worst, max_sorted_diff(s.pt, hermitian_eigenvalues(partial_transpose(rho, 2, 2)).values));
    }
    const double elapsed = seconds_since(start);
    return {worst < 1e-10 && elapsed < 5.0,
            fmt("unital closed-form spectra vs eigensolver: max |err| = %.3g over %zu CP channels (< 1e-10), %.2f s (< 5 s)",
                worst, sample.size(), elapsed)};
}

Outcome unital_eb_equivalence() {
    const auto sample = cp_unital_sample(1001, 10000);
    int compared = 0, disagreements = 0;
    for (const Vec3& l : sample) {
        const EBVerdict v = is_eb_numeric(QubitChannelAffine::diagonal(l));
        if (std::abs(v.margin) <= tol::kKnifeEdge) continue;
        ++compared;
        disagreements += unital_eb_condition(l) != v.is_eb;
    }
    Rng rng(1002);
    int predicate_mismatch = 0;
    for (int k = 0; k < 100000; ++k) {
        const Vec3 l{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
        predicate_mismatch += unital_eb_condition(l) != unital_nonnegativity_condition(l);
    }
    return {disagreements == 0 && predicate_mismatch == 0,
            fmt("sum|lambda| <= 1 vs numeric PPT: %d disagreements in %d channels outside the 1e-9 band; "
                "squared-form vs sum-form predicates: %d mismatches in 100000 triples",
                disagreements, compared, predicate_mismatch)};
}

Outcome vanishing_lambda_channels() {
    Rng rng(1003);
    int count = 0, not_eb = 0;
    double worst = 0.0;
    while (count < 1000) {
        const double l2 = rng.uniform(-1, 1), l3 = rng.uniform(-1, 1);
        const Vec3 n{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
        const auto phi = QubitChannelAffine::diagonal({0.0, l2, l3}, n);
        if (!validate_cptp(phi).is_cp) continue;
        ++count;
        not_eb += !is_eb_numeric(phi).is_eb;
        const auto closed = lambda1_zero_spectrum(l2, l3, n);
        const ComplexMatrix rho = choi(phi).m;
        worst = std::max(worst, max_sorted_diff(closed, hermitian_eigenvalues(rho).values));
        worst = std::max(worst, max_sorted_diff(closed, hermitian_eigenvalues(partial_transpose(rho, 2, 2)).values));
    }
    return {not_eb == 0 && worst < 1e-10,
            fmt("lambda1 = 0: %d of %d CP channels not EB (want 0); shared closed-form spectrum max |err| = %.3g (< 1e-10)",
                not_eb, count, worst)};
}

Outcome axis_translation_channels() {
    Rng rng(1004);
    int count = 0, compared = 0, disagreements = 0;
    double worst = 0.0;
    while (count < 10000) {
        const Vec3 l{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
        const double n3 = rng.uniform(-1, 1);
        const auto phi = QubitChannelAffine::diagonal(l, {0.0, 0.0, n3});
        if (!validate_cptp(phi).is_cp) continue;
        ++count;
        const EBVerdict v = is_eb_numeric(phi);
        if (std::abs(v.margin) > tol::kKnifeEdge) {
            ++compared;
            disagreements += theorem3_condition(l, n3) != v.is_eb;
        }
        const SpectrumPair s = theorem3_spectra(l, n3);
        const ComplexMatrix rho = choi(phi).m;
        worst = std::max(worst, max_sorted_diff(s.rho, hermitian_eigenvalues(rho).values));
        worst = std::max(worst, max_sorted_diff(s.pt, hermitian_eigenvalues(partial_transpose(rho, 2, 2)).values));
    }
    return {disagreements == 0 && worst < 1e-10,
            fmt("z-axis translation: condition vs numeric PPT %d disagreements in %d channels outside the band; "
                "closed-form spectra max |err| = %.3g (< 1e-10)",
                disagreements, compared, worst)};
}

Outcome depolarization_onset() {
    const auto onset = eb_onset(Depolarization{1.0}, 10.0);
    const double err = onset ? std::abs(*onset - std::log(3.0)) : INFINITY;
    return {err < 1e-8, onset ? fmt("depolarization onset %.17g vs ln 3, |err| = %.3g (< 1e-8)", *onset, err)
                              : std::string("depolarization onset: none found (want ln 3)")};
}

Outcome decoherence_never_eb() {
    int non_negative = 0;
    double largest = -INFINITY;
    bool onset_found = false;
    for (double omega : {0.0, 5.0}) {
        const Decoherence f{1.0, omega};
        for (int k = 0; k < 1000; ++k) {
            const double t = 50.0 * k / 999.0;
            const double margin = ppt_margin(channel_at(f, t));
            largest = std::max(largest, margin);
            non_negative += !(margin < 0.0);
        }
        onset_found |= eb_onset(f, 50.0).has_value();
    }
    return {non_negative == 0 && !onset_found,
            fmt("decoherence, omega in {0, 5}: %d of 2000 sampled margins >= 0 (largest %.3g); onset %s",
                non_negative, largest, onset_found ? "found (want none)" : "none")};
}

Outcome homogenization_grid() {
    const std::vector<double> purities{0.0, 0.3, 0.7, 1.0};
    constexpr int kGrid = 50;
    int not_cp = 0, compared = 0, disagreements = 0, w1_eb = 0, antitone_violations = 0;
    int f_compared = 0, f_disagreements = 0;
    for (int i = 0; i < kGrid; ++i) {
        for (int j = 0; j < kGrid; ++j) {
            const double t = 0.1 + (5.0 - 0.1) * i / (kGrid - 1);
            const double t1 = 0.5 + (5.0 - 0.5) * j / (kGrid - 1);  // T2 = 1
            bool eb_at_lower = true;
            for (double w : purities) {
                const auto phi = channel_at(Homogenization{t1, 1.0, w, 0.0}, t);
                if (!validate_cptp(phi).is_cp) {
                    ++not_cp;
                    continue;
                }
                const EBVerdict v = is_eb_numeric(phi);
                const bool closed = theorem3_homog_condition(t, t1, 1.0, w);
                if (std::abs(v.margin) > tol::kKnifeEdge) {
                    ++compared;
                    disagreements += closed != v.is_eb;
                    ++f_compared;
                    f_disagreements += (homogenization_f(t, t1, 1.0, w).f >= 0.0) != v.is_eb;
                }
                if (w == 1.0) w1_eb += v.is_eb;
                if (closed && !eb_at_lower) ++antitone_violations;
                eb_at_lower = closed;
            }
        }
    }
    return {not_cp == 0 && disagreements == 0 && w1_eb == 0 && antitone_violations == 0,
            fmt("homogenization 50x50 grid x 4 purities: %d non-CP points; closed form vs numeric %d disagreements in "
                "%d points; w = 1 EB points: %d; antitonicity violations: %d; printed f >= 0 vs oracle disagreement "
                "rate %.4f (%d/%d, reported only)",
                not_cp, disagreements, compared, w1_eb, antitone_violations,
                f_compared ? double(f_disagreements) / f_compared : 0.0, f_disagreements, f_compared)};
}

Outcome strong_eb_local_search() {
    const auto start = std::chrono::steady_clock::now();
    bool all_ok = true;
    std::string parts;
    for (int layers : {2, 3, 4}) {
        const AmendmentReport r = local_amendment_search(seb_example_channel(), layers, 1000, 2024);
        // Negativity (-margin) at most 1e-12 above the boundary.
        const bool ok = !r.amended && -r.best_margin <= 1e-12;
        all_ok &= ok;
        parts += fmt(" layers=%d: amended=%s min margin=%.3g;", layers, r.amended ? "true" : "false", r.best_margin);
    }
    const double elapsed = seconds_since(start);
    return {all_ok && elapsed < 10.0,
            fmt("rank-deficient channel diag(0,-1/2,1/2), 1000 trials each:%s %.2f s (< 10 s)", parts.c_str(), elapsed)};
}

Outcome global_amendment() {
    // Brute-force check of the published output itself: -1/8 PT eigenvalue.
    const double published_pt = hermitian_eigenvalues(partial_transpose(published_global_output(), 2, 2)).min();
    const GlobalReproduction rep = reproduce_published_global_example();
    std::string parts;
    bool pass = false;
    for (const auto& a : rep.attempts) {
        const bool entangled = a.pt_min_eig < -tol::kEbMargin;
        const bool ok = a.max_deviation < 1e-12 && std::abs(a.pt_min_eig + 0.125) <= 1e-12 && entangled && a.is_state;
        pass |= ok;
        parts += fmt(" %s ordering: max |dev| = %.3g, min eig = %.4g, pt min eig = %.4g;", to_string(a.ordering),
                     a.max_deviation, a.min_eig, a.pt_min_eig);
    }
    return {pass, fmt("global amendment of diag(0,-1/2,1/2) vs published 4x4 output (its pt min eig = %.4g):%s",
                      published_pt, parts.c_str())};
}

Outcome cptp_validator() {
    bool identity_ok = validate_cptp(QubitChannelAffine::identity()).is_cp;
    Rng rng(1010);
    int rejected = 0;
    for (int k = 0; k < 100; ++k) {
        const double t1 = rng.uniform(0.1, 5.0);
        DynamicalFamily f;
        switch (k % 3) {
            case 0: f = Decoherence{rng.uniform(0.1, 5.0), rng.uniform(-10.0, 10.0)}; break;
            case 1: f = Depolarization{rng.uniform(0.1, 5.0)}; break;
            default: f = Homogenization{t1, rng.uniform(0.05, 2.0 * t1), rng.uniform(0.0, 1.0), rng.uniform(-10.0, 10.0)};
        }
        rejected += !validate_cptp(channel_at(f, rng.uniform(0.0, 20.0))).is_cp;
    }
    const CptpReport flip = validate_cptp(QubitChannelAffine::diagonal({1, 1, -1}));
    const bool flip_ok = !flip.is_cp && std::abs(flip.min_choi_eig + 0.5) <= 1e-10;
    return {identity_ok && rejected == 0 && flip_ok,
            fmt("identity accepted: %s; family channels rejected: %d of 100; diag(1,1,-1) rejected: %s with min Choi "
                "eig %.17g",
                identity_ok ? "yes" : "no", rejected, flip.is_cp ? "no" : "yes", flip.min_choi_eig)};
}

const std::vector<std::function<Outcome()>> kCriteria{
    closed_form_unital_spectra, unital_eb_equivalence, vanishing_lambda_channels, axis_translation_channels,
    depolarization_onset,       decoherence_never_eb,  homogenization_grid,       strong_eb_local_search,
    global_amendment,           cptp_validator,
};

}  // namespace

int main(int argc, char** argv) {
    std::vector<int> selected;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--criterion" && i + 1 < argc) {
            selected.push_back(std::atoi(argv[++i]));
        } else {
            std::fprintf(stderr, "usage: acceptance [--criterion N]...\n");
            return 2;
        }
    }
    if (selected.empty())
        for (int k = 1; k <= static_cast<int>(kCriteria.size()); ++k) selected.push_back(k);

    int failed = 0, documented = 0;
    for (int k : selected) {
        if (k < 1 || k > static_cast<int>(kCriteria.size())) {
            std::fprintf(stderr, "no criterion %d\n", k);
            return 2;
        }
        const Outcome o = kCriteria[static_cast<std::size_t>(k - 1)]();
        std::printf("%s criterion %d: %s\n", o.pass ? "PASS" : "FAIL", k, o.detail.c_str());
        if (!o.pass) (kDocumentedRed.contains(k) ? documented : failed)++;
    }
    if (selected.size() > 1) {
        std::printf("summary: %zu passed, %d failed (%d documented as unattainable)\n",
                    selected.size() - static_cast<std::size_t>(failed + documented), failed + documented, documented);
    }
    std::fflush(stdout);
    if (failed > 0) return 1;
    return documented > 0 ? kKnownUnattainable : 0;
}
