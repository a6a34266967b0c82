#include "ebchan/amend.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "ebchan/ebtest.hpp"
#include "ebchan/errors.hpp"
#include "ebchan/random.hpp"
#include "ebchan/tolerances.hpp"

namespace ebchan {

QubitChannelAffine interleave(const QubitChannelAffine& base, std::span<const UnitarySample> unitaries) {
    QubitChannelAffine acc = base;
    for (const auto& u : unitaries) acc = compose(acc, compose(unitary_channel(u.axis, u.angle), base));
    return acc;
}

std::vector<UnitarySample> sample_interleaving(std::uint64_t seed, std::uint64_t trial, int count) {
    Rng rng(stream_seed(seed, trial));
    std::vector<UnitarySample> out(static_cast<std::size_t>(std::max(count, 0)));
    for (auto& u : out) {
        u.axis = rng.unit_vector();
        u.angle = 2.0 * std::numbers::pi * rng.uniform();
    }
    return out;
}

namespace {

void check_search_inputs(const QubitChannelAffine& base, int n_layers, int trials) {
    if (n_layers < 2) throw BadParameter("local_amendment_search: n_layers must be >= 2");
    if (trials < 1) throw BadParameter("local_amendment_search: trials must be >= 1");
    const CptpReport cp = validate_cptp(base);
    if (!cp.is_cp) {
        throw NotCP("local_amendment_search: base is not completely positive (min Choi eigenvalue " +
                    std::to_string(cp.min_choi_eig) + ")");
    }
}

double trial_margin(const QubitChannelAffine& base, std::uint64_t seed, std::uint64_t trial, int count) {
    const auto unitaries = sample_interleaving(seed, trial, count);
    return ppt_margin(interleave(base, unitaries));
}

AmendmentReport finish_report(const QubitChannelAffine& base, int n_layers, int trials, std::uint64_t seed,
                              const std::vector<double>& margins) {
    AmendmentReport report;
    report.base_channel = base;
    report.n_layers = n_layers;
    report.trials = trials;
    report.seed = seed;

    std::size_t best = 0;
    for (std::size_t k = 1; k < margins.size(); ++k)
        if (margins[k] < margins[best]) best = k;
    report.best_trial = static_cast<std::int64_t>(best);
    report.best_margin = margins[best];
    report.best_unitaries = sample_interleaving(seed, best, n_layers - 1);

    const std::vector<UnitarySample> identities(static_cast<std::size_t>(n_layers - 1));
    report.base_margin = ppt_margin(interleave(base, identities));
    report.base_is_eb = report.base_margin >= -tol::kEbMargin;
    report.amended = report.base_is_eb && report.best_margin < -tol::kEbMargin;

    const Vec3 lambda = canonical_form(base).lambda;
    const bool rank_deficient = std::any_of(lambda.begin(), lambda.end(),
                                            [](double l) { return std::abs(l) <= tol::kVanishingLambda; });
    if (!report.base_is_eb) {
        report.evidence = "base composition is not entanglement-breaking; amendment does not apply";
    } else if (report.amended) {
        report.evidence = "found an interleaving that is not entanglement-breaking";
    } else if (rank_deficient) {
        report.evidence = "no interleaving can amend: base has a vanishing singular value";
    } else {
        report.evidence = "no amending interleaving found in " + std::to_string(trials) +
                          " trials (absence of evidence, not a certificate)";
    }
    return report;
}

}  // namespace

AmendmentReport local_amendment_search(const QubitChannelAffine& base, int n_layers, int trials, std::uint64_t seed) {
    check_search_inputs(base, n_layers, trials);
    std::vector<double> margins(static_cast<std::size_t>(trials));
#pragma omp parallel for schedule(static)
    for (int k = 0; k < trials; ++k) {
        margins[static_cast<std::size_t>(k)] = trial_margin(base, seed, static_cast<std::uint64_t>(k), n_layers - 1);
    }
    return finish_report(base, n_layers, trials, seed, margins);
}

AmendmentReport local_amendment_search_serial(const QubitChannelAffine& base, int n_layers, int trials,
                                              std::uint64_t seed) {
    check_search_inputs(base, n_layers, trials);
    std::vector<double> margins;
    margins.reserve(static_cast<std::size_t>(trials));
    for (int k = 0; k < trials; ++k) margins.push_back(trial_margin(base, seed, static_cast<std::uint64_t>(k), n_layers - 1));
    return finish_report(base, n_layers, trials, seed, margins);
}

QubitChannelAffine seb_example_channel() { return QubitChannelAffine::diagonal({0.0, -0.5, 0.5}); }

QuditAffineMap build_paper_global_map() {
    constexpr std::size_t kSize = 15;
    std::vector<double> lambda(kSize, 0.0);
    std::vector<double> n(kSize, 0.0);
    for (std::size_t index : {3, 5, 6, 9, 10, 12, 15}) lambda[index - 1] = 1.0;
    for (std::size_t index : {6, 9}) n[index - 1] = 1.0;
    return QuditAffineMap::diagonal(4, std::move(lambda), std::move(n));
}

ComplexMatrix published_global_output() {
    ComplexMatrix m{
        {0.5, 0.0, 0.0, -0.5},
        {0.0, 1.5, 1.0, 0.0},
        {0.0, 1.0, 1.5, 0.0},
        {-0.5, 0.0, 0.0, 0.5},
    };
    return m * Complex(0.25);
}

namespace {

GlobalReproductionAttempt evaluate_global(const QubitChannelAffine& base, const QuditAffineMap& global_map,
                                          GellMannOrdering ordering) {
    if (global_map.d != 4) {
        throw DimensionMismatch("global amendment needs a d = 4 map, got d = " + std::to_string(global_map.d));
    }
    const CptpReport cp = validate_cptp(base);
    if (!cp.is_cp) throw NotCP("global amendment: base is not completely positive");

    GlobalReproductionAttempt attempt;
    attempt.ordering = ordering;
    ComplexMatrix out = apply_qudit_map(global_map, choi(base).m, ordering);
    out *= 1.0 / out.trace();
    attempt.output_state = out;
    attempt.min_eig = hermitian_eigenvalues(out).min();
    attempt.pt_min_eig = hermitian_eigenvalues(partial_transpose(out, 2, 2)).min();
    attempt.is_state = attempt.min_eig >= -tol::kNonPositive;
    attempt.max_deviation = max_abs_diff(out, published_global_output());
    return attempt;
}

}  // namespace

GlobalAmendmentResult global_amendment_example(const QubitChannelAffine& base, const QuditAffineMap& global_map,
                                               GellMannOrdering ordering) {
    const GlobalReproductionAttempt attempt = evaluate_global(base, global_map, ordering);
    if (!attempt.is_state) {
        throw NonPositiveOutput("global amendment output is not a state: min eigenvalue " +
                                std::to_string(attempt.min_eig) + " (" + to_string(ordering) + " ordering)");
    }
    GlobalAmendmentResult result;
    result.output_state = attempt.output_state;
    result.min_eig = attempt.min_eig;
    result.pt_min_eig = attempt.pt_min_eig;
    result.entangled = attempt.pt_min_eig < -tol::kEbMargin;
    result.ordering = ordering;
    return result;
}

GlobalReproduction reproduce_published_global_example() {
    constexpr double kMatch = 1e-12;
    GlobalReproduction out;
    const QuditAffineMap map = build_paper_global_map();
    for (GellMannOrdering ordering : {GellMannOrdering::Interleaved, GellMannOrdering::Grouped}) {
        out.attempts.push_back(evaluate_global(seb_example_channel(), map, ordering));
        if (out.attempts.back().max_deviation <= kMatch) {
            out.reproduced_with = ordering;
            break;
        }
    }
    return out;
}

}  // namespace ebchan
