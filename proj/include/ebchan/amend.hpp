#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ebchan/channel.hpp"

namespace ebchan {

struct UnitarySample {
    Vec3 axis{0.0, 0.0, 1.0};
    double angle = 0.0;  // radians, [0, 2 pi)

    friend bool operator==(const UnitarySample&, const UnitarySample&) = default;
};

/// Result of a randomized search for an interleaving
/// base o U1 o base o U2 o ... o base that is no longer EB.
///
/// best_margin is the smallest PT margin over all sampled interleavings (the
/// most entangling one); amended <=> base_is_eb && best_margin < -tol::kEbMargin.
struct AmendmentReport {
    QubitChannelAffine base_channel;
    int n_layers = 0;
    int trials = 0;
    std::uint64_t seed = 0;
    double best_margin = 0.0;
    std::int64_t best_trial = 0;
    std::vector<UnitarySample> best_unitaries;
    bool amended = false;
    /// Whether base^n_layers itself (no interleaved unitaries) is EB.
    bool base_is_eb = false;
    double base_margin = 0.0;
    /// Human-readable summary of what the search shows (and does not show).
    std::string evidence;

    friend bool operator==(const AmendmentReport&, const AmendmentReport&) = default;
};

/// base o U(u_1) o base o ... o U(u_k) o base; base applied k + 1 times.
QubitChannelAffine interleave(const QubitChannelAffine& base, std::span<const UnitarySample> unitaries);

/// The unitaries of trial `trial` for a given seed.
std::vector<UnitarySample> sample_interleaving(std::uint64_t seed, std::uint64_t trial, int count);

/// Trials run in parallel (OpenMP); the best trial is the lowest index among
/// those attaining the minimum margin, so the report is thread-count
/// independent. Throws NotCP, BadParameter (n_layers < 2, trials < 1).
AmendmentReport local_amendment_search(const QubitChannelAffine& base, int n_layers, int trials, std::uint64_t seed);
/// Serial reference; identical report.
AmendmentReport local_amendment_search_serial(const QubitChannelAffine& base, int n_layers, int trials,
                                              std::uint64_t seed);

/// diag(0, -1/2, 1/2), unital: the rank-deficient example channel.
QubitChannelAffine seb_example_channel();

/// d = 4 map with diagonal M: entries 3, 5, 6, 9, 10, 12, 15 (1-based) equal
/// to 1, translation entries 6 and 9 equal to 1, everything else 0.
QuditAffineMap build_paper_global_map();

/// 1/4 [[1/2, 0, 0, -1/2], [0, 3/2, 1, 0], [0, 1, 3/2, 0], [-1/2, 0, 0, 1/2]]:
/// the published two-qubit output of the global amendment, trace-normalized.
ComplexMatrix published_global_output();

struct GlobalAmendmentResult {
    ComplexMatrix output_state{4};
    double min_eig = 0.0;
    double pt_min_eig = 0.0;
    /// pt_min_eig < -tol::kEbMargin.
    bool entangled = false;
    GellMannOrdering ordering = GellMannOrdering::Interleaved;
};

/// Applies the two-qubit map to the coherence vector of choi(base) and
/// normalizes the trace. Throws NotCP, DimensionMismatch (map.d != 4), and
/// NonPositiveOutput when the output has an eigenvalue below -tol::kNonPositive.
GlobalAmendmentResult global_amendment_example(const QubitChannelAffine& base, const QuditAffineMap& global_map,
                                               GellMannOrdering ordering = GellMannOrdering::Interleaved);

struct GlobalReproductionAttempt {
    GellMannOrdering ordering = GellMannOrdering::Interleaved;
    ComplexMatrix output_state{4};
    double max_deviation = 0.0;  // vs published_global_output()
    double min_eig = 0.0;
    double pt_min_eig = 0.0;
    bool is_state = false;
};

struct GlobalReproduction {
    std::vector<GlobalReproductionAttempt> attempts;
    /// Ordering under which the published output was reproduced (deviation
    /// <= 1e-12), if any.
    std::optional<GellMannOrdering> reproduced_with;
};

/// Runs the built-in map on seb_example_channel() under the interleaved
/// ordering, then the grouped ordering, stopping at the first that matches
/// the published output.
GlobalReproduction reproduce_published_global_example();

}  // namespace ebchan
