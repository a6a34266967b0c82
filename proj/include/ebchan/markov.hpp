#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "ebchan/channel.hpp"
#include "ebchan/tolerances.hpp"

namespace ebchan {

/// Pure dephasing with precession: Bloch xy-plane rotates at `omega` and
/// shrinks as exp(-t / time_constant); z is untouched.
struct Decoherence {
    double time_constant = 1.0;
    double omega = 0.0;
};

/// Isotropic shrinking of the Bloch ball, exp(-t / time_constant).
struct Depolarization {
    double time_constant = 1.0;
};

/// Contraction towards the fixed point (0, 0, purity). Completely positive
/// when decoherence_time <= 2 * decay_time.
struct Homogenization {
    double decay_time = 1.0;        // T1
    double decoherence_time = 1.0;  // T2
    double purity = 0.0;            // w in [0, 1]
    double omega = 0.0;
};

using DynamicalFamily = std::variant<Decoherence, Depolarization, Homogenization>;

const char* family_name(const DynamicalFamily& family) noexcept;

/// Throws BadParameter on non-positive time constants or purity outside [0, 1].
void validate(const DynamicalFamily& family);

/// The channel after evolving for time t. Identity at t = 0.
/// Throws NegativeTime for t < 0 and BadParameter for invalid families.
QubitChannelAffine channel_at(const DynamicalFamily& family, double t);

struct HomogenizationF {
    double f1 = 0.0;
    double f2 = 0.0;
    double f = 0.0;
};

/// f1 = (1 - w^2)(1 - e1)^2 - 4 e2^2
/// f2 = 1 - e2 - sqrt((e1 + e2)^2 + w^2 (1 - e1)^2)
/// f  = min(f1, f2)
/// with e1 = exp(-t/T1), e2 = exp(-t/T2). Evaluated as written; f2 is not an
/// exact EB criterion (see theorem3_homog_condition).
HomogenizationF homogenization_f(double t, double decay_time, double decoherence_time, double purity);

/// Axis-translation EB condition at lambda = (e2, e2, e1), n_z = w (1 - e1).
bool theorem3_homog_condition(double t, double decay_time, double decoherence_time, double purity);

struct OnsetOptions {
    int coarse_points = 1000;
    double relative_precision = 1e-9;
    /// A time counts as EB once the PT margin reaches this value. The
    /// families approach the EB boundary exponentially, so negative slack
    /// would mark never-EB dynamics as EB after finite time, and a zero floor
    /// would let rounding noise decide once the true margin drops below it.
    double margin_floor = tol::kMarginResolution;
};

/// Smallest t in [0, t_max] at which channel_at(family, t) is EB, or nullopt.
/// Coarse scan then bisection. Throws BadRange for t_max <= 0.
std::optional<double> eb_onset(const DynamicalFamily& family, double t_max, const OnsetOptions& options = {});

struct ScanRow {
    double t = 0.0;
    /// |canonical lambda|, physical axis order.
    Vec3 lambda_abs{};
    double margin = 0.0;
    /// margin >= tol::kMarginResolution (same boundary as eb_onset).
    bool is_eb = false;
    /// Homogenization only.
    std::optional<HomogenizationF> f;
    std::optional<bool> thm3_eb;
};

struct TimeScan {
    DynamicalFamily family;
    std::vector<double> times;
    std::vector<ScanRow> rows;
};

/// `steps` uniformly spaced times over [t_min, t_max] (OpenMP over rows).
/// Throws BadRange unless steps >= 2 and 0 <= t_min < t_max.
TimeScan scan(const DynamicalFamily& family, double t_min, double t_max, int steps);
/// Serial reference for scan; identical output.
TimeScan scan_serial(const DynamicalFamily& family, double t_min, double t_max, int steps);

/// One scan row; exposed for tests and benchmarks.
ScanRow scan_row(const DynamicalFamily& family, double t);

}  // namespace ebchan
