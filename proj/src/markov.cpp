#include "ebchan/markov.hpp"

#include <cmath>
#include <string>

#include "ebchan/ebtest.hpp"
#include "ebchan/errors.hpp"

namespace ebchan {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_positive(double value, const char* what) {
    if (!(value > 0.0) || !std::isfinite(value)) {
        throw BadParameter(std::string(what) + " must be positive and finite, got " + std::to_string(value));
    }
}

Mat3 damped_rotation(double decay, double angle, double z) {
    const double c = decay * std::cos(angle);
    const double s = decay * std::sin(angle);
    return Mat3{{{c, s, 0.0}, {-s, c, 0.0}, {0.0, 0.0, z}}};
}

}  // namespace

const char* family_name(const DynamicalFamily& family) noexcept {
    return std::visit(overloaded{
                          [](const Decoherence&) { return "decoherence"; },
                          [](const Depolarization&) { return "depolarization"; },
                          [](const Homogenization&) { return "homogenization"; },
                      },
                      family);
}

void validate(const DynamicalFamily& family) {
    std::visit(overloaded{
                   [](const Decoherence& f) {
                       require_positive(f.time_constant, "T");
                       if (!std::isfinite(f.omega)) throw BadParameter("omega must be finite");
                   },
                   [](const Depolarization& f) { require_positive(f.time_constant, "T"); },
                   [](const Homogenization& f) {
                       require_positive(f.decay_time, "T1");
                       require_positive(f.decoherence_time, "T2");
                       if (!(f.purity >= 0.0 && f.purity <= 1.0)) {
                           throw BadParameter("w must lie in [0, 1], got " + std::to_string(f.purity));
                       }
                       if (!std::isfinite(f.omega)) throw BadParameter("omega must be finite");
                   },
               },
               family);
}

QubitChannelAffine channel_at(const DynamicalFamily& family, double t) {
    if (!(t >= 0.0)) throw NegativeTime("channel_at: t must be >= 0, got " + std::to_string(t));
    validate(family);
    return std::visit(overloaded{
                          [t](const Decoherence& f) {
                              QubitChannelAffine phi;
                              phi.m = damped_rotation(std::exp(-t / f.time_constant), f.omega * t, 1.0);
                              return phi;
                          },
                          [t](const Depolarization& f) {
                              const double e = std::exp(-t / f.time_constant);
                              return QubitChannelAffine::diagonal({e, e, e});
                          },
                          [t](const Homogenization& f) {
                              const double e1 = std::exp(-t / f.decay_time);
                              const double e2 = std::exp(-t / f.decoherence_time);
                              QubitChannelAffine phi;
                              phi.m = damped_rotation(e2, f.omega * t, e1);
                              phi.n = {0.0, 0.0, f.purity * (1.0 - e1)};
                              return phi;
                          },
                      },
                      family);
}

HomogenizationF homogenization_f(double t, double decay_time, double decoherence_time, double purity) {
    const double e1 = std::exp(-t / decay_time);
    const double e2 = std::exp(-t / decoherence_time);
    const double w2 = purity * purity;
    HomogenizationF out;
    out.f1 = (1.0 - w2) * (1.0 - e1) * (1.0 - e1) - 4.0 * e2 * e2;
    out.f2 = 1.0 - e2 - std::sqrt((e1 + e2) * (e1 + e2) + w2 * (1.0 - e1) * (1.0 - e1));
    out.f = std::min(out.f1, out.f2);
    return out;
}

bool theorem3_homog_condition(double t, double decay_time, double decoherence_time, double purity) {
    const double e1 = std::exp(-t / decay_time);
    const double e2 = std::exp(-t / decoherence_time);
    return theorem3_condition({e2, e2, e1}, purity * (1.0 - e1), 2);
}

std::optional<double> eb_onset(const DynamicalFamily& family, double t_max, const OnsetOptions& options) {
    if (!(t_max > 0.0) || !std::isfinite(t_max)) throw BadRange("eb_onset: t_max must be positive");
    if (options.coarse_points < 2) throw BadRange("eb_onset: need at least 2 coarse points");
    validate(family);

    const auto eb_at = [&](double t) { return ppt_margin(channel_at(family, t)) >= options.margin_floor; };

    if (eb_at(0.0)) return 0.0;
    const int points = options.coarse_points;
    double previous = 0.0;
    for (int k = 1; k < points; ++k) {
        const double t = t_max * static_cast<double>(k) / static_cast<double>(points - 1);
        if (!eb_at(t)) {
            previous = t;
            continue;
        }
        double lo = previous;
        double hi = t;
        while (hi - lo > options.relative_precision * hi) {
            const double mid = 0.5 * (lo + hi);
            if (mid <= lo || mid >= hi) break;
            (eb_at(mid) ? hi : lo) = mid;
        }
        return hi;
    }
    return std::nullopt;
}

ScanRow scan_row(const DynamicalFamily& family, double t) {
    const QubitChannelAffine phi = channel_at(family, t);
    ScanRow row;
    row.t = t;
    const Vec3 lambda = canonical_form(phi).lambda;
    for (int i = 0; i < 3; ++i) row.lambda_abs[i] = std::abs(lambda[i]);
    row.margin = ppt_margin(phi);
    row.is_eb = row.margin >= OnsetOptions{}.margin_floor;
    if (const auto* h = std::get_if<Homogenization>(&family)) {
        row.f = homogenization_f(t, h->decay_time, h->decoherence_time, h->purity);
        row.thm3_eb = theorem3_homog_condition(t, h->decay_time, h->decoherence_time, h->purity);
    }
    return row;
}

namespace {

std::vector<double> scan_times(const DynamicalFamily& family, double t_min, double t_max, int steps) {
    validate(family);
    if (steps < 2) throw BadRange("scan: steps must be >= 2");
    if (!(t_min >= 0.0) || !(t_min < t_max) || !std::isfinite(t_max)) {
        throw BadRange("scan: need 0 <= t_min < t_max");
    }
    std::vector<double> times(static_cast<std::size_t>(steps));
    const double width = t_max - t_min;
    for (int k = 0; k < steps; ++k) {
        times[static_cast<std::size_t>(k)] = t_min + width * static_cast<double>(k) / static_cast<double>(steps - 1);
    }
    return times;
}

}  // namespace

TimeScan scan(const DynamicalFamily& family, double t_min, double t_max, int steps) {
    TimeScan out{family, scan_times(family, t_min, t_max, steps), {}};
    out.rows.resize(out.times.size());
    const auto count = static_cast<std::ptrdiff_t>(out.times.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t k = 0; k < count; ++k) out.rows[k] = scan_row(family, out.times[k]);
    return out;
}

TimeScan scan_serial(const DynamicalFamily& family, double t_min, double t_max, int steps) {
    TimeScan out{family, scan_times(family, t_min, t_max, steps), {}};
    out.rows.reserve(out.times.size());
    for (double t : out.times) out.rows.push_back(scan_row(family, t));
    return out;
}

}  // namespace ebchan
