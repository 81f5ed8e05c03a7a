#include "utc/bench/profile.hpp"

#include <algorithm>
#include <string>

#include "utc/common/errors.hpp"

namespace utc::bench {

double DemandProfile::rate_at(double clock, int entry_slot) const {
    int seg = static_cast<int>(clock / segment_length);
    seg = std::clamp(seg, 0, segments() - 1);
    return rates[seg][entry_slot];
}

double DemandProfile::expected_total() const {
    double total = 0.0;
    for (const auto& seg : rates)
        for (double r : seg) total += r * segment_length / 3600.0;
    return total;
}

DemandProfile DemandProfile::flat(int entry_lanes, double per_lane_rate, int segments) {
    if (per_lane_rate < 0) throw ConfigError("demand rate must be >= 0");
    DemandProfile p;
    p.rates.assign(segments, std::vector<double>(entry_lanes, per_lane_rate));
    return p;
}

DemandProfile build_profile(double peak_rate, double total_target,
                            const std::vector<int>& peak_segments, int entry_lanes,
                            int segments) {
    if (static_cast<int>(peak_segments.size()) >= segments)
        throw ConfigError("build_profile: too many peak segments");
    int n_peak = static_cast<int>(peak_segments.size());
    int n_base = segments - n_peak;
    // (n_peak*peak + n_base*base) / segments = total_target
    double base = (total_target * segments - n_peak * peak_rate) / n_base;
    if (base < 0)
        throw ConfigError("build_profile: infeasible base rate " + std::to_string(base) +
                          " (peak " + std::to_string(peak_rate) + ", total " +
                          std::to_string(total_target) + ")");
    DemandProfile p;
    p.rates.assign(segments, std::vector<double>(entry_lanes, base / entry_lanes));
    for (int s : peak_segments) {
        if (s < 0 || s >= segments) throw ConfigError("build_profile: peak segment out of range");
        p.rates[s].assign(entry_lanes, peak_rate / entry_lanes);
    }
    return p;
}

}  // namespace utc::bench
