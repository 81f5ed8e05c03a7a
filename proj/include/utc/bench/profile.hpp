#pragma once

#include <vector>

namespace utc::bench {

// Piecewise-constant arrival rates per entry lane: 10 segments of 6 minutes
// for a one-hour episode. rates[segment][entry_slot] is in veh/h, where
// entry_slot indexes the network's entry-lane list.
struct DemandProfile {
    double segment_length = 360.0;
    std::vector<std::vector<double>> rates;

    int segments() const { return static_cast<int>(rates.size()); }
    int entry_lanes() const { return rates.empty() ? 0 : static_cast<int>(rates[0].size()); }

    // Clamps past the final segment so stragglers see the last rate.
    double rate_at(double clock, int entry_slot) const;

    // Expected vehicle insertions over the whole profile.
    double expected_total() const;

    static DemandProfile flat(int entry_lanes, double per_lane_rate, int segments = 10);
};

// Two-level profile: peak_segments run at peak_rate (network-wide veh/h), the
// rest at the base rate solving (n_peak*peak + n_base*base)/segments = total.
// Rates are split evenly across entry lanes.
DemandProfile build_profile(double peak_rate, double total_target,
                            const std::vector<int>& peak_segments, int entry_lanes,
                            int segments = 10);

}  // namespace utc::bench
