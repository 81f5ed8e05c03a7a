#pragma once

#include <string>
#include <vector>

namespace utc::sim {

using LaneId = int;

struct LaneGeometry {
    std::string name;
    double length = 0.0;
    bool entry = false;
    // Transfer point: vehicles crossing it move to the next route lane (or
    // exit). Defaults to the lane end for uncontrolled lanes.
    double stop_line = 0.0;
};

struct Route {
    std::string name;
    std::vector<LaneId> lanes;
    double length = 0.0;  // sum of per-lane transfer distances
};

// Stage k grants green to stages[k] simultaneously.
struct StageTable {
    std::vector<std::vector<LaneId>> stages;
    int count() const { return static_cast<int>(stages.size()); }
};

struct PhysicsParams {
    double dt = 0.5;
    double v_max = 13.9;
    double a_max = 2.5;
    double b_max = 4.5;
    double t_amber = 3.0;
    double t_allred = 2.0;
    double v_queue_threshold = 2.0;
    double s_min = 2.0;
    double vehicle_length = 5.0;
    double queue_gap_max = 10.0;
};

// Single signalized intersection: approach and exit lanes, the stage table,
// and the movement conflict matrix. Immutable once validated; shared by all
// worlds simulating it.
class Network {
public:
    std::string name = "main";
    std::vector<LaneGeometry> lanes;
    StageTable stage_table;
    std::vector<std::pair<LaneId, LaneId>> conflicts;
    std::vector<Route> routes;
    PhysicsParams phys;

    // Filled by finalize().
    std::vector<LaneId> entry_lanes;
    std::vector<std::vector<int>> routes_from;      // entry slot -> route indices
    std::vector<std::vector<bool>> stage_mask;      // stage -> per-lane green flag
    std::vector<bool> signalled;                    // lane appears in some stage

    LaneId lane_index(const std::string& lane_name) const;
    int entry_slot(LaneId lane) const;

    // Validates topology and stage safety, then builds the derived tables.
    // Configuration errors are reported here, before any episode starts.
    void finalize();

    bool lane_in_stage(LaneId lane, int stage) const { return stage_mask[stage][lane]; }
    bool conflicting(LaneId a, LaneId b) const;
    int num_stages() const { return stage_table.count(); }
    double transfer_point(LaneId lane) const { return lanes[lane].stop_line; }
};

}  // namespace utc::sim
