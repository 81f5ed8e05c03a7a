#pragma once

#include <vector>

#include "utc/ctrl/controller.hpp"

namespace utc::ctrl {

// A platoon of vehicles with small projected inter-arrival gaps, treated as
// one schedulable job.
struct Cluster {
    double arrival = 0.0;   // projected arrival of the head at the stop line, s from now
    double duration = 0.0;  // service time = count * saturation headway
    int count = 0;
};

// Clusters of one approach, time-ordered and non-overlapping in service.
using ClusterSequence = std::vector<Cluster>;

struct ClusterParams {
    double gap_threshold = 3.0;       // s; arrivals closer than this merge
    double saturation_headway = 2.0;  // s per vehicle
    double v_crawl = 1.0;             // m/s floor for arrival projection
    double horizon = 120.0;           // s; clusters arriving later are ignored
    int cluster_cap = 6;              // total clusters before greedy fallback
    int clusters_per_approach = 3;
    double min_green = 5.0;
    double period = 2.5;
};

// Orders vehicles on the approach lanes by projected arrival at the stop line
// and merges arrivals closer than gap_threshold.
ClusterSequence clusterize(const sim::World& world, const std::vector<sim::LaneId>& approach,
                           const ClusterParams& params);

struct ScheduleResult {
    int first_stage = 0;
    double cost = 0.0;  // vehicle-seconds of waiting plus switch penalties
};

// Searches interleavings of the per-approach cluster orders (within-approach
// order fixed). Serving a cluster of approach a requires stage a; switching
// stages takes and costs t_amber + t_allred. Each cluster is charged
// max(0, service start - arrival) * count. Ties keep current_stage, then the
// lowest stage index.
ScheduleResult schedule_clusters(const std::vector<ClusterSequence>& sequences, int current_stage,
                                 double switch_penalty);

// Decentralized schedule-driven controller: one approach per stage. An
// approximation of the published cluster-scheduling outline; the commercial
// internals are proprietary.
class ClusterController : public Controller {
public:
    ClusterController(ClusterParams params, double switch_penalty)
        : params_(params), switch_penalty_(switch_penalty) {}

    std::string id() const override { return "cluster"; }
    double period() const override { return params_.period; }
    void reset(uint64_t seed) override;
    int decide(const sim::World& world) override;
    nlohmann::json stats() const override;

private:
    ClusterParams params_;
    double switch_penalty_;
    int64_t fallbacks_ = 0;
};

}  // namespace utc::ctrl
