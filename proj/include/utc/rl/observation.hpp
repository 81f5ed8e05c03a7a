#pragma once

#include <vector>

#include "utc/sim/world.hpp"

namespace utc::rl {

struct ObservationSpec {
    std::vector<std::vector<sim::LaneId>> monitored;
    int num_stages = 2;
    bool normalize = false;   // divide queues by scale when set
    double scale = 100.0;

    int dim() const { return static_cast<int>(monitored.size()) + 1; }
};

// Queue length per monitored group plus the current stage encoded as
// stage / (num_stages - 1). Dimension is monitored count + 1, exactly.
std::vector<double> build_observation(const sim::World& world, const ObservationSpec& spec);

// Reward at a decision boundary: negative sum of monitored queues, metres.
double queue_reward(const sim::World& world, const ObservationSpec& spec);

}  // namespace utc::rl
