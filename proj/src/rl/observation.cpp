#include "utc/rl/observation.hpp"

namespace utc::rl {

std::vector<double> build_observation(const sim::World& world, const ObservationSpec& spec) {
    std::vector<double> obs = world.measure_queues(spec.monitored);
    if (spec.normalize)
        for (auto& q : obs) q /= spec.scale;
    double denom = spec.num_stages > 1 ? spec.num_stages - 1 : 1;
    obs.push_back(world.signal().current_stage / denom);
    return obs;
}

double queue_reward(const sim::World& world, const ObservationSpec& spec) {
    double sum = 0.0;
    for (double q : world.measure_queues(spec.monitored)) sum += q;
    return -sum;
}

}  // namespace utc::rl
