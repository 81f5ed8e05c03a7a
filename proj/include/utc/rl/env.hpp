#pragma once

#include <cstdint>
#include <vector>

namespace utc::rl {

struct StepResult {
    std::vector<double> obs;
    double reward = 0.0;
    bool done = false;
};

// Episodic environment driven at the agent's decision cadence.
class RlEnv {
public:
    virtual ~RlEnv() = default;
    virtual int obs_dim() const = 0;
    virtual int action_count() const = 0;
    virtual std::vector<double> reset(uint64_t seed) = 0;
    virtual StepResult step(int action) = 0;
};

}  // namespace utc::rl
