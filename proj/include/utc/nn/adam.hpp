#pragma once

#include <cstdint>
#include <vector>

namespace utc::nn {

// Adaptive-moment optimizer with bias correction. Global gradient-norm
// clipping is applied before the update; a non-finite gradient rejects the
// whole update and leaves parameters and moments untouched.
class Adam {
public:
    struct Settings {
        double lr = 1e-3;
        double beta1 = 0.9;
        double beta2 = 0.999;
        double eps = 1e-8;
        double grad_clip = 10.0;  // <= 0 disables clipping
    };

    Adam() = default;
    Adam(Settings s, const std::vector<std::vector<double>*>& params);

    // params/grads must match the layout given at construction.
    // Returns false if the update was rejected (non-finite gradient).
    bool step(const std::vector<std::vector<double>*>& params,
              const std::vector<std::vector<double>*>& grads);

    int64_t steps() const { return t_; }

private:
    Settings s_;
    std::vector<std::vector<double>> m_, v_;
    int64_t t_ = 0;
};

}  // namespace utc::nn
