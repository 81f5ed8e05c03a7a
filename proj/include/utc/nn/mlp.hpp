#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "utc/common/rng.hpp"

namespace utc::nn {

enum class Act : uint8_t { Linear = 0, Relu = 1 };

const char* act_name(Act a);

// All parameters are 64-bit floats; weights are out x in, row-major.
struct DenseLayer {
    int in = 0;
    int out = 0;
    Act act = Act::Linear;
    std::vector<double> w;
    std::vector<double> b;
};

struct LayerGrad {
    std::vector<double> dw;
    std::vector<double> db;
};

struct MlpGrad {
    std::vector<LayerGrad> layers;
    void zero();
};

// Activations cached by forward_cached, consumed by backward.
struct MlpCache {
    std::vector<double> input;
    std::vector<std::vector<double>> pre;
    std::vector<std::vector<double>> post;
    bool valid = false;
};

// Dense feed-forward stack. Forward is pure; backward gives exact
// reverse-mode gradients of a scalar loss w.r.t. every parameter.
class Mlp {
public:
    Mlp() = default;
    // dims = {in, h1, ..., out}, acts.size() == dims.size() - 1
    Mlp(const std::vector<int>& dims, const std::vector<Act>& acts);

    // Scaled uniform fan-in init: w ~ U(-1/sqrt(in), 1/sqrt(in)), b = 0.
    void init_weights(Rng& rng);

    std::vector<double> forward(std::span<const double> x) const;
    std::vector<double> forward_cached(std::span<const double> x, MlpCache& cache) const;

    // upstream = dL/d(output). Accumulates parameter gradients into grad
    // and returns dL/d(input). Requires a cache filled by forward_cached.
    std::vector<double> backward(const MlpCache& cache, std::span<const double> upstream,
                                 MlpGrad& grad) const;

    MlpGrad make_grad() const;

    int input_dim() const { return layers.empty() ? 0 : layers.front().in; }
    int output_dim() const { return layers.empty() ? 0 : layers.back().out; }

    std::vector<DenseLayer> layers;
};

// Parameter/gradient blocks in a stable order (w0, b0, w1, b1, ...),
// shared by the optimizer and the serializer.
void collect_params(Mlp& m, std::vector<std::vector<double>*>& out);
void collect_grads(MlpGrad& g, std::vector<std::vector<double>*>& out);

}  // namespace utc::nn
