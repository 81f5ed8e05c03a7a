#include "utc/nn/mlp.hpp"

#include <cassert>
#include <cmath>
#include <string>

#include "utc/common/errors.hpp"

namespace utc::nn {

const char* act_name(Act a) { return a == Act::Relu ? "relu" : "linear"; }

void MlpGrad::zero() {
    for (auto& l : layers) {
        std::fill(l.dw.begin(), l.dw.end(), 0.0);
        std::fill(l.db.begin(), l.db.end(), 0.0);
    }
}

Mlp::Mlp(const std::vector<int>& dims, const std::vector<Act>& acts) {
    assert(dims.size() >= 2 && acts.size() == dims.size() - 1);
    layers.resize(acts.size());
    for (size_t i = 0; i < acts.size(); ++i) {
        DenseLayer& l = layers[i];
        l.in = dims[i];
        l.out = dims[i + 1];
        l.act = acts[i];
        l.w.assign(static_cast<size_t>(l.in) * l.out, 0.0);
        l.b.assign(l.out, 0.0);
    }
}

void Mlp::init_weights(Rng& rng) {
    for (auto& l : layers) {
        double bound = 1.0 / std::sqrt(static_cast<double>(l.in));
        for (auto& w : l.w) w = rng.uniform(-bound, bound);
        std::fill(l.b.begin(), l.b.end(), 0.0);
    }
}

static void affine(const DenseLayer& l, std::span<const double> x, std::vector<double>& out) {
    out.assign(l.out, 0.0);
    for (int o = 0; o < l.out; ++o) {
        const double* wr = &l.w[static_cast<size_t>(o) * l.in];
        double acc = l.b[o];
        for (int i = 0; i < l.in; ++i) acc += wr[i] * x[i];
        out[o] = acc;
    }
}

std::vector<double> Mlp::forward(std::span<const double> x) const {
    if (static_cast<int>(x.size()) != input_dim())
        throw ConfigError("input dimension mismatch: expected " + std::to_string(input_dim()) +
                          ", got " + std::to_string(x.size()));
    std::vector<double> cur(x.begin(), x.end());
    std::vector<double> next;
    for (const auto& l : layers) {
        affine(l, cur, next);
        if (l.act == Act::Relu)
            for (auto& v : next) v = v > 0.0 ? v : 0.0;
        cur.swap(next);
    }
    return cur;
}

std::vector<double> Mlp::forward_cached(std::span<const double> x, MlpCache& cache) const {
    if (static_cast<int>(x.size()) != input_dim())
        throw ConfigError("input dimension mismatch: expected " + std::to_string(input_dim()) +
                          ", got " + std::to_string(x.size()));
    cache.input.assign(x.begin(), x.end());
    cache.pre.resize(layers.size());
    cache.post.resize(layers.size());
    std::span<const double> cur = cache.input;
    for (size_t k = 0; k < layers.size(); ++k) {
        const auto& l = layers[k];
        affine(l, cur, cache.pre[k]);
        cache.post[k] = cache.pre[k];
        if (l.act == Act::Relu)
            for (auto& v : cache.post[k]) v = v > 0.0 ? v : 0.0;
        cur = cache.post[k];
    }
    cache.valid = true;
    return cache.post.empty() ? cache.input : cache.post.back();
}

std::vector<double> Mlp::backward(const MlpCache& cache, std::span<const double> upstream,
                                  MlpGrad& grad) const {
    if (!cache.valid) throw InvariantError("backward called without a cached forward pass");
    assert(grad.layers.size() == layers.size());
    std::vector<double> delta(upstream.begin(), upstream.end());
    std::vector<double> prev;
    for (int k = static_cast<int>(layers.size()) - 1; k >= 0; --k) {
        const auto& l = layers[k];
        LayerGrad& g = grad.layers[k];
        if (l.act == Act::Relu) {
            for (int o = 0; o < l.out; ++o)
                if (cache.pre[k][o] <= 0.0) delta[o] = 0.0;
        }
        std::span<const double> below =
            k == 0 ? std::span<const double>(cache.input) : std::span<const double>(cache.post[k - 1]);
        for (int o = 0; o < l.out; ++o) {
            double d = delta[o];
            g.db[o] += d;
            double* gw = &g.dw[static_cast<size_t>(o) * l.in];
            for (int i = 0; i < l.in; ++i) gw[i] += d * below[i];
        }
        prev.assign(l.in, 0.0);
        for (int o = 0; o < l.out; ++o) {
            double d = delta[o];
            const double* wr = &l.w[static_cast<size_t>(o) * l.in];
            for (int i = 0; i < l.in; ++i) prev[i] += d * wr[i];
        }
        delta.swap(prev);
    }
    return delta;
}

MlpGrad Mlp::make_grad() const {
    MlpGrad g;
    g.layers.resize(layers.size());
    for (size_t k = 0; k < layers.size(); ++k) {
        g.layers[k].dw.assign(layers[k].w.size(), 0.0);
        g.layers[k].db.assign(layers[k].b.size(), 0.0);
    }
    return g;
}

void collect_params(Mlp& m, std::vector<std::vector<double>*>& out) {
    for (auto& l : m.layers) {
        out.push_back(&l.w);
        out.push_back(&l.b);
    }
}

void collect_grads(MlpGrad& g, std::vector<std::vector<double>*>& out) {
    for (auto& l : g.layers) {
        out.push_back(&l.dw);
        out.push_back(&l.db);
    }
}

}  // namespace utc::nn
