#include "utc/nn/adam.hpp"

#include <cassert>
#include <cmath>

namespace utc::nn {

Adam::Adam(Settings s, const std::vector<std::vector<double>*>& params) : s_(s) {
    m_.reserve(params.size());
    v_.reserve(params.size());
    for (const auto* p : params) {
        m_.emplace_back(p->size(), 0.0);
        v_.emplace_back(p->size(), 0.0);
    }
}

bool Adam::step(const std::vector<std::vector<double>*>& params,
                const std::vector<std::vector<double>*>& grads) {
    assert(params.size() == m_.size() && grads.size() == m_.size());

    double norm_sq = 0.0;
    bool finite = true;
    for (const auto* g : grads)
        for (double x : *g) {
            if (!std::isfinite(x)) finite = false;
            norm_sq += x * x;
        }
    if (!finite || !std::isfinite(norm_sq)) return false;

    double scale = 1.0;
    if (s_.grad_clip > 0.0) {
        double norm = std::sqrt(norm_sq);
        if (norm > s_.grad_clip) scale = s_.grad_clip / norm;
    }

    ++t_;
    const double c1 = 1.0 - std::pow(s_.beta1, static_cast<double>(t_));
    const double c2 = 1.0 - std::pow(s_.beta2, static_cast<double>(t_));
    for (size_t b = 0; b < params.size(); ++b) {
        auto& p = *params[b];
        const auto& g = *grads[b];
        auto& m = m_[b];
        auto& v = v_[b];
        assert(p.size() == g.size() && p.size() == m.size());
        for (size_t i = 0; i < p.size(); ++i) {
            double gi = g[i] * scale;
            m[i] = s_.beta1 * m[i] + (1.0 - s_.beta1) * gi;
            v[i] = s_.beta2 * v[i] + (1.0 - s_.beta2) * gi * gi;
            double mhat = m[i] / c1;
            double vhat = v[i] / c2;
            p[i] -= s_.lr * mhat / (std::sqrt(vhat) + s_.eps);
        }
    }
    return true;
}

}  // namespace utc::nn
