#include "utc/nn/ops.hpp"

#include <cmath>

#include "utc/common/errors.hpp"

namespace utc::nn {

std::vector<double> dueling_combine(double v, std::span<const double> adv) {
    if (adv.empty()) throw ConfigError("dueling_combine: empty action set");
    double mean = 0.0;
    for (double a : adv) mean += a;
    mean /= static_cast<double>(adv.size());
    std::vector<double> q(adv.size());
    for (size_t i = 0; i < adv.size(); ++i) q[i] = v + adv[i] - mean;
    return q;
}

std::vector<double> softmax(std::span<const double> logits) {
    double m = logits[0];
    for (double z : logits)
        if (z > m) m = z;
    std::vector<double> p(logits.size());
    double sum = 0.0;
    for (size_t i = 0; i < logits.size(); ++i) {
        p[i] = std::exp(logits[i] - m);
        sum += p[i];
    }
    for (auto& v : p) v /= sum;
    return p;
}

int argmax(std::span<const double> v) {
    int best = 0;
    for (size_t i = 1; i < v.size(); ++i)
        if (v[i] > v[best]) best = static_cast<int>(i);
    return best;
}

}  // namespace utc::nn
