#include "utc/rl/replay.hpp"

#include <cmath>

#include "utc/common/errors.hpp"

namespace utc::rl {

PerReplay::PerReplay(int capacity, double alpha, double eps_prio)
    : tree_(capacity), alpha_(alpha), eps_prio_(eps_prio) {
    store_.resize(capacity);
}

void PerReplay::push(Transition t) {
    double p = tree_.size() > 0 ? tree_.max_priority() : 1.0;
    int slot = tree_.push(p);
    store_[slot] = std::move(t);
}

PerReplay::Batch PerReplay::sample(int batch, double beta, Rng& rng) const {
    if (tree_.size() < batch) throw InvariantError("replay holds fewer transitions than the batch");
    Batch out;
    out.slots.resize(batch);
    out.weights.resize(batch);
    const double total = tree_.total();
    const double n = static_cast<double>(tree_.size());
    double w_max = 0.0;
    for (int k = 0; k < batch; ++k) {
        double u = (static_cast<double>(k) + rng.uniform01()) * total / batch;
        int slot = tree_.sample(u);
        out.slots[k] = slot;
        double prob = tree_.priority(slot) / total;
        double w = std::pow(n * prob, -beta);
        out.weights[k] = w;
        if (w > w_max) w_max = w;
    }
    for (auto& w : out.weights) w /= w_max;
    return out;
}

void PerReplay::update_priorities(std::span<const int> slots, std::span<const double> td_errors) {
    for (size_t i = 0; i < slots.size(); ++i)
        tree_.update(slots[i], std::pow(std::abs(td_errors[i]) + eps_prio_, alpha_));
}

}  // namespace utc::rl
