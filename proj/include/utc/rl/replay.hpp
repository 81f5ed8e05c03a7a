#pragma once

#include <span>
#include <vector>

#include "utc/common/rng.hpp"
#include "utc/rl/sum_tree.hpp"

namespace utc::rl {

// One (s, a, r, s', done) experience tuple.
struct Transition {
    std::vector<double> s;
    int a = 0;
    double r = 0.0;
    std::vector<double> s2;
    bool done = false;
};

// Proportional prioritized replay over a ring buffer. New transitions enter
// with the maximal current priority so they are sampled at least once.
class PerReplay {
public:
    PerReplay(int capacity, double alpha, double eps_prio);

    void push(Transition t);
    int size() const { return tree_.size(); }
    int capacity() const { return tree_.capacity(); }

    struct Batch {
        std::vector<int> slots;
        std::vector<double> weights;  // (N * P(i))^-beta, normalized by the batch max
    };

    // Stratified sampling: total priority split into batch equal strata, one
    // uniform draw per stratum mapped through the tree.
    Batch sample(int batch, double beta, Rng& rng) const;

    const Transition& at(int slot) const { return store_[slot]; }

    // priority_i <- (|td_error_i| + eps_prio)^alpha, ancestor sums exact.
    void update_priorities(std::span<const int> slots, std::span<const double> td_errors);

    const SumTree& tree() const { return tree_; }

private:
    SumTree tree_;
    std::vector<Transition> store_;
    double alpha_;
    double eps_prio_;
};

}  // namespace utc::rl
