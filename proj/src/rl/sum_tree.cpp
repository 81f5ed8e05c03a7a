#include "utc/rl/sum_tree.hpp"

#include <algorithm>

#include "utc/common/errors.hpp"

namespace utc::rl {

SumTree::SumTree(int capacity) : cap_(capacity) {
    if (capacity < 1) throw ConfigError("sum tree capacity must be >= 1");
    sum_.assign(2 * static_cast<size_t>(cap_), 0.0);
    max_.assign(2 * static_cast<size_t>(cap_), 0.0);
}

int SumTree::push(double priority) {
    int slot = cursor_;
    update(slot, priority);
    cursor_ = (cursor_ + 1) % cap_;
    size_ = std::min(size_ + 1, cap_);
    return slot;
}

void SumTree::update(int slot, double priority) {
    size_t i = static_cast<size_t>(cap_) + slot;
    sum_[i] = priority;
    max_[i] = priority;
    for (i /= 2; i >= 1; i /= 2) {
        sum_[i] = sum_[2 * i] + sum_[2 * i + 1];
        max_[i] = std::max(max_[2 * i], max_[2 * i + 1]);
    }
}

int SumTree::sample(double u) const {
    if (size_ == 0) throw InvariantError("sampling from an empty sum tree");
    size_t i = 1;
    while (i < static_cast<size_t>(cap_)) {
        double left = sum_[2 * i];
        if (u < left) {
            i = 2 * i;
        } else {
            u -= left;
            i = 2 * i + 1;
        }
    }
    return static_cast<int>(i) - cap_;
}

bool SumTree::audit() const {
    for (size_t i = 1; i < static_cast<size_t>(cap_); ++i)
        if (sum_[i] != sum_[2 * i] + sum_[2 * i + 1]) return false;
    return true;
}

}  // namespace utc::rl
