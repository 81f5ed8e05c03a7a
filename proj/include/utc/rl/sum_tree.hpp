#pragma once

#include <vector>

namespace utc::rl {

// Complete binary tree over capacity leaves; internal nodes hold exact sums
// (recomputed on every update, so parent == left + right bitwise). A parallel
// max tree tracks the largest current leaf priority.
class SumTree {
public:
    explicit SumTree(int capacity);

    int capacity() const { return cap_; }
    int size() const { return size_; }

    // Appends until full, then overwrites the oldest slot. Returns the slot.
    int push(double priority);

    void update(int slot, double priority);

    double total() const { return sum_[1]; }
    double priority(int slot) const { return sum_[cap_ + slot]; }
    double max_priority() const { return max_[1]; }

    // Maps u in [0, total) to a leaf by prefix descent.
    int sample(double u) const;

    // True iff every internal node equals the sum of its children, exactly.
    bool audit() const;

private:
    int cap_;
    int size_ = 0;
    int cursor_ = 0;
    std::vector<double> sum_;
    std::vector<double> max_;
};

}  // namespace utc::rl
