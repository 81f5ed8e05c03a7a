#pragma once

#include <span>
#include <vector>

namespace utc::nn {

// Q(a) = V + A(a) - mean(A). Invariant to adding a constant to all advantages.
std::vector<double> dueling_combine(double v, std::span<const double> adv);

// Max-subtracted softmax; outputs sum to 1.
std::vector<double> softmax(std::span<const double> logits);

// Ties broken toward the lowest index.
int argmax(std::span<const double> v);

}  // namespace utc::nn
