#include "utc/ctrl/cyclic.hpp"

#include <cmath>
#include <set>
#include <string>

#include "utc/common/errors.hpp"

namespace utc::ctrl {

double CyclicPlan::cycle_length(double intergreen) const {
    double total = 0.0;
    for (double g : green_splits) total += g + intergreen;
    return total;
}

void CyclicPlan::validate(int num_stages, double min_green) const {
    if (stage_order.size() != green_splits.size())
        throw ConfigError("cyclic plan: stage_order and green_splits lengths differ");
    std::set<int> seen;
    for (int s : stage_order) {
        if (s < 0 || s >= num_stages)
            throw ConfigError("cyclic plan: stage " + std::to_string(s) + " out of range");
        if (!seen.insert(s).second)
            throw ConfigError("cyclic plan: stage " + std::to_string(s) + " appears twice");
    }
    if (static_cast<int>(seen.size()) != num_stages)
        throw ConfigError("cyclic plan: must cover every stage exactly once per cycle");
    for (double g : green_splits)
        if (g < min_green)
            throw ConfigError("cyclic plan: split " + std::to_string(g) + " below minimum green " +
                              std::to_string(min_green));
}

int cyclic_decide(const CyclicPlan& plan, double clock, double intergreen) {
    const double cycle = plan.cycle_length(intergreen);
    double t = std::fmod(clock, cycle);
    if (t < 0) t += cycle;
    double start = 0.0;
    for (size_t k = 0; k < plan.stage_order.size(); ++k) {
        double window = plan.green_splits[k] + intergreen;
        if (t < start + window) return plan.stage_order[k];
        start += window;
    }
    return plan.stage_order.back();  // t == cycle boundary, unreachable after fmod
}

CyclicController::CyclicController(CyclicPlan plan, double intergreen, double period)
    : plan_(std::move(plan)), intergreen_(intergreen), period_(period) {}

int CyclicController::decide(const sim::World& world) {
    return cyclic_decide(plan_, world.clock(), intergreen_);
}

}  // namespace utc::ctrl
