#pragma once

#include <vector>

#include "utc/ctrl/controller.hpp"

namespace utc::ctrl {

// Fixed-time plan: each stage gets its green split once per cycle, with the
// intergreen (amber + all-red) inserted between consecutive stages.
struct CyclicPlan {
    std::vector<int> stage_order;
    std::vector<double> green_splits;

    double cycle_length(double intergreen) const;
    void validate(int num_stages, double min_green = 5.0) const;
};

// Pure function of the clock: the stage whose green window (split plus the
// following transition) contains clock mod cycle length.
int cyclic_decide(const CyclicPlan& plan, double clock, double intergreen);

class CyclicController : public Controller {
public:
    CyclicController(CyclicPlan plan, double intergreen, double period);

    std::string id() const override { return "cyclic"; }
    double period() const override { return period_; }
    int decide(const sim::World& world) override;

private:
    CyclicPlan plan_;
    double intergreen_;
    double period_;
};

}  // namespace utc::ctrl
