#pragma once

#include "utc/ctrl/controller.hpp"

namespace utc::ctrl {

// Actuated (MOVA-style) configuration. The commercial performance index is
// proprietary; the ratio surrogate in actuated_decide is an approximation
// built from the published threshold-extend/switch skeleton, and is labelled
// as such in run metadata.
struct ActuatedConfig {
    double detector_near = 40.0;   // m upstream, discharge-window loop
    double detector_far = 100.0;   // m upstream, queue-presence loop
    double min_green = 5.0;
    double max_green = 60.0;
    double extension_quantum = 2.5;
    double switch_threshold = 0.5;
    double v_crawl = 1.0;
};

// Performance index I = (vehicles on green lanes projected to discharge in
// one quantum) / (1 + vehicles queued on red lanes within the far detector).
// I >= threshold extends the stage, otherwise the next stage in cyclic order
// is commanded; max_green forces a switch unconditionally.
int actuated_decide(const ActuatedConfig& cfg, const sim::World& world);

class ActuatedController : public Controller {
public:
    explicit ActuatedController(ActuatedConfig cfg) : cfg_(cfg) {}

    std::string id() const override { return "actuated"; }
    double period() const override { return cfg_.extension_quantum; }
    int decide(const sim::World& world) override { return actuated_decide(cfg_, world); }
    nlohmann::json stats() const override {
        return {{"controller_note", "actuated index is a documented approximation"}};
    }

private:
    ActuatedConfig cfg_;
};

}  // namespace utc::ctrl
