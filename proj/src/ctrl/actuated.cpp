#include "utc/ctrl/actuated.hpp"

#include <algorithm>

namespace utc::ctrl {

int actuated_decide(const ActuatedConfig& cfg, const sim::World& world) {
    const auto& sig = world.signal();
    const int cur = sig.current_stage;
    if (sig.phase != sim::Phase::Green) return cur;
    if (sig.phase_elapsed < cfg.min_green) return cur;

    const auto& net = world.network();
    const int next = (cur + 1) % net.num_stages();
    if (sig.phase_elapsed >= cfg.max_green) return next;

    double discharging = 0.0;
    double queued_on_red = 0.0;
    for (size_t ln = 0; ln < net.lanes.size(); ++ln) {
        if (!net.signalled[ln]) continue;
        const double sl = net.transfer_point(static_cast<sim::LaneId>(ln));
        const bool green = net.lane_in_stage(static_cast<sim::LaneId>(ln), cur);
        for (const auto& v : world.lanes()[ln]) {
            const double dist = sl - v.position;
            if (green) {
                const double arrival = dist / std::max(v.speed, cfg.v_crawl);
                if (dist <= cfg.detector_near && arrival <= cfg.extension_quantum)
                    discharging += 1.0;
            } else {
                if (dist <= cfg.detector_far && v.speed < world.network().phys.v_queue_threshold)
                    queued_on_red += 1.0;
            }
        }
    }
    const double index = discharging / (1.0 + queued_on_red);
    return index >= cfg.switch_threshold ? cur : next;
}

}  // namespace utc::ctrl
