#pragma once

#include <cstdint>
#include <deque>
#include <memory>
#include <optional>
#include <vector>

#include "utc/bench/profile.hpp"
#include "utc/common/rng.hpp"
#include "utc/sim/network.hpp"

namespace utc::sim {

enum class Phase { Green, Amber, AllRed };

// pending is only set during amber/all_red and never equals current_stage;
// a command back to the current stage during a transition clears it, so the
// intergreen completes and green returns to the current stage.
struct SignalState {
    int current_stage = 0;
    Phase phase = Phase::Green;
    double phase_elapsed = 0.0;
    std::optional<int> pending;
};

// position is the front bumper, metres from lane start; the vehicle body
// occupies [position - vehicle_length, position].
struct VehicleState {
    int64_t id = 0;
    int route = 0;
    int hop = 0;
    double position = 0.0;
    double speed = 0.0;
    double entry_time = 0.0;
    double free_flow_time = 0.0;
    double distance = 0.0;  // travelled so far, for partial-delay accounting
    uint32_t moved_tick = 0;
    bool gone = false;
};

struct ExitRecord {
    double entry_time = 0.0;
    double exit_time = 0.0;
    double free_flow_time = 0.0;
    int route = 0;
};

// Demand drawn by the profile but not yet physically insertable. Waits at the
// lane entrance and keeps its intended entry time for delay accounting.
struct LatentVehicle {
    double entry_time = 0.0;
    int route = 0;
};

// Full simulator snapshot. Single-threaded: exactly one actor steps it.
// Identical seed + scenario + command trace reproduces it bit for bit.
class World {
public:
    World(std::shared_ptr<const Network> net, uint64_t seed);

    // One dt tick: vehicles move under the current signal state, transfers
    // and exits fire, then the signal machine advances and the clock moves.
    void step();

    // Bernoulli draw per entry lane with p = rate*dt/3600 (capped at 1),
    // then releases latent vehicles as entrance space frees.
    void spawn(const bench::DemandProfile& profile);

    // Same stage continues green; a different stage starts amber -> all-red
    // -> new green. Commands during a transition replace the pending stage.
    void command_stage(int stage);

    // Queue per group: max over member lanes of the distance from the stop
    // line to the upstream tail of the contiguous near-stopped platoon.
    std::vector<double> measure_queues(const std::vector<std::vector<LaneId>>& groups) const;
    double lane_queue(LaneId lane) const;

    double clock() const { return clock_; }
    const SignalState& signal() const { return signal_; }
    const Network& network() const { return *net_; }
    bool lane_green(LaneId lane) const;

    int64_t spawned() const { return spawned_; }
    int64_t exited() const { return exited_; }
    int64_t in_network() const;
    int64_t latent_count() const;
    const std::vector<ExitRecord>& exit_log() const { return exit_log_; }
    const std::vector<std::vector<VehicleState>>& lanes() const { return lane_veh_; }
    const std::vector<std::deque<LatentVehicle>>& latent() const { return latent_; }

    // spawned == exited + in-network, exactly, at every tick.
    void check_conservation() const;

    // Partial delay of everything still in flight: in-network vehicles are
    // charged (clock - entry) minus the free-flow time for the distance they
    // covered, latent vehicles their full wait. Floored at 0 per vehicle.
    double pending_delay() const;

    // Test hook: place a vehicle directly (kept ordered within the lane).
    void inject_vehicle(LaneId lane, double position, double speed, int route, int hop = 0);

private:
    void move_vehicles();
    void advance_signal();
    bool try_insert(int entry_slot, const LatentVehicle& lv);
    double safe_speed(double dist) const;

    std::shared_ptr<const Network> net_;
    double clock_ = 0.0;
    uint32_t tick_ = 0;
    SignalState signal_;
    std::vector<std::vector<VehicleState>> lane_veh_;  // index 0 = closest to stop line
    std::vector<std::deque<LatentVehicle>> latent_;    // per entry slot
    Rng rng_;
    int64_t next_id_ = 1;
    int64_t spawned_ = 0;
    int64_t exited_ = 0;
    int64_t drawn_ = 0;
    std::vector<ExitRecord> exit_log_;
};

}  // namespace utc::sim
