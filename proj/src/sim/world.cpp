#include "utc/sim/world.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "utc/common/errors.hpp"

namespace utc::sim {

namespace {
constexpr double kSpeedSnap = 1e-3;  // below this, a vehicle is parked at 0
constexpr double kEps = 1e-12;
}  // namespace

World::World(std::shared_ptr<const Network> net, uint64_t seed)
    : net_(std::move(net)), rng_(seed) {
    lane_veh_.resize(net_->lanes.size());
    latent_.resize(net_->entry_lanes.size());
}

bool World::lane_green(LaneId lane) const {
    return signal_.phase == Phase::Green && net_->lane_in_stage(lane, signal_.current_stage);
}

// Largest speed v' such that travelling v'*dt and then braking at b_max stays
// within dist: v'*dt + v'^2/(2b) <= dist.
double World::safe_speed(double dist) const {
    if (dist <= 0.0) return 0.0;
    const double b = net_->phys.b_max;
    const double bdt = b * net_->phys.dt;
    return -bdt + std::sqrt(bdt * bdt + 2.0 * b * dist);
}

void World::step() {
    move_vehicles();
    advance_signal();
    clock_ += net_->phys.dt;
}

void World::move_vehicles() {
    const PhysicsParams& P = net_->phys;
    ++tick_;

    for (size_t ln = 0; ln < lane_veh_.size(); ++ln) {
        auto& vehs = lane_veh_[ln];
        const double tp = net_->transfer_point(static_cast<LaneId>(ln));
        const bool sig = net_->signalled[ln];
        const bool green = !sig || lane_green(static_cast<LaneId>(ln));

        for (size_t k = 0; k < vehs.size(); ++k) {
            VehicleState& v = vehs[k];
            if (v.moved_tick == tick_ || v.gone) continue;  // entered this tick
            v.moved_tick = tick_;

            double v_allow = std::min(v.speed + P.a_max * P.dt, P.v_max);
            if (k > 0 && !vehs[k - 1].gone) {
                const VehicleState& lead = vehs[k - 1];
                double d = lead.position - P.vehicle_length - P.s_min - v.position;
                v_allow = std::min(v_allow, safe_speed(d));
            }
            if (!green && v.position <= tp + kEps) {
                v_allow = std::min(v_allow, safe_speed(tp - v.position));
            }
            double v_new = std::max(0.0, v_allow);
            if (v_new < kSpeedSnap) v_new = 0.0;

            const double move = v_new * P.dt;
            const double old_pos = v.position;
            v.position += move;
            v.speed = v_new;
            v.distance += move;

            if (v.position <= tp + kEps) continue;

            // Crossed the transfer point.
            const Route& route = net_->routes[v.route];
            if (v.hop + 1 >= static_cast<int>(route.lanes.size())) {
                const double frac = move > 0.0 ? (tp - old_pos) / move : 0.0;
                exit_log_.push_back({v.entry_time, clock_ + P.dt * frac, v.free_flow_time, v.route});
                ++exited_;
                v.gone = true;
                continue;
            }
            LaneId to = route.lanes[v.hop + 1];
            double entry_pos = v.position - tp;
            auto& tgt = lane_veh_[to];
            if (!tgt.empty()) {
                double limit = tgt.back().position - P.vehicle_length - P.s_min;
                if (limit < 0.0) {
                    // Downstream entrance jammed: hold at the line this tick.
                    v.position = tp;
                    v.speed = 0.0;
                    v.distance -= move - (tp - old_pos);
                    continue;
                }
                entry_pos = std::min(entry_pos, limit);
            }
            VehicleState moved = v;
            moved.hop += 1;
            moved.position = entry_pos;
            v.gone = true;
            tgt.push_back(moved);
        }
        std::erase_if(vehs, [](const VehicleState& v) { return v.gone; });
    }
}

void World::advance_signal() {
    const PhysicsParams& P = net_->phys;
    signal_.phase_elapsed += P.dt;
    for (;;) {
        if (signal_.phase == Phase::Amber && signal_.phase_elapsed >= P.t_amber - kEps) {
            signal_.phase = Phase::AllRed;
            signal_.phase_elapsed -= P.t_amber;
        } else if (signal_.phase == Phase::AllRed && signal_.phase_elapsed >= P.t_allred - kEps) {
            if (signal_.pending) signal_.current_stage = *signal_.pending;
            signal_.pending.reset();
            signal_.phase = Phase::Green;
            signal_.phase_elapsed -= P.t_allred;
        } else {
            break;
        }
    }
}

void World::command_stage(int stage) {
    if (stage < 0 || stage >= net_->num_stages())
        throw ConfigError("intersection '" + net_->name + "': stage " + std::to_string(stage) +
                          " out of range [0, " + std::to_string(net_->num_stages()) + ")");
    if (signal_.phase == Phase::Green) {
        if (stage == signal_.current_stage) return;  // green continues uninterrupted
        signal_.phase = Phase::Amber;
        signal_.phase_elapsed = 0.0;
        signal_.pending = stage;
    } else {
        if (stage == signal_.current_stage)
            signal_.pending.reset();
        else
            signal_.pending = stage;
    }
}

bool World::try_insert(int entry_slot, const LatentVehicle& lv) {
    const PhysicsParams& P = net_->phys;
    LaneId lane = net_->entry_lanes[entry_slot];
    auto& vehs = lane_veh_[lane];
    double speed = P.v_max;
    if (!vehs.empty()) {
        // Entrance occupied unless the rearmost vehicle has cleared enough
        // room for an insertion at speed without dropping below s_min.
        double rear = vehs.back().position - P.vehicle_length;
        if (rear < P.s_min + P.v_max * P.dt) return false;
        speed = std::min(speed, safe_speed(rear - P.s_min));
    }
    VehicleState v;
    v.id = next_id_++;
    v.route = lv.route;
    v.hop = 0;
    v.position = 0.0;
    v.speed = speed;
    v.entry_time = lv.entry_time;
    v.free_flow_time = net_->routes[lv.route].length / P.v_max;
    v.moved_tick = 0;
    vehs.push_back(v);
    ++spawned_;
    return true;
}

void World::spawn(const bench::DemandProfile& profile) {
    const PhysicsParams& P = net_->phys;
    if (profile.entry_lanes() != static_cast<int>(net_->entry_lanes.size()))
        throw ConfigError("demand profile covers " + std::to_string(profile.entry_lanes()) +
                          " entry lanes, network has " + std::to_string(net_->entry_lanes.size()));
    for (size_t e = 0; e < net_->entry_lanes.size(); ++e) {
        double rate = profile.rate_at(clock_, static_cast<int>(e));
        if (rate < 0) throw ConfigError("negative demand rate");
        double p = std::min(1.0, rate * P.dt / 3600.0);
        if (p > 0.0 && rng_.bernoulli(p)) {
            const auto& choices = net_->routes_from[e];
            int route = choices[rng_.uniform_int(static_cast<int>(choices.size()))];
            latent_[e].push_back({clock_, route});
            ++drawn_;
        }
        while (!latent_[e].empty() && try_insert(static_cast<int>(e), latent_[e].front()))
            latent_[e].pop_front();
    }
}

double World::lane_queue(LaneId lane) const {
    const PhysicsParams& P = net_->phys;
    const auto& vehs = lane_veh_[lane];
    const double sl = net_->transfer_point(lane);
    size_t i = 0;
    while (i < vehs.size() && vehs[i].speed >= P.v_queue_threshold) ++i;
    if (i == vehs.size()) return 0.0;
    double tail_rear = vehs[i].position - P.vehicle_length;
    for (size_t j = i + 1; j < vehs.size(); ++j) {
        if (vehs[j].speed >= P.v_queue_threshold) break;
        if (tail_rear - vehs[j].position > P.queue_gap_max) break;  // platoon ends
        tail_rear = vehs[j].position - P.vehicle_length;
    }
    return std::max(0.0, sl - tail_rear);
}

std::vector<double> World::measure_queues(const std::vector<std::vector<LaneId>>& groups) const {
    std::vector<double> out;
    out.reserve(groups.size());
    for (const auto& group : groups) {
        double q = 0.0;
        for (LaneId l : group) q = std::max(q, lane_queue(l));
        out.push_back(q);
    }
    return out;
}

int64_t World::in_network() const {
    int64_t n = 0;
    for (const auto& vehs : lane_veh_) n += static_cast<int64_t>(vehs.size());
    return n;
}

int64_t World::latent_count() const {
    int64_t n = 0;
    for (const auto& q : latent_) n += static_cast<int64_t>(q.size());
    return n;
}

void World::check_conservation() const {
    if (spawned_ != exited_ + in_network())
        throw InvariantError("vehicle conservation violated at t=" + std::to_string(clock_) +
                             ": spawned " + std::to_string(spawned_) + " != exited " +
                             std::to_string(exited_) + " + in-network " +
                             std::to_string(in_network()));
}

double World::pending_delay() const {
    const PhysicsParams& P = net_->phys;
    double delay = 0.0;
    for (const auto& vehs : lane_veh_)
        for (const auto& v : vehs)
            delay += std::max(0.0, (clock_ - v.entry_time) - v.distance / P.v_max);
    for (const auto& q : latent_)
        for (const auto& lv : q) delay += std::max(0.0, clock_ - lv.entry_time);
    return delay;
}

void World::inject_vehicle(LaneId lane, double position, double speed, int route, int hop) {
    VehicleState v;
    v.id = next_id_++;
    v.route = route;
    v.hop = hop;
    v.position = position;
    v.speed = speed;
    v.entry_time = clock_;
    v.free_flow_time = net_->routes[route].length / net_->phys.v_max;
    v.distance = position;
    auto& vehs = lane_veh_[lane];
    vehs.push_back(v);
    std::sort(vehs.begin(), vehs.end(),
              [](const VehicleState& a, const VehicleState& b) { return a.position > b.position; });
    ++spawned_;
}

}  // namespace utc::sim
