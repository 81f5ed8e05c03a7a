#include "utc/ctrl/cluster.hpp"

#include <algorithm>
#include <limits>

namespace utc::ctrl {

ClusterSequence clusterize(const sim::World& world, const std::vector<sim::LaneId>& approach,
                           const ClusterParams& params) {
    std::vector<double> arrivals;
    for (sim::LaneId ln : approach) {
        const double sl = world.network().transfer_point(ln);
        for (const auto& v : world.lanes()[ln])
            arrivals.push_back((sl - v.position) / std::max(v.speed, params.v_crawl));
    }
    std::sort(arrivals.begin(), arrivals.end());

    ClusterSequence seq;
    double last_arrival = 0.0;
    for (double a : arrivals) {
        if (a > params.horizon) break;
        if (!seq.empty() && a - last_arrival < params.gap_threshold) {
            seq.back().count += 1;
        } else {
            seq.push_back({a, 0.0, 1});
        }
        last_arrival = a;
    }
    for (auto& c : seq) c.duration = c.count * params.saturation_headway;
    return seq;
}

namespace {

struct SearchState {
    std::vector<size_t> next;  // per approach, index of the next unserved cluster
    int stage;
    double time;
    double cost;
};

// a beats b on cost, then on keeping current_stage, then on lowest stage.
bool better(const ScheduleResult& a, const ScheduleResult& b, int current_stage) {
    if (a.cost != b.cost) return a.cost < b.cost;
    bool a_keep = a.first_stage == current_stage;
    bool b_keep = b.first_stage == current_stage;
    if (a_keep != b_keep) return a_keep;
    return a.first_stage < b.first_stage;
}

void search(const std::vector<ClusterSequence>& seqs, int current_stage, double switch_penalty,
            SearchState& st, int first_stage, ScheduleResult& best, bool& found) {
    bool done = true;
    for (size_t a = 0; a < seqs.size(); ++a) {
        if (st.next[a] >= seqs[a].size()) continue;
        done = false;
        const Cluster& c = seqs[a][st.next[a]];

        const double saved_time = st.time;
        const double saved_cost = st.cost;
        const int saved_stage = st.stage;

        double t = st.time;
        double cost = st.cost;
        if (st.stage != static_cast<int>(a)) {
            t += switch_penalty;
            cost += switch_penalty;
        }
        const double start = std::max(t, c.arrival);
        cost += (start - c.arrival) * c.count;

        if (found && cost > best.cost) continue;  // equal cost may still win the tie-break

        st.next[a] += 1;
        st.stage = static_cast<int>(a);
        st.time = start + c.duration;
        st.cost = cost;
        const int fs = first_stage < 0 ? static_cast<int>(a) : first_stage;
        search(seqs, current_stage, switch_penalty, st, fs, best, found);
        st.next[a] -= 1;
        st.stage = saved_stage;
        st.time = saved_time;
        st.cost = saved_cost;
    }
    if (done) {
        ScheduleResult r{first_stage < 0 ? current_stage : first_stage, st.cost};
        if (!found || better(r, best, current_stage)) {
            best = r;
            found = true;
        }
    }
}

}  // namespace

ScheduleResult schedule_clusters(const std::vector<ClusterSequence>& sequences, int current_stage,
                                 double switch_penalty) {
    SearchState st;
    st.next.assign(sequences.size(), 0);
    st.stage = current_stage;
    st.time = 0.0;
    st.cost = 0.0;
    ScheduleResult best{current_stage, 0.0};
    bool found = false;
    search(sequences, current_stage, switch_penalty, st, -1, best, found);
    return best;
}

void ClusterController::reset(uint64_t) { fallbacks_ = 0; }

int ClusterController::decide(const sim::World& world) {
    const auto& sig = world.signal();
    if (sig.phase != sim::Phase::Green) return sig.current_stage;
    if (sig.phase_elapsed < params_.min_green) return sig.current_stage;

    const auto& net = world.network();
    std::vector<ClusterSequence> seqs(net.num_stages());
    int total = 0;
    for (int s = 0; s < net.num_stages(); ++s) {
        seqs[s] = clusterize(world, net.stage_table.stages[s], params_);
        if (static_cast<int>(seqs[s].size()) > params_.clusters_per_approach)
            seqs[s].resize(params_.clusters_per_approach);
        total += static_cast<int>(seqs[s].size());
    }
    if (total == 0) return sig.current_stage;

    if (total > params_.cluster_cap) {
        // Above the search cap: serve the largest ready cluster.
        ++fallbacks_;
        int best_stage = sig.current_stage;
        int best_count = -1;
        for (int s = 0; s < net.num_stages(); ++s) {
            if (seqs[s].empty()) continue;
            int c = seqs[s].front().count;
            if (c > best_count || (c == best_count && s == sig.current_stage)) {
                best_count = c;
                best_stage = s;
            }
        }
        return best_stage;
    }
    return schedule_clusters(seqs, sig.current_stage, switch_penalty_).first_stage;
}

nlohmann::json ClusterController::stats() const {
    return {{"scheduler_fallbacks", fallbacks_},
            {"controller_note", "cluster scheduler is a documented approximation"}};
}

}  // namespace utc::ctrl
