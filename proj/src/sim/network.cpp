#include "utc/sim/network.hpp"

#include <algorithm>
#include <set>

#include "utc/common/errors.hpp"

namespace utc::sim {

LaneId Network::lane_index(const std::string& lane_name) const {
    for (size_t i = 0; i < lanes.size(); ++i)
        if (lanes[i].name == lane_name) return static_cast<LaneId>(i);
    throw ConfigError("intersection '" + name + "': unknown lane '" + lane_name + "'");
}

int Network::entry_slot(LaneId lane) const {
    for (size_t i = 0; i < entry_lanes.size(); ++i)
        if (entry_lanes[i] == lane) return static_cast<int>(i);
    return -1;
}

bool Network::conflicting(LaneId a, LaneId b) const {
    for (auto [x, y] : conflicts)
        if ((x == a && y == b) || (x == b && y == a)) return true;
    return false;
}

void Network::finalize() {
    const int n = static_cast<int>(lanes.size());
    if (n == 0) throw ConfigError("intersection '" + name + "': no lanes");

    for (auto& l : lanes) {
        if (l.length <= 0)
            throw ConfigError("intersection '" + name + "': lane '" + l.name + "' length must be > 0");
        if (l.stop_line == 0.0) l.stop_line = l.length;
        if (l.stop_line > l.length || l.stop_line <= 0)
            throw ConfigError("intersection '" + name + "': lane '" + l.name +
                              "' stop line outside [0, length]");
    }
    {
        std::set<std::string> names;
        for (const auto& l : lanes)
            if (!names.insert(l.name).second)
                throw ConfigError("intersection '" + name + "': duplicate lane '" + l.name + "'");
    }

    for (auto [a, b] : conflicts)
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw ConfigError("intersection '" + name + "': conflict references missing lane");

    if (stage_table.count() == 0)
        throw ConfigError("intersection '" + name + "': empty stage table");
    stage_mask.assign(stage_table.count(), std::vector<bool>(n, false));
    signalled.assign(n, false);
    for (int s = 0; s < stage_table.count(); ++s) {
        for (LaneId l : stage_table.stages[s]) {
            if (l < 0 || l >= n)
                throw ConfigError("intersection '" + name + "': stage " + std::to_string(s) +
                                  " references missing lane");
            stage_mask[s][l] = true;
            signalled[l] = true;
        }
        // Signal safety: a stage must not green two conflicting movements.
        const auto& st = stage_table.stages[s];
        for (size_t i = 0; i < st.size(); ++i)
            for (size_t j = i + 1; j < st.size(); ++j)
                if (conflicting(st[i], st[j]))
                    throw ConfigError("intersection '" + name + "': stage " + std::to_string(s) +
                                      " greens conflicting lanes '" + lanes[st[i]].name + "' and '" +
                                      lanes[st[j]].name + "'");
    }

    for (auto& r : routes) {
        if (r.lanes.empty())
            throw ConfigError("intersection '" + name + "': route '" + r.name + "' has no lanes");
        r.length = 0.0;
        for (LaneId l : r.lanes) {
            if (l < 0 || l >= n)
                throw ConfigError("intersection '" + name + "': route '" + r.name +
                                  "' moves into a missing lane");
            r.length += lanes[l].stop_line;
        }
    }

    entry_lanes.clear();
    for (int l = 0; l < n; ++l)
        if (lanes[l].entry) entry_lanes.push_back(l);
    routes_from.assign(entry_lanes.size(), {});
    for (size_t r = 0; r < routes.size(); ++r) {
        int slot = entry_slot(routes[r].lanes.front());
        if (slot < 0)
            throw ConfigError("intersection '" + name + "': route '" + routes[r].name +
                              "' does not start at an entry lane");
        routes_from[slot].push_back(static_cast<int>(r));
    }
    for (size_t e = 0; e < entry_lanes.size(); ++e)
        if (routes_from[e].empty())
            throw ConfigError("intersection '" + name + "': entry lane '" +
                              lanes[entry_lanes[e]].name + "' has no routes");
}

}  // namespace utc::sim
