#include "utc/common/config.hpp"

#include <fstream>

namespace utc {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

json Config::defaults() {
    return json{
        {"sim",
         {{"dt", 0.5},
          {"v_max", 13.9},
          {"a_max", 2.5},
          {"b_max", 4.5},
          {"t_amber", 3.0},
          {"t_allred", 2.0},
          {"v_queue_threshold", 2.0},
          {"s_min", 2.0},
          {"vehicle_length", 5.0},
          {"queue_gap_max", 10.0},
          {"episode_length", 3600.0}}},
        {"cyclic", {{"green_split", 30.0}}},
        {"actuated",
         {{"detector_near", 40.0},
          {"detector_far", 100.0},
          {"min_green", 5.0},
          {"max_green", 60.0},
          {"extension_quantum", 2.5},
          {"switch_threshold", 0.5}}},
        {"scheduler",
         {{"gap_threshold", 3.0},
          {"saturation_headway", 2.0},
          {"v_crawl", 1.0},
          {"horizon", 120.0},
          {"cluster_cap", 6},
          {"clusters_per_approach", 3},
          {"min_green", 5.0},
          {"period", 2.5}}},
        {"agent",
         {{"gamma", 0.95},
          {"replay_capacity", 20000},
          {"batch_size", 64},
          {"target_sync", 500},
          {"alpha_per", 0.6},
          {"beta_start", 0.4},
          {"beta_end", 1.0},
          {"eps_prio", 1e-3},
          {"epsilon_final", 0.001},
          {"decision_interval", 5.0},
          {"min_green", 5.0},
          {"hidden", 64},
          {"dueling_hidden", 32},
          {"learning_rate", 1e-3},
          {"adam_beta1", 0.9},
          {"adam_beta2", 0.999},
          {"adam_eps", 1e-8},
          {"grad_clip", 10.0},
          {"normalize_obs", false},
          {"obs_scale", 100.0},
          {"rollout_length", 16},
          {"value_coef", 0.5},
          {"entropy_coef", 0.01}}},
        {"training",
         {{"episodes_dqn", 400},
          {"episodes_a2c", 100},
          {"demand_per_lane", 400.0},
          {"checkpoint_every", 50}}},
        {"bench",
         {{"eval_episodes", 10},
          {"peak_rate", 3000.0},
          {"total_vehicles", 2120.0},
          {"peak_segments", json::array({3, 7})},
          {"demand_scale", 1.0}}},
    };
}

void Config::merge_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config file not found: " + path);
    json patch;
    try {
        in >> patch;
    } catch (const json::exception& e) {
        throw ConfigError("config file " + path + ": " + e.what());
    }
    // Only keys present in the defaults tree are accepted.
    std::vector<std::pair<std::string, json>> stack{{"", patch}};
    while (!stack.empty()) {
        auto [prefix, node] = stack.back();
        stack.pop_back();
        if (!node.is_object()) throw ConfigError("config file " + path + ": expected object at '" + prefix + "'");
        for (auto& [key, value] : node.items()) {
            std::string dotted = prefix.empty() ? key : prefix + "." + key;
            if (value.is_object()) {
                stack.push_back({dotted, value});
            } else {
                apply_override_value(dotted, value);
            }
        }
    }
}

void Config::apply_override(const std::string& keyval) {
    auto eq = keyval.find('=');
    if (eq == std::string::npos) throw UsageError("--set expects key=value, got: " + keyval);
    std::string key = keyval.substr(0, eq);
    std::string raw = keyval.substr(eq + 1);
    json value = json::parse(raw, nullptr, false);
    if (value.is_discarded()) value = raw;  // bare strings pass through
    apply_override_value(key, value);
}

void Config::apply_override_value(const std::string& dotted, const json& value) {
    json* node = &data_;
    auto parts = split(dotted, '.');
    for (size_t i = 0; i + 1 < parts.size(); ++i) {
        auto it = node->find(parts[i]);
        if (it == node->end() || !it->is_object())
            throw ConfigError("unknown config key: " + dotted);
        node = &*it;
    }
    auto it = node->find(parts.back());
    if (it == node->end()) throw ConfigError("unknown config key: " + dotted);
    if (it->is_number() && value.is_string())
        throw ConfigError("config key " + dotted + " expects a number, got '" +
                          value.get<std::string>() + "'");
    *it = value;
}

const json& Config::at(const std::string& dotted) const {
    const json* node = &data_;
    for (const auto& part : split(dotted, '.')) {
        auto it = node->find(part);
        if (it == node->end()) throw ConfigError("unknown config key: " + dotted);
        node = &*it;
    }
    return *node;
}

uint64_t Config::hash() const {
    std::string dump = data_.dump();
    uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : dump) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    return h;
}

}  // namespace utc
