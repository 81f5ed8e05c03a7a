#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "utc/common/errors.hpp"

namespace utc {

using json = nlohmann::json;

// Layered run configuration: built-in defaults < config file < --set overrides.
// Every knob that can influence a result lives here and is echoed into the
// run manifest, so a manifest alone reproduces the run.
class Config {
public:
    Config() : data_(defaults()) {}

    static json defaults();

    void merge_file(const std::string& path);

    // "agent.gamma=0.9". The key must already exist in the defaults tree.
    void apply_override(const std::string& keyval);

    double get_double(const std::string& dotted) const { return at(dotted).get<double>(); }
    int get_int(const std::string& dotted) const { return at(dotted).get<int>(); }
    bool get_bool(const std::string& dotted) const { return at(dotted).get<bool>(); }
    std::string get_string(const std::string& dotted) const { return at(dotted).get<std::string>(); }

    const json& root() const { return data_; }

    // FNV-1a over the canonical dump; identifies the resolved configuration.
    uint64_t hash() const;

private:
    const json& at(const std::string& dotted) const;
    void apply_override_value(const std::string& dotted, const json& value);
    json data_;
};

std::vector<std::string> split(const std::string& s, char sep);

}  // namespace utc
