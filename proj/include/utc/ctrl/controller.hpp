#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "utc/sim/world.hpp"

namespace utc::ctrl {

// Shared controller interface: observe the world at each decision tick and
// return the stage to command. Deciders are pure given (config, world); any
// per-episode bookkeeping is reset via reset().
class Controller {
public:
    virtual ~Controller() = default;

    virtual std::string id() const = 0;

    // Decision cadence in seconds; the runner only queries during green.
    virtual double period() const = 0;

    virtual void reset(uint64_t /*seed*/) {}

    virtual int decide(const sim::World& world) = 0;

    // Episode flags merged into the metrics record (e.g. fallback counts).
    virtual nlohmann::json stats() const { return nlohmann::json::object(); }
};

}  // namespace utc::ctrl
