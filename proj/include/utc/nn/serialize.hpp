#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "utc/nn/nets.hpp"

namespace utc::nn {

// Checkpoint container: a plain/dueling Q-network or an actor-critic net.
using AnyNet = std::variant<QNetwork, ActorCriticNet>;

// Little-endian binary weight file:
//   magic "UTCNNW1\n", u8 kind (0 plain-q, 1 dueling-q, 2 actor-critic),
//   u32 stack count, per stack: u32 layer count,
//   per layer: u32 in, u32 out, u8 activation, f64 w[out*in] row-major, f64 b[out].
// A JSON sidecar at <path>.json carries architecture and caller metadata.
void save_net(const std::string& path, const AnyNet& net, const nlohmann::json& metadata);

AnyNet load_net(const std::string& path);

nlohmann::json architecture_json(const AnyNet& net);

}  // namespace utc::nn
