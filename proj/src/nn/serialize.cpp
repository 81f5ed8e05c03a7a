#include "utc/nn/serialize.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>

#include "utc/common/errors.hpp"

namespace utc::nn {

namespace {

constexpr char kMagic[8] = {'U', 'T', 'C', 'N', 'N', 'W', '1', '\n'};

void write_u32(std::ostream& out, uint32_t v) {
    unsigned char b[4] = {static_cast<unsigned char>(v), static_cast<unsigned char>(v >> 8),
                          static_cast<unsigned char>(v >> 16), static_cast<unsigned char>(v >> 24)};
    out.write(reinterpret_cast<const char*>(b), 4);
}

uint32_t read_u32(std::istream& in) {
    unsigned char b[4];
    in.read(reinterpret_cast<char*>(b), 4);
    return static_cast<uint32_t>(b[0]) | (static_cast<uint32_t>(b[1]) << 8) |
           (static_cast<uint32_t>(b[2]) << 16) | (static_cast<uint32_t>(b[3]) << 24);
}

void write_f64s(std::ostream& out, const std::vector<double>& v) {
    for (double x : v) {
        uint64_t bits;
        std::memcpy(&bits, &x, 8);
        unsigned char b[8];
        for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(bits >> (8 * i));
        out.write(reinterpret_cast<const char*>(b), 8);
    }
}

void read_f64s(std::istream& in, std::vector<double>& v) {
    for (double& x : v) {
        unsigned char b[8];
        in.read(reinterpret_cast<char*>(b), 8);
        uint64_t bits = 0;
        for (int i = 0; i < 8; ++i) bits |= static_cast<uint64_t>(b[i]) << (8 * i);
        std::memcpy(&x, &bits, 8);
    }
}

void write_mlp(std::ostream& out, const Mlp& m) {
    write_u32(out, static_cast<uint32_t>(m.layers.size()));
    for (const auto& l : m.layers) {
        write_u32(out, static_cast<uint32_t>(l.in));
        write_u32(out, static_cast<uint32_t>(l.out));
        out.put(static_cast<char>(l.act));
        write_f64s(out, l.w);
        write_f64s(out, l.b);
    }
}

Mlp read_mlp(std::istream& in) {
    Mlp m;
    uint32_t n = read_u32(in);
    m.layers.resize(n);
    for (auto& l : m.layers) {
        l.in = static_cast<int>(read_u32(in));
        l.out = static_cast<int>(read_u32(in));
        int act = in.get();
        if (act != 0 && act != 1) throw ConfigError("weight file: unknown activation tag");
        l.act = static_cast<Act>(act);
        l.w.resize(static_cast<size_t>(l.in) * l.out);
        l.b.resize(l.out);
        read_f64s(in, l.w);
        read_f64s(in, l.b);
    }
    return m;
}

nlohmann::json mlp_json(const Mlp& m) {
    nlohmann::json layers = nlohmann::json::array();
    for (const auto& l : m.layers)
        layers.push_back({{"in", l.in}, {"out", l.out}, {"activation", act_name(l.act)}});
    return layers;
}

}  // namespace

nlohmann::json architecture_json(const AnyNet& net) {
    nlohmann::json arch;
    if (std::holds_alternative<QNetwork>(net)) {
        const auto& q = std::get<QNetwork>(net);
        arch["kind"] = q.is_dueling() ? "dueling_q" : "plain_q";
        arch["trunk"] = mlp_json(q.trunk_);
        if (q.is_dueling()) {
            arch["value_stream"] = mlp_json(q.value_);
            arch["advantage_stream"] = mlp_json(q.adv_);
        }
        arch["obs_dim"] = q.obs_dim();
        arch["actions"] = q.actions();
    } else {
        const auto& ac = std::get<ActorCriticNet>(net);
        arch["kind"] = "actor_critic";
        arch["trunk"] = mlp_json(ac.trunk_);
        arch["actor"] = mlp_json(ac.actor_);
        arch["critic"] = mlp_json(ac.critic_);
        arch["obs_dim"] = ac.obs_dim();
        arch["actions"] = ac.actions();
    }
    return arch;
}

void save_net(const std::string& path, const AnyNet& net, const nlohmann::json& metadata) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write weights: " + path);
    out.write(kMagic, 8);
    if (std::holds_alternative<QNetwork>(net)) {
        const auto& q = std::get<QNetwork>(net);
        out.put(q.is_dueling() ? 1 : 0);
        write_u32(out, q.is_dueling() ? 3u : 1u);
        write_mlp(out, q.trunk_);
        if (q.is_dueling()) {
            write_mlp(out, q.value_);
            write_mlp(out, q.adv_);
        }
    } else {
        const auto& ac = std::get<ActorCriticNet>(net);
        out.put(2);
        write_u32(out, 3u);
        write_mlp(out, ac.trunk_);
        write_mlp(out, ac.actor_);
        write_mlp(out, ac.critic_);
    }
    if (!out) throw ConfigError("short write: " + path);

    nlohmann::json sidecar;
    sidecar["architecture"] = architecture_json(net);
    sidecar["metadata"] = metadata;
    std::ofstream side(path + ".json");
    side << sidecar.dump(2) << "\n";
}

AnyNet load_net(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("weight file not found: " + path);
    char magic[8];
    in.read(magic, 8);
    if (!in || std::memcmp(magic, kMagic, 8) != 0)
        throw ConfigError("not a weight file (bad magic): " + path);
    int kind = in.get();
    uint32_t stacks = read_u32(in);
    if (kind == 0) {
        if (stacks != 1) throw ConfigError("weight file: plain q expects 1 stack");
        QNetwork q;
        q.dueling_ = false;
        q.trunk_ = read_mlp(in);
        return q;
    }
    if (kind == 1) {
        if (stacks != 3) throw ConfigError("weight file: dueling q expects 3 stacks");
        QNetwork q;
        q.dueling_ = true;
        q.trunk_ = read_mlp(in);
        q.value_ = read_mlp(in);
        q.adv_ = read_mlp(in);
        return q;
    }
    if (kind == 2) {
        if (stacks != 3) throw ConfigError("weight file: actor-critic expects 3 stacks");
        ActorCriticNet ac;
        ac.trunk_ = read_mlp(in);
        ac.actor_ = read_mlp(in);
        ac.critic_ = read_mlp(in);
        return ac;
    }
    throw ConfigError("weight file: unknown net kind tag");
}

}  // namespace utc::nn
