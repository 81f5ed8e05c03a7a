#include "utc/rl/targets.hpp"

#include <cmath>

#include "utc/nn/ops.hpp"

namespace utc::rl {

double td_target_dqn(double r, std::span<const double> s2, bool done,
                     const nn::QNetwork& target_net, double gamma) {
    if (done) return r;
    auto q = target_net.q(s2);
    return r + gamma * q[nn::argmax(q)];
}

double td_target_double(double r, std::span<const double> s2, bool done,
                        const nn::QNetwork& online_net, const nn::QNetwork& target_net,
                        double gamma) {
    if (done) return r;
    auto q_online = online_net.q(s2);
    int a_star = nn::argmax(q_online);
    auto q_target = target_net.q(s2);
    return r + gamma * q_target[a_star];
}

double EpsilonSchedule::at(int episode) const {
    if (total_ <= 1) return episode <= 0 ? 1.0 : eps_final_;
    if (episode <= 0) return 1.0;
    if (episode >= total_ - 1) return eps_final_;
    // exp(k/(E-1) * ln(eps_final)) hits both endpoints to machine precision
    return std::exp(static_cast<double>(episode) / (total_ - 1) * std::log(eps_final_));
}

double EpsilonSchedule::decay_ratio() const {
    return std::exp(std::log(eps_final_) / (total_ - 1));
}

}  // namespace utc::rl
