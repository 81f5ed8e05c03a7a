#pragma once

#include <span>

#include "utc/nn/nets.hpp"

namespace utc::rl {

// y = r + gamma * max_a' Q_target(s', a'); y = r on terminal transitions.
double td_target_dqn(double r, std::span<const double> s2, bool done,
                     const nn::QNetwork& target_net, double gamma);

// Double Q-learning: action selected by the online net, evaluated by the
// target net. Argmax ties break toward the lowest action index.
double td_target_double(double r, std::span<const double> s2, bool done,
                        const nn::QNetwork& online_net, const nn::QNetwork& target_net,
                        double gamma);

// Geometric annealing, eps(0) = 1, eps(total_episodes - 1) = eps_final,
// strictly decreasing.
class EpsilonSchedule {
public:
    EpsilonSchedule(double eps_final, int total_episodes)
        : eps_final_(eps_final), total_(total_episodes) {}

    double at(int episode) const;
    double decay_ratio() const;  // per-episode rho

private:
    double eps_final_;
    int total_;
};

}  // namespace utc::rl
