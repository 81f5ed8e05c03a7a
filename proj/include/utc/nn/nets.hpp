#pragma once

#include <span>
#include <vector>

#include "utc/nn/mlp.hpp"

namespace utc::nn {

// Q-value approximator, either a single stack or a dueling split. The dueling
// variant shares a trunk and recombines value/advantage streams into Q.
class QNetwork {
public:
    QNetwork() = default;

    static QNetwork plain(int obs_dim, int actions, int hidden, Rng& rng);
    static QNetwork dueling(int obs_dim, int actions, int hidden, int stream_hidden, Rng& rng);

    bool is_dueling() const { return dueling_; }
    int obs_dim() const { return trunk_.input_dim(); }
    int actions() const;

    std::vector<double> q(std::span<const double> s) const;

    struct Cache {
        MlpCache trunk, value, adv;
        std::vector<double> q;
    };
    struct Grad {
        MlpGrad trunk, value, adv;
        void zero();
    };

    std::vector<double> q_cached(std::span<const double> s, Cache& cache) const;
    // dq = dL/dQ per action; accumulates into grad.
    void backward(const Cache& cache, std::span<const double> dq, Grad& grad) const;

    Grad make_grad() const;
    std::vector<std::vector<double>*> param_blocks();
    static std::vector<std::vector<double>*> grad_blocks(Grad& g, bool dueling);
    std::vector<std::vector<double>*> grad_blocks(Grad& g) const { return grad_blocks(g, dueling_); }

    // Hard copy of all weights (target-network sync).
    void copy_weights_from(const QNetwork& other);

    Mlp trunk_, value_, adv_;
    bool dueling_ = false;
};

// Shared trunk with softmax-actor logits and a scalar critic head.
class ActorCriticNet {
public:
    ActorCriticNet() = default;
    ActorCriticNet(int obs_dim, int actions, int hidden, Rng& rng);

    int obs_dim() const { return trunk_.input_dim(); }
    int actions() const { return actor_.output_dim(); }

    struct Output {
        std::vector<double> logits;
        double value = 0.0;
    };
    Output evaluate(std::span<const double> s) const;

    struct Cache {
        MlpCache trunk, actor, critic;
    };
    struct Grad {
        MlpGrad trunk, actor, critic;
        void zero();
    };

    Output evaluate_cached(std::span<const double> s, Cache& cache) const;
    void backward(const Cache& cache, std::span<const double> dlogits, double dvalue,
                  Grad& grad) const;

    Grad make_grad() const;
    std::vector<std::vector<double>*> param_blocks();
    static std::vector<std::vector<double>*> grad_blocks(Grad& g);

    Mlp trunk_, actor_, critic_;
};

}  // namespace utc::nn
