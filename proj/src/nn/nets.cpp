#include "utc/nn/nets.hpp"

#include <cassert>

#include "utc/nn/ops.hpp"

namespace utc::nn {

QNetwork QNetwork::plain(int obs_dim, int actions, int hidden, Rng& rng) {
    QNetwork n;
    n.dueling_ = false;
    n.trunk_ = Mlp({obs_dim, hidden, hidden, actions}, {Act::Relu, Act::Relu, Act::Linear});
    n.trunk_.init_weights(rng);
    return n;
}

QNetwork QNetwork::dueling(int obs_dim, int actions, int hidden, int stream_hidden, Rng& rng) {
    QNetwork n;
    n.dueling_ = true;
    n.trunk_ = Mlp({obs_dim, hidden, hidden}, {Act::Relu, Act::Relu});
    n.value_ = Mlp({hidden, stream_hidden, 1}, {Act::Relu, Act::Linear});
    n.adv_ = Mlp({hidden, stream_hidden, actions}, {Act::Relu, Act::Linear});
    n.trunk_.init_weights(rng);
    n.value_.init_weights(rng);
    n.adv_.init_weights(rng);
    return n;
}

int QNetwork::actions() const {
    return dueling_ ? adv_.output_dim() : trunk_.output_dim();
}

std::vector<double> QNetwork::q(std::span<const double> s) const {
    if (!dueling_) return trunk_.forward(s);
    auto h = trunk_.forward(s);
    auto v = value_.forward(h);
    auto a = adv_.forward(h);
    return dueling_combine(v[0], a);
}

std::vector<double> QNetwork::q_cached(std::span<const double> s, Cache& cache) const {
    if (!dueling_) {
        cache.q = trunk_.forward_cached(s, cache.trunk);
        return cache.q;
    }
    auto h = trunk_.forward_cached(s, cache.trunk);
    auto v = value_.forward_cached(h, cache.value);
    auto a = adv_.forward_cached(h, cache.adv);
    cache.q = dueling_combine(v[0], a);
    return cache.q;
}

void QNetwork::backward(const Cache& cache, std::span<const double> dq, Grad& grad) const {
    if (!dueling_) {
        trunk_.backward(cache.trunk, dq, grad.trunk);
        return;
    }
    // Q_j = V + A_j - mean(A):  dV = sum(dq), dA_k = dq_k - mean(dq)
    const int n = static_cast<int>(dq.size());
    double sum = 0.0;
    for (double d : dq) sum += d;
    std::vector<double> da(n);
    for (int k = 0; k < n; ++k) da[k] = dq[k] - sum / n;
    std::vector<double> dv{sum};
    auto dh_v = value_.backward(cache.value, dv, grad.value);
    auto dh_a = adv_.backward(cache.adv, da, grad.adv);
    for (size_t i = 0; i < dh_v.size(); ++i) dh_v[i] += dh_a[i];
    trunk_.backward(cache.trunk, dh_v, grad.trunk);
}

void QNetwork::Grad::zero() {
    trunk.zero();
    value.zero();
    adv.zero();
}

QNetwork::Grad QNetwork::make_grad() const {
    Grad g;
    g.trunk = trunk_.make_grad();
    if (dueling_) {
        g.value = value_.make_grad();
        g.adv = adv_.make_grad();
    }
    return g;
}

std::vector<std::vector<double>*> QNetwork::param_blocks() {
    std::vector<std::vector<double>*> out;
    collect_params(trunk_, out);
    if (dueling_) {
        collect_params(value_, out);
        collect_params(adv_, out);
    }
    return out;
}

std::vector<std::vector<double>*> QNetwork::grad_blocks(Grad& g, bool dueling) {
    std::vector<std::vector<double>*> out;
    collect_grads(g.trunk, out);
    if (dueling) {
        collect_grads(g.value, out);
        collect_grads(g.adv, out);
    }
    return out;
}

void QNetwork::copy_weights_from(const QNetwork& other) {
    dueling_ = other.dueling_;
    trunk_ = other.trunk_;
    value_ = other.value_;
    adv_ = other.adv_;
}

ActorCriticNet::ActorCriticNet(int obs_dim, int actions, int hidden, Rng& rng) {
    trunk_ = Mlp({obs_dim, hidden, hidden}, {Act::Relu, Act::Relu});
    actor_ = Mlp({hidden, actions}, {Act::Linear});
    critic_ = Mlp({hidden, 1}, {Act::Linear});
    trunk_.init_weights(rng);
    actor_.init_weights(rng);
    critic_.init_weights(rng);
}

ActorCriticNet::Output ActorCriticNet::evaluate(std::span<const double> s) const {
    auto h = trunk_.forward(s);
    Output out;
    out.logits = actor_.forward(h);
    out.value = critic_.forward(h)[0];
    return out;
}

ActorCriticNet::Output ActorCriticNet::evaluate_cached(std::span<const double> s,
                                                       Cache& cache) const {
    auto h = trunk_.forward_cached(s, cache.trunk);
    Output out;
    out.logits = actor_.forward_cached(h, cache.actor);
    out.value = critic_.forward_cached(h, cache.critic)[0];
    return out;
}

void ActorCriticNet::backward(const Cache& cache, std::span<const double> dlogits, double dvalue,
                              Grad& grad) const {
    auto dh_a = actor_.backward(cache.actor, dlogits, grad.actor);
    std::vector<double> dv{dvalue};
    auto dh_c = critic_.backward(cache.critic, dv, grad.critic);
    for (size_t i = 0; i < dh_a.size(); ++i) dh_a[i] += dh_c[i];
    trunk_.backward(cache.trunk, dh_a, grad.trunk);
}

void ActorCriticNet::Grad::zero() {
    trunk.zero();
    actor.zero();
    critic.zero();
}

ActorCriticNet::Grad ActorCriticNet::make_grad() const {
    Grad g;
    g.trunk = trunk_.make_grad();
    g.actor = actor_.make_grad();
    g.critic = critic_.make_grad();
    return g;
}

std::vector<std::vector<double>*> ActorCriticNet::param_blocks() {
    std::vector<std::vector<double>*> out;
    collect_params(trunk_, out);
    collect_params(actor_, out);
    collect_params(critic_, out);
    return out;
}

std::vector<std::vector<double>*> ActorCriticNet::grad_blocks(Grad& g) {
    std::vector<std::vector<double>*> out;
    collect_grads(g.trunk, out);
    collect_grads(g.actor, out);
    collect_grads(g.critic, out);
    return out;
}

}  // namespace utc::nn
