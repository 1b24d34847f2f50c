#ifndef DECAFSA_AFSA_HPP
#define DECAFSA_AFSA_HPP

#include <cmath>
#include <cstdlib>
#include <optional>
#include <vector>

#include "decafsa/rng.hpp"

namespace decafsa {

struct SwarmConfig {
    int population = 20;          // N
    int max_iter = 200;           // K
    int trynum = 20;              // prey trials before fallback
    double visual0 = 10.0;        // initial field of view
    double step0 = 6.0;           // initial moving step
    double delta = 0.8;           // crowding factor
    double beta = 0.2;            // schedule lower limit factor
    double mu = 4.0;              // logistic control parameter
    double sub_accept_prob = 0.1;
    double sub_accept_eps = 0.05;
    int chaos_budget = 20;        // chaotic-search evaluations per iteration
};

// Decaying schedule shared by the field of view and the step: the weight
// 1 - (k-1)/(K-1) shrinks the value until it would pass the lower limit
// factor, after which the floor beta * initial holds. The orchestrator
// evaluates it against the initial value each iteration, which keeps the
// sequence inside [beta * initial, initial] and monotone non-increasing.
double schedule_visual(int k, int max_iters, double visual_k, double visual_0,
                       double beta);
double schedule_step(int k, int max_iters, double step_k, double step_0,
                     double beta);

// One logistic-map iterate mu * x * (1 - x); fully chaotic at mu = 4.
double logistic_step(double x, double mu);

// Logistic iterate stream seeded away from the map's fixed points and their
// preimages; reseeds itself in the measure-zero event an iterate leaves (0,1).
class ChaosStream {
public:
    ChaosStream(Rng& rng, double mu) : rng_(&rng), mu_(mu) { reseed(); }

    double next() {
        if (z_ <= 0.0 || z_ >= 1.0) reseed();
        z_ = logistic_step(z_, mu_);
        return z_;
    }

private:
    void reseed() {
        do {
            z_ = rand_real(*rng_, 0.05, 0.95);
        } while (std::abs(z_ - 0.25) < 1e-3 || std::abs(z_ - 0.5) < 1e-3 ||
                 std::abs(z_ - 0.75) < 1e-3);
    }

    Rng* rng_;
    double mu_;
    double z_ = 0.0;
};

// One artificial fish: a search state plus its cached objective value.
template <typename State>
struct Fish {
    State state;
    double fitness = 0.0;
};

// Global best record plus the stagnation counter.
template <typename State>
struct Bulletin {
    State best;
    double best_fitness = 0.0;
    int stop_time = 0;

    // Returns true (and resets stop_time) exactly when the record improves.
    bool offer(const State& state, double fitness) {
        if (fitness < best_fitness) {
            best = state;
            best_fitness = fitness;
            stop_time = 0;
            return true;
        }
        return false;
    }
};

// Which parts of the improved foraging are active; the plain algorithm uses
// a random displacement fallback and never accepts worsening candidates.
struct BehaviorPolicy {
    bool two_opt_fallback = true;
    bool sub_optimal_accept = true;
};

namespace detail {
inline int steps_from(double step) {
    return std::max(1, static_cast<int>(std::floor(step)));
}
}  // namespace detail

// Preying: sample up to trynum candidates in the field of view; move toward
// the first improving one (keeping the better of the partial move and the
// candidate itself). From the midpoint of the run a mildly worse candidate
// (relative worsening <= sub_accept_eps) is accepted with probability
// sub_accept_prob. When every trial fails, fall back to a 2-opt descent
// (or a random displacement under the plain policy).
template <typename D>
Fish<typename D::State> prey(const D& dom, const Fish<typename D::State>& fish,
                             int k, const SwarmConfig& cfg, double visual,
                             double step, const BehaviorPolicy& policy,
                             Rng& rng) {
    const int steps = detail::steps_from(step);
    const bool gate_open = 2 * k >= cfg.max_iter;
    for (int trial = 0; trial < cfg.trynum; ++trial) {
        auto candidate = dom.random_neighbor(fish.state, visual, rng);
        double cand_fitness = dom.objective(candidate);
        if (cand_fitness < fish.fitness) {
            auto moved = dom.move_toward(fish.state, candidate, steps, rng);
            double moved_fitness = dom.objective(moved);
            if (moved_fitness <= cand_fitness) return {std::move(moved), moved_fitness};
            return {std::move(candidate), cand_fitness};
        }
        if (policy.sub_optimal_accept && gate_open && fish.fitness > 0.0) {
            double rel = (cand_fitness - fish.fitness) / fish.fitness;
            if (rel <= cfg.sub_accept_eps && rand01(rng) < cfg.sub_accept_prob)
                return {std::move(candidate), cand_fitness};
        }
    }
    if (policy.two_opt_fallback) {
        auto improved = dom.local_improve(fish.state, 2);
        double fitness = dom.objective(improved);
        return {std::move(improved), fitness};
    }
    auto stepped = dom.random_step(fish.state, step, rng);
    double fitness = dom.objective(stepped);
    return {std::move(stepped), fitness};
}

// Clustering: move toward the center of the neighbors in view when the
// center is better and the neighborhood is not crowded; otherwise signal
// the caller to fall back to preying.
template <typename D>
std::optional<Fish<typename D::State>> cluster(
    const D& dom, const std::vector<Fish<typename D::State>>& swarm, int self,
    double visual, double step, double delta, Rng& rng) {
    const auto& fish = swarm[self];
    std::vector<typename D::State> neighbors;
    for (int i = 0; i < static_cast<int>(swarm.size()); ++i) {
        if (i == self) continue;
        if (dom.distance(fish.state, swarm[i].state) <= visual)
            neighbors.push_back(swarm[i].state);
    }
    if (neighbors.empty()) return std::nullopt;
    double crowding =
        static_cast<double>(neighbors.size()) / static_cast<double>(swarm.size());
    auto center = dom.center(neighbors);
    double center_fitness = dom.objective(center);
    if (center_fitness < fish.fitness && crowding < delta) {
        auto moved =
            dom.move_toward(fish.state, center, detail::steps_from(step), rng);
        double moved_fitness = dom.objective(moved);
        if (moved_fitness <= center_fitness)
            return Fish<typename D::State>{std::move(moved), moved_fitness};
        return Fish<typename D::State>{std::move(center), center_fitness};
    }
    return std::nullopt;
}

// Following: like cluster, but the target is the best neighbor in view.
template <typename D>
std::optional<Fish<typename D::State>> follow(
    const D& dom, const std::vector<Fish<typename D::State>>& swarm, int self,
    double visual, double step, double delta, Rng& rng) {
    const auto& fish = swarm[self];
    int best = -1;
    int in_view = 0;
    for (int i = 0; i < static_cast<int>(swarm.size()); ++i) {
        if (i == self) continue;
        if (dom.distance(fish.state, swarm[i].state) <= visual) {
            ++in_view;
            if (best < 0 || swarm[i].fitness < swarm[best].fitness) best = i;
        }
    }
    if (best < 0 || swarm[best].fitness >= fish.fitness) return std::nullopt;
    double crowding =
        static_cast<double>(in_view) / static_cast<double>(swarm.size());
    if (crowding >= delta) return std::nullopt;
    auto moved = dom.move_toward(fish.state, swarm[best].state,
                                 detail::steps_from(step), rng);
    double moved_fitness = dom.objective(moved);
    if (moved_fitness <= swarm[best].fitness)
        return Fish<typename D::State>{std::move(moved), moved_fitness};
    return swarm[best];
}

// Behavior selection: take the better of cluster and follow when either
// succeeds, otherwise prey.
template <typename D>
Fish<typename D::State> behave(const D& dom,
                               const std::vector<Fish<typename D::State>>& swarm,
                               int self, int k, const SwarmConfig& cfg,
                               double visual, double step,
                               const BehaviorPolicy& policy, Rng& rng) {
    auto clustered = cluster(dom, swarm, self, visual, step, cfg.delta, rng);
    auto followed = follow(dom, swarm, self, visual, step, cfg.delta, rng);
    if (clustered && followed)
        return clustered->fitness <= followed->fitness ? *clustered : *followed;
    if (clustered) return *clustered;
    if (followed) return *followed;
    return prey(dom, swarm[self], k, cfg, visual, step, policy, rng);
}

// Chaotic search around the current best state. Each logistic iterate maps
// the displacement -k*step + 2k*step*Z to a move count; the search radius
// factor k grows whenever a third of the budget passes without improvement.
// Never returns a fish worse than its input.
template <typename D>
Fish<typename D::State> chaos_search(const D& dom,
                                     const Fish<typename D::State>& input,
                                     double step, int budget, double mu,
                                     Rng& rng) {
    ChaosStream stream(rng, mu);
    Fish<typename D::State> best = input;
    int radius = 1;
    int stale = 0;
    const int expand_after = std::max(1, budget / 3);
    for (int eval = 0; eval < budget; ++eval) {
        double z = stream.next();
        double dx = -radius * step + 2.0 * radius * step * z;
        int moves = std::max(1, static_cast<int>(std::llround(std::abs(dx))));
        auto candidate = dom.chaos_perturb(best.state, moves, stream);
        double fitness = dom.objective(candidate);
        if (fitness < best.fitness) {
            best = {std::move(candidate), fitness};
            stale = 0;
        } else if (++stale >= expand_after) {
            ++radius;
            stale = 0;
        }
    }
    return best;
}

}  // namespace decafsa

#endif
