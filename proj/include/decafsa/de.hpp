#ifndef DECAFSA_DE_HPP
#define DECAFSA_DE_HPP

#include <array>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "decafsa/afsa.hpp"
#include "decafsa/rng.hpp"
#include "decafsa/tour.hpp"

namespace decafsa {

// Ordered transpositions turning one permutation into another; the discrete
// difference vector of the DE mutation strategies.
struct SwapSequence {
    std::vector<std::pair<int, int>> swaps;

    int size() const { return static_cast<int>(swaps.size()); }
    bool empty() const { return swaps.empty(); }
};

struct DeConfig {
    double scale_f = 0.5;                         // F
    double scale_k = 0.5;                         // second factor of rand-to-best
    double cross_rate = 0.5;                      // CR
    std::array<double, 3> lambdas = {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};
};

// Position-wise construction: scanning left to right, whenever
// from[p] != to[p], swap from[p] with the position currently holding to[p].
// Applying the result to `from` yields `to`; length <= n - 1.
SwapSequence swap_sequence(const std::vector<int>& from, const std::vector<int>& to);

std::vector<int> apply_swaps(std::vector<int> base, const SwapSequence& seq);

// Prefix of length ceil(f * |seq|).
SwapSequence scale_sequence(const SwapSequence& seq, double f);

// base combined with f * (plus - minus), realized as the scaled swap
// sequence taking `minus` to `plus`, applied to `base`.
std::vector<int> perm_add_scaled_diff(const std::vector<int>& base,
                                      const std::vector<int>& plus,
                                      const std::vector<int>& minus, double f);

// Binomial crossover with order-preserving repair: positions marked (rand()
// <= cr or the forced j_rand) inherit v's city; the remaining cities fill
// the unmarked positions in the relative order they appear in x. Always a
// permutation; position j_rand always carries v's city.
std::vector<int> binomial_cross_perm(const std::vector<int>& x,
                                     const std::vector<int>& v, double cr,
                                     Rng& rng);

// Random partition of 0..n-1 cut at floor(l1*n) and floor(l1*n)+floor(l2*n).
std::array<std::vector<int>, 3> split_populations(
    int n, const std::array<double, 3>& lambdas, Rng& rng);

// ---- Tour-level strategy wrappers -----------------------------------------
// Each draws its index tuple (pairwise distinct, excluding the target i) and
// returns nothing when the subpopulation cannot supply the required distinct
// indices, which skips mutation for that individual.

std::optional<Tour> mutate_rand_1(const std::vector<Tour>& pop,
                                  const std::vector<int>& sub, int i, double f,
                                  Rng& rng);

std::optional<Tour> mutate_best_1(const std::vector<Tour>& pop,
                                  const std::vector<int>& sub, const Tour& best,
                                  int i, double f, Rng& rng);

std::optional<Tour> mutate_rand_to_best_1(const std::vector<Tour>& pop,
                                          const std::vector<int>& sub,
                                          const Tour& best, int i, double f,
                                          double k_de, Rng& rng);

Tour binomial_cross(const Tour& x, const Tour& v, double cr, Rng& rng);

// Greedy selection: the offspring survives iff its fitness is no worse.
template <typename FishT>
const FishT& greedy_select(const FishT& parent, const FishT& offspring) {
    return offspring.fitness <= parent.fitness ? offspring : parent;
}

// Draws `count` distinct indices from `candidates` excluding `exclude`;
// returns false if the pool is too small.
bool draw_distinct(const std::vector<int>& candidates,
                   const std::vector<int>& exclude, int count, Rng& rng,
                   std::vector<int>& out);

// One differential-evolution epoch over the whole swarm. With multi_strategy
// the swarm splits into three subpopulations running rand/1, best/1 and
// rand-to-best/1; otherwise everyone runs rand/1 on the single population.
// Individuals whose strategy cannot draw distinct indices pass through
// unchanged. Greedy selection keeps the swarm's minimum fitness from rising.
template <typename D>
std::vector<Fish<typename D::State>> de_epoch(
    const D& dom, const std::vector<Fish<typename D::State>>& swarm,
    const typename D::State& best, const DeConfig& cfg, bool multi_strategy,
    Rng& rng, int* accepted = nullptr) {
    using State = typename D::State;
    const int n = static_cast<int>(swarm.size());

    std::array<std::vector<int>, 3> subs;
    if (multi_strategy) {
        subs = split_populations(n, cfg.lambdas, rng);
    } else {
        subs[0].resize(n);
        std::iota(subs[0].begin(), subs[0].end(), 0);
    }
    std::vector<int> whole(n);
    std::iota(whole.begin(), whole.end(), 0);

    std::vector<Fish<State>> next = swarm;
    for (int strategy = 0; strategy < 3; ++strategy) {
        for (int i : subs[strategy]) {
            std::optional<State> mutant;
            if (strategy == 0) {
                std::vector<int> r1, r23;
                if (draw_distinct(whole, {i}, 1, rng, r1) &&
                    draw_distinct(subs[0], {i, r1[0]}, 2, rng, r23))
                    mutant = dom.add_scaled_diff(swarm[r1[0]].state,
                                                 swarm[r23[0]].state,
                                                 swarm[r23[1]].state, cfg.scale_f);
            } else if (strategy == 1) {
                std::vector<int> r12;
                if (draw_distinct(subs[1], {i}, 2, rng, r12))
                    mutant = dom.add_scaled_diff(best, swarm[r12[0]].state,
                                                 swarm[r12[1]].state, cfg.scale_f);
            } else {
                std::vector<int> r12;
                if (draw_distinct(subs[2], {i}, 2, rng, r12)) {
                    State pulled = dom.add_scaled_diff(swarm[i].state, best,
                                                       swarm[i].state, cfg.scale_k);
                    mutant = dom.add_scaled_diff(pulled, swarm[r12[0]].state,
                                                 swarm[r12[1]].state, cfg.scale_f);
                }
            }
            if (!mutant) continue;
            State trial = dom.crossover(swarm[i].state, *mutant, cfg.cross_rate, rng);
            double trial_fitness = dom.objective(trial);
            if (trial_fitness <= swarm[i].fitness) {
                next[i] = {std::move(trial), trial_fitness};
                if (accepted && trial_fitness < swarm[i].fitness) ++*accepted;
            }
        }
    }
    return next;
}

}  // namespace decafsa

#endif
