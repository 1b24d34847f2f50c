#ifndef DECAFSA_HYBRID_HPP
#define DECAFSA_HYBRID_HPP

#include <chrono>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "decafsa/afsa.hpp"
#include "decafsa/de.hpp"
#include "decafsa/domains.hpp"

namespace decafsa {

enum class Variant { Afsa, Cafsa, De, DeAfsa, DeCafsa };

Variant parse_variant(std::string_view name);
std::string variant_name(Variant v);
const std::vector<Variant>& all_variants();

// Which machinery a variant activates. The plain swarm keeps a constant
// field of view and step, falls back to a random displacement and never
// accepts worsening candidates; the chaotic variants add the schedules,
// the 2-opt fallback, sub-optimal acceptance and the chaotic search; the
// hybrids add the stagnation-triggered DE phase (multi-strategy only on
// top of the chaotic swarm). The pure DE variant skips fish behaviors and
// runs a single-population rand/1 epoch every iteration.
struct VariantFeatures {
    bool fish_behaviors = true;
    bool adaptive_schedules = false;
    bool two_opt_fallback = false;
    bool sub_optimal_accept = false;
    bool chaos = false;
    bool de_on_stagnation = false;
    bool de_every_iteration = false;
    bool multi_strategy_de = false;
};

VariantFeatures variant_features(Variant v);

struct HybridConfig {
    SwarmConfig swarm;
    DeConfig de;
    int max_time = 10;  // stagnation threshold in iterations
    Variant variant = Variant::DeCafsa;
    std::uint64_t seed = 1;
};

// What actually fired during a run, for feature-matrix assertions.
struct RunEvents {
    std::vector<int> de_epoch_iterations;
    std::vector<int> stagnation_checks;  // stop_time compared to max_time, per iteration
    int chaos_calls = 0;
    int schedule_evaluations = 0;
    int de_accepted_offspring = 0;
};

template <typename State>
struct RunResult {
    State best{};
    double best_fitness = 0.0;
    std::vector<double> history;  // bulletin value after each iteration
    double wall_seconds = 0.0;
    int iterations = 0;
    RunEvents events;
};

// The full orchestration: initialize N random fish and the bulletin, then
// per iteration apply the selected behaviors with the scheduled field of
// view and step, chaotic search on the iteration's best, bulletin update,
// and the DE phase once the stagnation counter reaches max_time.
template <SearchDomain D>
RunResult<typename D::State> run(const D& dom, const HybridConfig& cfg) {
    using State = typename D::State;
    const auto started = std::chrono::steady_clock::now();
    const VariantFeatures feats = variant_features(cfg.variant);
    const SwarmConfig& sw = cfg.swarm;
    const BehaviorPolicy policy{feats.two_opt_fallback, feats.sub_optimal_accept};

    Rng rng(cfg.seed);
    std::vector<Fish<State>> swarm;
    swarm.reserve(sw.population);
    for (int i = 0; i < sw.population; ++i) {
        State state = dom.random_state(rng);
        double fitness = dom.objective(state);
        swarm.push_back({std::move(state), fitness});
    }

    auto best_index = [&swarm] {
        int best = 0;
        for (int i = 1; i < static_cast<int>(swarm.size()); ++i)
            if (swarm[i].fitness < swarm[best].fitness) best = i;
        return best;
    };

    RunResult<State> result;
    Bulletin<State> bulletin;
    {
        int b = best_index();
        bulletin.best = swarm[b].state;
        bulletin.best_fitness = swarm[b].fitness;
    }

    for (int m = 1; m <= sw.max_iter; ++m) {
        double visual = sw.visual0;
        double step = sw.step0;
        if (feats.adaptive_schedules) {
            // Evaluated from the initial values so the sequence decays
            // linearly into the beta floor.
            visual = schedule_visual(m, sw.max_iter, sw.visual0, sw.visual0, sw.beta);
            step = schedule_step(m, sw.max_iter, sw.step0, sw.step0, sw.beta);
            ++result.events.schedule_evaluations;
        }

        if (feats.fish_behaviors) {
            const std::vector<Fish<State>> snapshot = swarm;
            for (int i = 0; i < static_cast<int>(swarm.size()); ++i)
                swarm[i] = behave(dom, snapshot, i, m, sw, visual, step, policy, rng);
            if (feats.chaos) {
                int b = best_index();
                swarm[b] = chaos_search(dom, swarm[b], step, sw.chaos_budget,
                                        sw.mu, rng);
                ++result.events.chaos_calls;
            }
        }
        if (feats.de_every_iteration) {
            swarm = de_epoch(dom, swarm, swarm[best_index()].state, cfg.de,
                             feats.multi_strategy_de, rng);
        }

        {
            int b = best_index();
            if (!bulletin.offer(swarm[b].state, swarm[b].fitness))
                ++bulletin.stop_time;
        }
        result.events.stagnation_checks.push_back(bulletin.stop_time);

        if (feats.de_on_stagnation && bulletin.stop_time >= cfg.max_time) {
            swarm = de_epoch(dom, swarm, swarm[best_index()].state, cfg.de,
                             feats.multi_strategy_de, rng);
            result.events.de_epoch_iterations.push_back(m);
            int b = best_index();
            bulletin.offer(swarm[b].state, swarm[b].fitness);
            bulletin.stop_time = 0;
        }

        result.history.push_back(bulletin.best_fitness);
    }

    result.best = bulletin.best;
    result.best_fitness = bulletin.best_fitness;
    result.iterations = sw.max_iter;
    result.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
            .count();
    return result;
}

// ---- Benchmark matrix -------------------------------------------------------

struct VariantStats {
    Variant variant = Variant::DeCafsa;
    double optimal = 0.0;  // best over runs
    double worst = 0.0;
    double average = 0.0;
    double avg_time_s = 0.0;
};

struct BenchReport {
    std::vector<VariantStats> rows;
    // histories[v][r] is the per-iteration history of variant v, run r.
    std::vector<std::vector<std::vector<double>>> histories;
};

// Runs every variant over the identical seed list; jobs > 1 parallelizes
// across (variant, seed) runs without touching per-run determinism.
BenchReport run_variant_matrix(const DistanceMatrix& dist,
                               const std::vector<Variant>& variants,
                               const std::vector<std::uint64_t>& seeds,
                               const HybridConfig& base, int jobs = 1);

}  // namespace decafsa

#endif
