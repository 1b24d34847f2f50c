#include <algorithm>

#include "decafsa/hybrid.hpp"
#include "decafsa/mtsp.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace decafsa;
using namespace decafsa::testing;

namespace {

HybridConfig quick_config(Variant v, std::uint64_t seed, int iters = 60) {
    HybridConfig cfg;
    cfg.variant = v;
    cfg.seed = seed;
    cfg.swarm.max_iter = iters;
    return cfg;
}

}  // namespace

TEST_CASE("single-city instance solves immediately") {
    DistanceMatrix d = distance_matrix(make_instance({{5, 5}}));
    TourDomain dom(d);
    HybridConfig cfg = quick_config(Variant::DeCafsa, 1, 5);
    cfg.swarm.population = 3;
    RunResult<Tour> res = run(dom, cfg);
    CHECK(res.best_fitness == 0.0);
    CHECK(res.history.front() == 0.0);
    CHECK(res.iterations == 5);
}

TEST_CASE("history is monotone non-increasing and ends at the best") {
    Rng rng(401);
    TspInstance inst = random_instance(15, rng);
    DistanceMatrix d = distance_matrix(inst);
    TourDomain dom(d);
    for (Variant v : all_variants()) {
        RunResult<Tour> res = run(dom, quick_config(v, 7));
        REQUIRE(res.history.size() == 60);
        for (size_t i = 1; i < res.history.size(); ++i)
            CHECK(res.history[i] <= res.history[i - 1] + 1e-12);
        CHECK(res.history.back() == doctest::Approx(res.best_fitness));
        CHECK(res.best_fitness == doctest::Approx(dom.objective(res.best)));
    }
}

TEST_CASE("identical seeds reproduce bit-identical runs") {
    Rng rng(409);
    TspInstance inst = random_instance(12, rng);
    DistanceMatrix d = distance_matrix(inst);
    TourDomain dom(d);
    for (Variant v : all_variants()) {
        RunResult<Tour> a = run(dom, quick_config(v, 99));
        RunResult<Tour> b = run(dom, quick_config(v, 99));
        CHECK(a.best.order == b.best.order);
        CHECK(a.history == b.history);
    }
}

TEST_CASE("variant feature matrix is respected") {
    Rng rng(419);
    TspInstance inst = random_instance(10, rng);
    DistanceMatrix d = distance_matrix(inst);
    TourDomain dom(d);

    SUBCASE("plain swarm never schedules, never chaoses, never evolves") {
        RunResult<Tour> res = run(dom, quick_config(Variant::Afsa, 3));
        CHECK(res.events.schedule_evaluations == 0);
        CHECK(res.events.chaos_calls == 0);
        CHECK(res.events.de_epoch_iterations.empty());
    }
    SUBCASE("chaotic swarm schedules and chaoses but never evolves") {
        RunResult<Tour> res = run(dom, quick_config(Variant::Cafsa, 3));
        CHECK(res.events.schedule_evaluations == 60);
        CHECK(res.events.chaos_calls == 60);
        CHECK(res.events.de_epoch_iterations.empty());
    }
    SUBCASE("hybrids evolve on stagnation") {
        HybridConfig cfg = quick_config(Variant::DeCafsa, 3, 120);
        cfg.max_time = 5;
        RunResult<Tour> res = run(dom, cfg);
        CHECK(res.events.chaos_calls == 120);
        // A 10-city run stalls well before 120 iterations.
        CHECK_FALSE(res.events.de_epoch_iterations.empty());
    }
    SUBCASE("pure DE variant runs without behaviors") {
        RunResult<Tour> res = run(dom, quick_config(Variant::De, 3));
        CHECK(res.events.schedule_evaluations == 0);
        CHECK(res.events.chaos_calls == 0);
        CHECK(res.events.de_epoch_iterations.empty());
    }
}

TEST_CASE("stagnation gate fires exactly at max_time") {
    Rng rng(421);
    TspInstance inst = random_instance(10, rng);
    DistanceMatrix d = distance_matrix(inst);
    TourDomain dom(d);
    HybridConfig cfg = quick_config(Variant::DeCafsa, 17, 150);
    cfg.max_time = 8;
    RunResult<Tour> res = run(dom, cfg);

    REQUIRE(res.events.stagnation_checks.size() == res.history.size());
    std::vector<bool> de_fired(res.history.size() + 1, false);
    for (int it : res.events.de_epoch_iterations) de_fired[it] = true;
    for (size_t i = 0; i < res.history.size(); ++i) {
        int checked = res.events.stagnation_checks[i];
        CHECK(de_fired[i + 1] == (checked >= cfg.max_time));
        if (de_fired[i + 1] && i + 1 < res.history.size()) {
            // Counter was reset: the next check starts over from 0 or 1.
            CHECK(res.events.stagnation_checks[i + 1] <= 1);
        }
    }
    CHECK_FALSE(res.events.de_epoch_iterations.empty());
}

TEST_CASE("eight-city oracle: the full hybrid nails the optimum") {
    int hits = 0;
    const int seeds = 20;
    for (int s = 0; s < seeds; ++s) {
        Rng rng(700 + s);
        TspInstance inst = random_instance(8, rng);
        DistanceMatrix d = distance_matrix(inst);
        auto [opt, opt_tour] = brute_force_optimum(d);
        TourDomain dom(d);
        RunResult<Tour> res = run(dom, quick_config(Variant::DeCafsa, 700 + s, 200));
        if (res.best_fitness <= opt + 1e-6) ++hits;
    }
    CHECK(hits >= 19);
}

TEST_CASE("run_variant_matrix") {
    Rng rng(431);
    TspInstance inst = random_instance(12, rng);
    DistanceMatrix d = distance_matrix(inst);
    HybridConfig base = quick_config(Variant::DeCafsa, 1, 40);

    SUBCASE("single variant, single run collapses to that run") {
        BenchReport rep = run_variant_matrix(d, {Variant::Cafsa}, {42}, base);
        REQUIRE(rep.rows.size() == 1);
        CHECK(rep.rows[0].optimal == doctest::Approx(rep.rows[0].worst));
        CHECK(rep.rows[0].optimal == doctest::Approx(rep.rows[0].average));
        TourDomain dom(d);
        HybridConfig cfg = base;
        cfg.variant = Variant::Cafsa;
        cfg.seed = 42;
        RunResult<Tour> direct = run(dom, cfg);
        CHECK(rep.rows[0].optimal == doctest::Approx(direct.best_fitness));
    }
    SUBCASE("repeat with the same seeds is identical") {
        std::vector<std::uint64_t> seeds{1, 2, 3};
        BenchReport a = run_variant_matrix(d, all_variants(), seeds, base);
        BenchReport b = run_variant_matrix(d, all_variants(), seeds, base);
        REQUIRE(a.rows.size() == b.rows.size());
        for (size_t i = 0; i < a.rows.size(); ++i) {
            CHECK(a.rows[i].optimal == b.rows[i].optimal);
            CHECK(a.rows[i].worst == b.rows[i].worst);
            CHECK(a.rows[i].average == b.rows[i].average);
        }
        CHECK(a.histories == b.histories);
    }
    SUBCASE("parallel jobs do not change the numbers") {
        std::vector<std::uint64_t> seeds{5, 6};
        BenchReport serial =
            run_variant_matrix(d, {Variant::Afsa, Variant::Cafsa}, seeds, base, 1);
        BenchReport parallel =
            run_variant_matrix(d, {Variant::Afsa, Variant::Cafsa}, seeds, base, 4);
        for (size_t i = 0; i < serial.rows.size(); ++i)
            CHECK(serial.rows[i].average == parallel.rows[i].average);
        CHECK(serial.histories == parallel.histories);
    }
    SUBCASE("row ordering invariant: optimal <= average <= worst") {
        BenchReport rep =
            run_variant_matrix(d, all_variants(), {11, 12, 13, 14}, base);
        for (const VariantStats& row : rep.rows) {
            CHECK(row.optimal <= row.average + 1e-12);
            CHECK(row.average <= row.worst + 1e-12);
        }
    }
}

TEST_CASE("hybrid drives the MTSP domain") {
    Rng rng(433);
    TspInstance inst = random_instance(13, rng);
    DistanceMatrix d = distance_matrix(inst);
    std::vector<int> site_ids;
    for (int i = 0; i < 12; ++i) site_ids.push_back(i);
    MtspDomain dom(d, site_ids, 12, 3, CostParams{});
    HybridConfig cfg = quick_config(Variant::DeCafsa, 5, 40);
    cfg.swarm.population = 10;
    RunResult<MtspPlan> res = run(dom, cfg);
    CHECK(validate_plan(res.best, 3, 12).empty());
    CHECK(res.best_fitness == doctest::Approx(dom.objective(res.best)));
    for (size_t i = 1; i < res.history.size(); ++i)
        CHECK(res.history[i] <= res.history[i - 1] + 1e-12);
}
