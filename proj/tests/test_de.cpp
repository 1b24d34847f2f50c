#include <numeric>
#include <set>

#include "decafsa/de.hpp"
#include "decafsa/domains.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace decafsa;
using namespace decafsa::testing;

TEST_CASE("swap_sequence") {
    SUBCASE("identity gives an empty sequence") {
        std::vector<int> p{3, 1, 0, 2};
        CHECK(swap_sequence(p, p).empty());
    }
    SUBCASE("single transposition") {
        SwapSequence s = swap_sequence({0, 1, 2}, {1, 0, 2});
        REQUIRE(s.size() == 1);
        CHECK(s.swaps[0] == std::pair<int, int>{0, 1});
    }
    SUBCASE("round trip on 1000 random pairs") {
        Rng rng(101);
        for (int trial = 0; trial < 1000; ++trial) {
            int n = rand_int(rng, 1, 20);
            Tour a = random_tour(n, rng), b = random_tour(n, rng);
            SwapSequence s = swap_sequence(a.order, b.order);
            CHECK(apply_swaps(a.order, s) == b.order);
            CHECK(s.size() <= n - (n > 0 ? 1 : 0));
        }
    }
}

TEST_CASE("scale_sequence keeps the ceil(F * len) prefix") {
    SwapSequence s;
    for (int i = 0; i < 5; ++i) s.swaps.emplace_back(i, i + 1);
    CHECK(scale_sequence(s, 1.0).size() == 5);
    CHECK(scale_sequence(s, 0.0).size() == 0);
    CHECK(scale_sequence(s, 0.5).size() == 3);
}

namespace {

std::vector<Tour> identical_pop(const Tour& t, int n) {
    return std::vector<Tour>(n, t);
}

}  // namespace

TEST_CASE("mutate_rand_1") {
    Rng rng(103);
    SUBCASE("zero difference vector returns the base") {
        Tour shared = random_tour(6, rng);
        std::vector<Tour> pop = identical_pop(shared, 5);
        pop[0] = random_tour(6, rng);  // base candidate may be any fish
        auto v = mutate_rand_1(pop, {1, 2, 3, 4}, 1, 1.0, rng);
        REQUIRE(v.has_value());
        // r2 == r3 content-wise, so V equals whichever r1 was drawn.
        bool matches_any = false;
        for (const Tour& p : pop) matches_any |= (v->order == p.order);
        CHECK(matches_any);
    }
    SUBCASE("F = 0 returns X_r1 exactly") {
        std::vector<Tour> pop;
        for (int i = 0; i < 5; ++i) pop.push_back(random_tour(7, rng));
        auto v = mutate_rand_1(pop, {0, 1, 2, 3, 4}, 2, 0.0, rng);
        REQUIRE(v.has_value());
        bool is_member = false;
        for (const Tour& p : pop) is_member |= (v->order == p.order);
        CHECK(is_member);
    }
    SUBCASE("hand trace with a full-length difference") {
        // r3 = (0,1,2,3,4) -> r2 = (1,0,3,2,4): swaps (0,1) then (2,3).
        // Applied to r1 = (4,3,2,1,0): swap pos 0/1 -> (3,4,2,1,0),
        // then pos 2/3 -> (3,4,1,2,0).
        std::vector<int> r3{0, 1, 2, 3, 4};
        std::vector<int> r2{1, 0, 3, 2, 4};
        std::vector<int> r1{4, 3, 2, 1, 0};
        std::vector<int> v = perm_add_scaled_diff(r1, r2, r3, 1.0);
        CHECK(v == std::vector<int>{3, 4, 1, 2, 0});
    }
    SUBCASE("too-small subpopulation signals a skip") {
        std::vector<Tour> pop = identical_pop(random_tour(5, rng), 4);
        CHECK_FALSE(mutate_rand_1(pop, {1}, 1, 0.5, rng).has_value());
    }
}

TEST_CASE("mutate_best_1") {
    Rng rng(107);
    Tour best = random_tour(6, rng);
    SUBCASE("identical subpopulation returns the best fish") {
        std::vector<Tour> pop = identical_pop(random_tour(6, rng), 6);
        auto v = mutate_best_1(pop, {0, 1, 2, 3, 4, 5}, best, 0, 0.5, rng);
        REQUIRE(v.has_value());
        CHECK(v->order == best.order);
    }
    SUBCASE("hand trace, F = 0.5") {
        // r2 = (0,1,2,3,4) -> r1 = (2,1,0,4,3): swaps (0,2) then (3,4);
        // F = 0.5 keeps ceil(0.5*2) = 1 swap. Applied to best = (1,2,3,4,0):
        // swap positions 0 and 2 -> (3,2,1,4,0).
        std::vector<Tour> pop{Tour{{2, 1, 0, 4, 3}}, Tour{{0, 1, 2, 3, 4}}};
        Tour b{{1, 2, 3, 4, 0}};
        SwapSequence diff = swap_sequence(pop[1].order, pop[0].order);
        REQUIRE(diff.size() == 2);
        std::vector<int> v =
            apply_swaps(b.order, scale_sequence(diff, 0.5));
        CHECK(v == std::vector<int>{3, 2, 1, 4, 0});
    }
}

TEST_CASE("mutate_rand_to_best_1") {
    Rng rng(109);
    std::vector<Tour> pop;
    for (int i = 0; i < 6; ++i) pop.push_back(random_tour(8, rng));
    Tour best = random_tour(8, rng);
    std::vector<int> sub{0, 1, 2, 3, 4, 5};

    SUBCASE("K = 0, F = 0 returns the target unchanged") {
        auto v = mutate_rand_to_best_1(pop, sub, best, 3, 0.0, 0.0, rng);
        REQUIRE(v.has_value());
        CHECK(v->order == pop[3].order);
    }
    SUBCASE("K = 1, F = 0 returns the best") {
        auto v = mutate_rand_to_best_1(pop, sub, best, 3, 0.0, 1.0, rng);
        REQUIRE(v.has_value());
        CHECK(v->order == best.order);
    }
    SUBCASE("valid permutation under mixed scaling") {
        for (int trial = 0; trial < 200; ++trial) {
            auto v = mutate_rand_to_best_1(pop, sub, best, trial % 6,
                                           rand01(rng), rand01(rng), rng);
            REQUIRE(v.has_value());
            CHECK(is_permutation(*v));
        }
    }
}

TEST_CASE("binomial_cross") {
    Rng rng(113);
    SUBCASE("CR = 1 copies the mutant") {
        Tour x = random_tour(9, rng), v = random_tour(9, rng);
        Tour child = binomial_cross(x, v, 1.0, rng);
        CHECK(child.order == v.order);
    }
    SUBCASE("CR = 0 still injects the forced gene") {
        for (int trial = 0; trial < 100; ++trial) {
            Tour x = random_tour(7, rng), v = random_tour(7, rng);
            Tour child = binomial_cross(x, v, 0.0, rng);
            CHECK(is_permutation(child));
        }
    }
    SUBCASE("hand trace of the fill rule") {
        // Marked positions {0, 2} take v's cities 3 and 1; the unused
        // cities 0, 2 fill positions 1, 3 in x's relative order.
        std::vector<int> x{0, 1, 2, 3};
        std::vector<int> v{3, 2, 1, 0};
        std::vector<int> child(4, -1);
        std::vector<bool> used(4, false);
        for (int j : {0, 2}) {
            child[j] = v[j];
            used[v[j]] = true;
        }
        int fill = 0;
        for (int j = 0; j < 4; ++j) {
            if (child[j] >= 0) continue;
            while (used[x[fill]]) ++fill;
            child[j] = x[fill];
            used[x[fill]] = true;
        }
        CHECK(child == std::vector<int>{3, 0, 1, 2});
    }
    SUBCASE("offspring carries v's city at j_rand") {
        // Reproduce the mark set with a cloned rng to locate j_rand.
        for (int trial = 0; trial < 500; ++trial) {
            int n = rand_int(rng, 2, 12);
            Tour x = random_tour(n, rng), v = random_tour(n, rng);
            double cr = rand01(rng);
            Rng probe = rng;
            int j_rand = rand_int(probe, 0, n - 1);
            Tour child = binomial_cross(x, v, cr, rng);
            CHECK(is_permutation(child));
            CHECK(child.order[j_rand] == v.order[j_rand]);
        }
    }
}

TEST_CASE("greedy_select keeps the offspring on ties") {
    struct F {
        int id;
        double fitness;
    };
    F parent{0, 10.0}, tie{1, 10.0}, worse{2, 11.0}, better{3, 9.0};
    CHECK(greedy_select(parent, tie).id == 1);
    CHECK(greedy_select(parent, worse).id == 0);
    CHECK(greedy_select(parent, better).id == 3);
}

TEST_CASE("split_populations") {
    Rng rng(127);
    SUBCASE("thirds of 20 split 6/6/8") {
        auto subs = split_populations(20, {1.0 / 3, 1.0 / 3, 1.0 / 3}, rng);
        CHECK(subs[0].size() == 6);
        CHECK(subs[1].size() == 6);
        CHECK(subs[2].size() == 8);
    }
    SUBCASE("degenerate lambdas") {
        auto subs = split_populations(10, {1.0, 0.0, 0.0}, rng);
        CHECK(subs[0].size() == 10);
        CHECK(subs[1].empty());
        CHECK(subs[2].empty());
    }
    SUBCASE("always a partition") {
        for (int trial = 0; trial < 1000; ++trial) {
            int n = rand_int(rng, 1, 40);
            double a = rand01(rng), b = rand01(rng);
            if (a + b > 1.0) {
                a /= 2;
                b /= 2;
            }
            auto subs = split_populations(n, {a, b, 1.0 - a - b}, rng);
            std::set<int> all;
            size_t total = 0;
            for (const auto& sub : subs) {
                total += sub.size();
                all.insert(sub.begin(), sub.end());
            }
            CHECK(total == static_cast<size_t>(n));
            CHECK(all.size() == static_cast<size_t>(n));
        }
    }
}

TEST_CASE("de_epoch") {
    Rng rng(131);
    TspInstance inst = random_instance(8, rng);
    DistanceMatrix d = distance_matrix(inst);
    TourDomain dom(d);
    DeConfig cfg;

    auto make_swarm = [&](int n) {
        std::vector<Fish<Tour>> swarm;
        for (int i = 0; i < n; ++i) {
            Tour t = random_tour(8, rng);
            swarm.push_back({t, dom.objective(t)});
        }
        return swarm;
    };
    auto min_fitness = [](const std::vector<Fish<Tour>>& swarm) {
        double best = swarm[0].fitness;
        for (const auto& f : swarm) best = std::min(best, f.fitness);
        return best;
    };
    auto best_state = [](const std::vector<Fish<Tour>>& swarm) {
        int b = 0;
        for (int i = 1; i < static_cast<int>(swarm.size()); ++i)
            if (swarm[i].fitness < swarm[b].fitness) b = i;
        return swarm[b].state;
    };

    SUBCASE("identical swarm keeps its fitness") {
        Tour t = random_tour(8, rng);
        std::vector<Fish<Tour>> swarm(10, {t, dom.objective(t)});
        auto next = de_epoch(dom, swarm, t, cfg, true, rng);
        for (const auto& f : next) CHECK(f.fitness == doctest::Approx(swarm[0].fitness));
    }
    SUBCASE("never raises the minimum fitness (100 fuzzed epochs)") {
        for (int trial = 0; trial < 100; ++trial) {
            auto swarm = make_swarm(rand_int(rng, 4, 20));
            double before = min_fitness(swarm);
            auto next = de_epoch(dom, swarm, best_state(swarm), cfg,
                                 trial % 2 == 0, rng);
            CHECK(next.size() == swarm.size());
            CHECK(min_fitness(next) <= before + 1e-9);
            for (const auto& f : next) CHECK(is_permutation(f.state));
        }
    }
    SUBCASE("50 epochs usually reach the 8-city optimum") {
        int hits = 0;
        const int seeds = 20;
        for (int s = 0; s < seeds; ++s) {
            Rng run_rng(1000 + s);
            TspInstance oracle_inst = random_instance(8, run_rng);
            DistanceMatrix od = distance_matrix(oracle_inst);
            TourDomain odom(od);
            auto [opt, opt_tour] = brute_force_optimum(od);
            std::vector<Fish<Tour>> swarm;
            for (int i = 0; i < 20; ++i) {
                Tour t = random_tour(8, run_rng);
                swarm.push_back({t, odom.objective(t)});
            }
            for (int epoch = 0; epoch < 50; ++epoch)
                swarm = de_epoch(odom, swarm, best_state(swarm), cfg, true,
                                 run_rng);
            if (min_fitness(swarm) <= opt + 1e-6) ++hits;
        }
        CHECK(hits >= 18);  // >= 90% of 20 seeds
    }
}
