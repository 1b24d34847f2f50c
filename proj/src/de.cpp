#include "decafsa/de.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace decafsa {

SwapSequence swap_sequence(const std::vector<int>& from, const std::vector<int>& to) {
    const int n = static_cast<int>(from.size());
    if (to.size() != from.size())
        throw std::invalid_argument("swap_sequence dimension mismatch");
    SwapSequence seq;
    std::vector<int> work = from;
    std::vector<int> pos(n);
    for (int p = 0; p < n; ++p) pos[work[p]] = p;
    for (int p = 0; p < n; ++p) {
        if (work[p] == to[p]) continue;
        int q = pos[to[p]];
        seq.swaps.emplace_back(p, q);
        std::swap(work[p], work[q]);
        pos[work[p]] = p;
        pos[work[q]] = q;
    }
    return seq;
}

std::vector<int> apply_swaps(std::vector<int> base, const SwapSequence& seq) {
    for (auto [a, b] : seq.swaps) std::swap(base[a], base[b]);
    return base;
}

SwapSequence scale_sequence(const SwapSequence& seq, double f) {
    int keep = static_cast<int>(std::ceil(f * seq.size()));
    keep = std::clamp(keep, 0, seq.size());
    SwapSequence scaled;
    scaled.swaps.assign(seq.swaps.begin(), seq.swaps.begin() + keep);
    return scaled;
}

std::vector<int> perm_add_scaled_diff(const std::vector<int>& base,
                                      const std::vector<int>& plus,
                                      const std::vector<int>& minus, double f) {
    return apply_swaps(base, scale_sequence(swap_sequence(minus, plus), f));
}

std::vector<int> binomial_cross_perm(const std::vector<int>& x,
                                     const std::vector<int>& v, double cr,
                                     Rng& rng) {
    const int n = static_cast<int>(x.size());
    if (v.size() != x.size())
        throw std::invalid_argument("binomial_cross dimension mismatch");
    int j_rand = rand_int(rng, 0, n - 1);
    std::vector<bool> marked(n, false);
    std::vector<bool> used(n, false);
    for (int j = 0; j < n; ++j)
        if (j == j_rand || rand01(rng) <= cr) marked[j] = true;

    std::vector<int> child(n, -1);
    for (int j = 0; j < n; ++j) {
        if (marked[j] && !used[v[j]]) {
            child[j] = v[j];
            used[v[j]] = true;
        }
    }
    // Unfilled positions take the unused cities in x's relative order.
    int fill = 0;
    for (int j = 0; j < n; ++j) {
        if (child[j] >= 0) continue;
        while (used[x[fill]]) ++fill;
        child[j] = x[fill];
        used[x[fill]] = true;
    }
    return child;
}

std::array<std::vector<int>, 3> split_populations(
    int n, const std::array<double, 3>& lambdas, Rng& rng) {
    std::vector<int> ids(n);
    std::iota(ids.begin(), ids.end(), 0);
    std::shuffle(ids.begin(), ids.end(), rng);
    int n1 = static_cast<int>(std::floor(lambdas[0] * n));
    int n2 = static_cast<int>(std::floor(lambdas[1] * n));
    n1 = std::clamp(n1, 0, n);
    n2 = std::clamp(n2, 0, n - n1);
    std::array<std::vector<int>, 3> subs;
    subs[0].assign(ids.begin(), ids.begin() + n1);
    subs[1].assign(ids.begin() + n1, ids.begin() + n1 + n2);
    subs[2].assign(ids.begin() + n1 + n2, ids.end());
    return subs;
}

bool draw_distinct(const std::vector<int>& candidates,
                   const std::vector<int>& exclude, int count, Rng& rng,
                   std::vector<int>& out) {
    std::vector<int> pool;
    pool.reserve(candidates.size());
    for (int c : candidates) {
        bool banned = std::find(exclude.begin(), exclude.end(), c) != exclude.end();
        if (!banned) pool.push_back(c);
    }
    if (static_cast<int>(pool.size()) < count) return false;
    std::shuffle(pool.begin(), pool.end(), rng);
    out.assign(pool.begin(), pool.begin() + count);
    return true;
}

std::optional<Tour> mutate_rand_1(const std::vector<Tour>& pop,
                                  const std::vector<int>& sub, int i, double f,
                                  Rng& rng) {
    // r1 comes from the whole swarm, r2 and r3 from the subpopulation;
    // r1, r2, r3 and i pairwise distinct.
    std::vector<int> whole(pop.size());
    std::iota(whole.begin(), whole.end(), 0);
    std::vector<int> r1s;
    if (!draw_distinct(whole, {i}, 1, rng, r1s)) return std::nullopt;
    std::vector<int> r23;
    if (!draw_distinct(sub, {i, r1s[0]}, 2, rng, r23)) return std::nullopt;
    Tour v;
    v.order = perm_add_scaled_diff(pop[r1s[0]].order, pop[r23[0]].order,
                                   pop[r23[1]].order, f);
    return v;
}

std::optional<Tour> mutate_best_1(const std::vector<Tour>& pop,
                                  const std::vector<int>& sub, const Tour& best,
                                  int i, double f, Rng& rng) {
    std::vector<int> r12;
    if (!draw_distinct(sub, {i}, 2, rng, r12)) return std::nullopt;
    Tour v;
    v.order = perm_add_scaled_diff(best.order, pop[r12[0]].order,
                                   pop[r12[1]].order, f);
    return v;
}

std::optional<Tour> mutate_rand_to_best_1(const std::vector<Tour>& pop,
                                          const std::vector<int>& sub,
                                          const Tour& best, int i, double f,
                                          double k_de, Rng& rng) {
    std::vector<int> r12;
    if (!draw_distinct(sub, {i}, 2, rng, r12)) return std::nullopt;
    // Pull X_i toward best by k, then add the scaled random difference.
    std::vector<int> pulled =
        perm_add_scaled_diff(pop[i].order, best.order, pop[i].order, k_de);
    Tour v;
    v.order = perm_add_scaled_diff(pulled, pop[r12[0]].order,
                                   pop[r12[1]].order, f);
    return v;
}

Tour binomial_cross(const Tour& x, const Tour& v, double cr, Rng& rng) {
    Tour child;
    child.order = binomial_cross_perm(x.order, v.order, cr, rng);
    return child;
}

}  // namespace decafsa
