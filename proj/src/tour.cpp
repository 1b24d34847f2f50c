#include "decafsa/tour.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace decafsa {

namespace {

constexpr double kImproveEps = 1e-9;

// Union-find over city indices, used by swarm_center's cycle guard.
struct DisjointSet {
    std::vector<int> parent;
    explicit DisjointSet(int n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Two adjacency slots per city, -1 when unused.
struct Adjacency {
    std::vector<std::array<int, 2>> slots;
    std::vector<int> degree;
    explicit Adjacency(int n) : slots(n, {-1, -1}), degree(n, 0) {}
    void add(int u, int v) {
        slots[u][degree[u]++] = v;
        slots[v][degree[v]++] = u;
    }
    bool has(int u, int v) const {
        return slots[u][0] == v || slots[u][1] == v;
    }
};

Adjacency tour_adjacency(const Tour& t) {
    const int n = t.size();
    Adjacency adj(n);
    if (n == 2) {
        adj.add(t.order[0], t.order[1]);
        return adj;
    }
    if (n >= 3) {
        for (int i = 0; i < n; ++i)
            adj.add(t.order[i], t.order[(i + 1) % n]);
    }
    return adj;
}

void apply_reversal(std::vector<int>& order, int i, int j) {
    std::reverse(order.begin() + i, order.begin() + j + 1);
}

// The two segment reversals that make cities u and v adjacent, as (i, j)
// reversal bounds. Positions of u and v must not already be adjacent.
std::array<std::pair<int, int>, 2> insertion_reversals(int pu, int pv) {
    if (pu > pv) std::swap(pu, pv);
    return {{{pu + 1, pv}, {pu, pv - 1}}};
}

}  // namespace

Tour identity_tour(int n) {
    Tour t;
    t.order.resize(n);
    std::iota(t.order.begin(), t.order.end(), 0);
    return t;
}

Tour random_tour(int n, Rng& rng) {
    Tour t = identity_tour(n);
    std::shuffle(t.order.begin(), t.order.end(), rng);
    return t;
}

bool is_permutation(const Tour& t) {
    const int n = t.size();
    std::vector<bool> seen(n, false);
    for (int c : t.order) {
        if (c < 0 || c >= n || seen[c]) return false;
        seen[c] = true;
    }
    return true;
}

double tour_length(const Tour& t, const DistanceMatrix& d) {
    const int n = t.size();
    if (n != d.n()) throw std::invalid_argument("tour/matrix dimension mismatch");
    double total = 0.0;
    for (int i = 0; i < n; ++i)
        total += d.at(t.order[i], t.order[(i + 1) % n]);
    return total;
}

std::vector<std::pair<int, int>> edge_set(const Tour& t) {
    const int n = t.size();
    std::vector<std::pair<int, int>> edges;
    if (n == 2) {
        edges.emplace_back(std::min(t.order[0], t.order[1]),
                           std::max(t.order[0], t.order[1]));
        return edges;
    }
    if (n < 2) return edges;
    edges.reserve(n);
    for (int i = 0; i < n; ++i) {
        int u = t.order[i], v = t.order[(i + 1) % n];
        edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    return edges;
}

int edge_distance(const Tour& a, const Tour& b) {
    const int n = a.size();
    if (n != b.size()) throw std::invalid_argument("edge_distance dimension mismatch");
    if (n < 3) {
        return 0;  // at most one possible edge set on < 3 cities
    }
    Adjacency badj = tour_adjacency(b);
    int missing = 0;
    for (int i = 0; i < n; ++i) {
        int u = a.order[i], v = a.order[(i + 1) % n];
        if (!badj.has(u, v)) ++missing;
    }
    return missing;
}

Tour two_opt_move(const Tour& t, int i, int j) {
    Tour result = t;
    two_opt_move_inplace(result, i, j);
    return result;
}

void two_opt_move_inplace(Tour& t, int i, int j) {
    const int n = t.size();
    if (i < 0 || j >= n || i >= j)
        throw std::out_of_range("two_opt_move requires 0 <= i < j < n");
    apply_reversal(t.order, i, j);
}

Tour two_opt_improve(const Tour& t, const DistanceMatrix& d, int max_passes) {
    const int n = t.size();
    if (n != d.n()) throw std::invalid_argument("tour/matrix dimension mismatch");
    Tour result = t;
    if (n < 4 || max_passes < 1) return result;
    auto& order = result.order;
    for (int pass = 0; pass < max_passes; ++pass) {
        bool improved = false;
        for (int i = 0; i < n - 1; ++i) {
            for (int j = i + 1; j < n; ++j) {
                if (i == 0 && j == n - 1) continue;  // full reversal, no edge change
                int prev = order[(i + n - 1) % n];
                int next = order[(j + 1) % n];
                double delta = d.at(prev, order[j]) + d.at(order[i], next) -
                               d.at(prev, order[i]) - d.at(order[j], next);
                if (delta < -kImproveEps) {
                    apply_reversal(order, i, j);
                    improved = true;
                }
            }
        }
        if (!improved) break;
    }
    return result;
}

Tour move_toward(const Tour& t, const Tour& target, int max_steps, Rng& rng) {
    const int n = t.size();
    if (n != target.size())
        throw std::invalid_argument("move_toward dimension mismatch");
    Tour current = t;
    if (n < 4 || max_steps < 1) return current;

    for (int step = 0; step < max_steps; ++step) {
        int dist_before = edge_distance(current, target);
        if (dist_before == 0) break;

        // One guided move: insert a missing target edge via a reversal that
        // strictly lowers the distance. Rarely every single insertion only
        // holds the distance level; then hop to the best non-worsening
        // insertion and retry from there, still counting one move.
        Tour probe = current;
        bool committed = false;
        for (int hop = 0; hop < 8 && !committed; ++hop) {
            int dist_probe = edge_distance(probe, target);
            std::vector<int> pos(n);
            for (int i = 0; i < n; ++i) pos[probe.order[i]] = i;

            Adjacency cur_adj = tour_adjacency(probe);
            std::vector<std::pair<int, int>> missing;
            for (auto [u, v] : edge_set(target))
                if (!cur_adj.has(u, v)) missing.emplace_back(u, v);
            std::shuffle(missing.begin(), missing.end(), rng);

            Tour best_hop;
            int best_dist = dist_probe;
            bool have_hop = false;
            for (auto [u, v] : missing) {
                auto options = insertion_reversals(pos[u], pos[v]);
                if (rand_int(rng, 0, 1) == 1) std::swap(options[0], options[1]);
                for (auto [ri, rj] : options) {
                    Tour candidate = probe;
                    apply_reversal(candidate.order, ri, rj);
                    int dist_cand = edge_distance(candidate, target);
                    if (dist_cand < dist_before) {
                        current = std::move(candidate);
                        committed = true;
                        break;
                    }
                    if (dist_cand <= best_dist) {
                        best_dist = dist_cand;
                        best_hop = std::move(candidate);
                        have_hop = true;
                    }
                }
                if (committed) break;
            }
            if (!committed) {
                if (!have_hop) return current;  // unreachable in testing
                probe = std::move(best_hop);
            }
        }
        if (!committed) return current;
    }
    return current;
}

namespace {

Tour random_reversals(const Tour& t, int count, Rng& rng) {
    Tour result = t;
    const int n = t.size();
    if (n < 3) return result;
    for (int k = 0; k < count; ++k) {
        int i = rand_int(rng, 0, n - 2);
        int j = rand_int(rng, i + 1, n - 1);
        apply_reversal(result.order, i, j);
    }
    return result;
}

}  // namespace

Tour random_neighbor(const Tour& t, double visual, Rng& rng) {
    int hi = std::max(1, static_cast<int>(std::floor(visual / 2.0)));
    int m = rand_int(rng, 1, hi);
    return random_reversals(t, m, rng);
}

Tour random_step(const Tour& t, double step, Rng& rng) {
    int hi = std::max(1, static_cast<int>(std::floor(step)));
    int m = rand_int(rng, 1, hi);
    return random_reversals(t, m, rng);
}

Tour swarm_center(const std::vector<Tour>& neighbors, const DistanceMatrix& d) {
    if (neighbors.empty())
        throw std::invalid_argument("swarm_center: empty neighbor list");
    const int n = neighbors.front().size();
    if (n == 1) return identity_tour(1);
    if (n == 2) return neighbors.front();

    struct Vote {
        int u, v, count;
        double length;
    };
    std::unordered_map<long long, int> counts;
    for (const Tour& t : neighbors) {
        if (t.size() != n)
            throw std::invalid_argument("swarm_center: mixed tour dimensions");
        for (auto [u, v] : edge_set(t)) counts[static_cast<long long>(u) * n + v]++;
    }
    std::vector<Vote> votes;
    votes.reserve(counts.size());
    for (auto [key, count] : counts) {
        int u = static_cast<int>(key / n), v = static_cast<int>(key % n);
        votes.push_back({u, v, count, d.at(u, v)});
    }
    std::sort(votes.begin(), votes.end(), [](const Vote& a, const Vote& b) {
        if (a.count != b.count) return a.count > b.count;
        if (a.length != b.length) return a.length < b.length;
        if (a.u != b.u) return a.u < b.u;
        return a.v < b.v;
    });

    Adjacency adj(n);
    DisjointSet components(n);
    int added = 0;
    auto try_add = [&](int u, int v) {
        if (adj.degree[u] >= 2 || adj.degree[v] >= 2) return;
        bool closes = components.find(u) == components.find(v);
        if (closes && added != n - 1) return;  // premature subcycle
        adj.add(u, v);
        components.unite(u, v);
        ++added;
    };
    for (const Vote& vote : votes) {
        if (added == n) break;
        try_add(vote.u, vote.v);
    }
    // Complete with the shortest legal edges if the votes did not already
    // close a Hamiltonian cycle.
    while (added < n) {
        int bu = -1, bv = -1;
        double best = 0.0;
        for (int u = 0; u < n; ++u) {
            if (adj.degree[u] >= 2) continue;
            for (int v = u + 1; v < n; ++v) {
                if (adj.degree[v] >= 2 || adj.has(u, v)) continue;
                if (components.find(u) == components.find(v) && added != n - 1) continue;
                if (bu < 0 || d.at(u, v) < best) {
                    best = d.at(u, v);
                    bu = u;
                    bv = v;
                }
            }
        }
        try_add(bu, bv);
    }

    Tour center;
    center.order.reserve(n);
    int prev = -1, cur = 0;
    for (int i = 0; i < n; ++i) {
        center.order.push_back(cur);
        int next = adj.slots[cur][0] == prev ? adj.slots[cur][1] : adj.slots[cur][0];
        prev = cur;
        cur = next;
    }
    return center;
}

}  // namespace decafsa
