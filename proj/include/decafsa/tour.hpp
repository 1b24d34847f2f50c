#ifndef DECAFSA_TOUR_HPP
#define DECAFSA_TOUR_HPP

#include <utility>
#include <vector>

#include "decafsa/instance.hpp"
#include "decafsa/rng.hpp"

namespace decafsa {

// A closed tour: a permutation of city indices 0..n-1, interpreted
// cyclically (the edge order[n-1] -> order[0] closes it).
struct Tour {
    std::vector<int> order;

    int size() const { return static_cast<int>(order.size()); }
    bool operator==(const Tour&) const = default;
};

Tour identity_tour(int n);
Tour random_tour(int n, Rng& rng);
bool is_permutation(const Tour& t);

double tour_length(const Tour& t, const DistanceMatrix& d);

// Undirected edge set of a tour, each edge normalized to (min, max).
// n = 1 has no edges; n = 2 has the single edge {order[0], order[1]}.
std::vector<std::pair<int, int>> edge_set(const Tour& t);

// Number of undirected edges of a not present in b. Symmetric premetric:
// 0 <= result <= n, 0 iff the tours share an edge set (equal up to
// rotation/reflection).
int edge_distance(const Tour& a, const Tour& b);

// Reverses order[i..j] inclusive. Changes at most 2 cyclic edges.
Tour two_opt_move(const Tour& t, int i, int j);
void two_opt_move_inplace(Tour& t, int i, int j);

// First-improvement 2-opt descent in lexicographic (i, j) scan order.
// One pass = a full scan; returns early once a pass finds no improving
// move (2-opt local optimum). Never increases tour_length.
Tour two_opt_improve(const Tour& t, const DistanceMatrix& d, int max_passes);

// Applies up to max_steps guided moves toward target. Each move inserts an
// edge of target missing from the current tour via a segment reversal and
// strictly decreases edge_distance to target. With max_steps >= n the
// result reaches target's edge set exactly.
Tour move_toward(const Tour& t, const Tour& target, int max_steps, Rng& rng);

// Applies m random 2-opt reversals with m drawn uniformly from
// [1, max(1, floor(visual / 2))], so edge_distance(result, t) <= 2m.
Tour random_neighbor(const Tour& t, double visual, Rng& rng);

// Unguided displacement: m random reversals with m uniform in
// [1, max(1, floor(step))]. The plain-AFSA fallback move.
Tour random_step(const Tour& t, double step, Rng& rng);

// Consensus tour by greedy edge-frequency voting: repeatedly adds the edge
// with the highest occurrence count across neighbors that keeps every city
// at degree <= 2 and closes no premature subcycle; ties broken by shorter
// edge, then by lower (i, j). Completed to a Hamiltonian cycle with the
// shortest legal edges when votes run out.
Tour swarm_center(const std::vector<Tour>& neighbors, const DistanceMatrix& d);

}  // namespace decafsa

#endif
