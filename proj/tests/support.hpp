#ifndef DECAFSA_TESTS_SUPPORT_HPP
#define DECAFSA_TESTS_SUPPORT_HPP

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "decafsa/instance.hpp"
#include "decafsa/rng.hpp"
#include "decafsa/tour.hpp"

namespace decafsa::testing {

inline std::string data_path(const std::string& file) {
    return std::string(DECAFSA_DATA_DIR) + "/" + file;
}

inline TspInstance make_instance(std::vector<Point> coords,
                                 Metric metric = Metric::RealEuclidean) {
    TspInstance inst;
    inst.name = "micro";
    inst.n = static_cast<int>(coords.size());
    inst.coords = std::move(coords);
    inst.metric = metric;
    return inst;
}

// Unit square in convex order: optimal closed tour length 4.
inline TspInstance unit_square() {
    return make_instance({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
}

inline TspInstance random_instance(int n, Rng& rng, double span = 100.0) {
    std::vector<Point> coords;
    coords.reserve(n);
    for (int i = 0; i < n; ++i)
        coords.push_back({rand_real(rng, 0.0, span), rand_real(rng, 0.0, span)});
    return make_instance(std::move(coords));
}

// Independent length oracle: re-sums the matrix over the explicit edge list
// rather than the cyclic loop used by tour_length.
inline double resummed_length(const Tour& t, const DistanceMatrix& d) {
    double total = 0.0;
    for (auto [u, v] : edge_set(t)) total += d.at(u, v);
    if (t.size() == 2) total *= 2;  // out and back over the single edge
    return total;
}

// Exhaustive oracle: shortest tour over all (n-1)! permutations with city 0
// fixed. Usable up to n = 9 or so.
inline std::pair<double, Tour> brute_force_optimum(const DistanceMatrix& d) {
    const int n = d.n();
    std::vector<int> rest(n - 1);
    std::iota(rest.begin(), rest.end(), 1);
    Tour best;
    double best_length = std::numeric_limits<double>::infinity();
    do {
        Tour t;
        t.order.push_back(0);
        t.order.insert(t.order.end(), rest.begin(), rest.end());
        double len = tour_length(t, d);
        if (len < best_length) {
            best_length = len;
            best = t;
        }
    } while (std::next_permutation(rest.begin(), rest.end()));
    return {best_length, best};
}

}  // namespace decafsa::testing

#endif
