#ifndef DECAFSA_DOMAINS_HPP
#define DECAFSA_DOMAINS_HPP

#include <algorithm>
#include <cmath>
#include <vector>

#include "decafsa/afsa.hpp"
#include "decafsa/de.hpp"
#include "decafsa/instance.hpp"
#include "decafsa/tour.hpp"

namespace decafsa {

// A search domain binds a state type to the operators the swarm and the DE
// phase need. The solver templates duck-type against this surface; see
// MtspDomain in mtsp.hpp for the plan-valued counterpart.
template <typename D>
concept SearchDomain = requires(const D& d, const typename D::State& s,
                                Rng& rng, ChaosStream& z) {
    { d.objective(s) } -> std::convertible_to<double>;
    { d.random_state(rng) } -> std::convertible_to<typename D::State>;
    { d.distance(s, s) } -> std::convertible_to<double>;
    { d.random_neighbor(s, 1.0, rng) } -> std::convertible_to<typename D::State>;
    { d.move_toward(s, s, 1, rng) } -> std::convertible_to<typename D::State>;
    { d.local_improve(s, 1) } -> std::convertible_to<typename D::State>;
    { d.random_step(s, 1.0, rng) } -> std::convertible_to<typename D::State>;
    { d.chaos_perturb(s, 1, z) } -> std::convertible_to<typename D::State>;
    { d.add_scaled_diff(s, s, s, 0.5) } -> std::convertible_to<typename D::State>;
    { d.crossover(s, s, 0.5, rng) } -> std::convertible_to<typename D::State>;
};

// Plain TSP search over closed tours scored by cyclic length.
class TourDomain {
public:
    using State = Tour;

    explicit TourDomain(const DistanceMatrix& dist) : dist_(&dist) {}

    double objective(const Tour& t) const { return tour_length(t, *dist_); }
    Tour random_state(Rng& rng) const { return random_tour(dist_->n(), rng); }
    double distance(const Tour& a, const Tour& b) const {
        return edge_distance(a, b);
    }
    Tour random_neighbor(const Tour& t, double visual, Rng& rng) const {
        return decafsa::random_neighbor(t, visual, rng);
    }
    Tour move_toward(const Tour& t, const Tour& target, int steps, Rng& rng) const {
        return decafsa::move_toward(t, target, steps, rng);
    }
    Tour local_improve(const Tour& t, int max_passes) const {
        return two_opt_improve(t, *dist_, max_passes);
    }
    Tour random_step(const Tour& t, double step, Rng& rng) const {
        return decafsa::random_step(t, step, rng);
    }
    Tour chaos_perturb(const Tour& t, int moves, ChaosStream& z) const {
        const int n = t.size();
        Tour out = t;
        if (n < 3) return out;
        for (int k = 0; k < moves; ++k) {
            int i = std::min(n - 1, static_cast<int>(std::floor(z.next() * n)));
            int j = std::min(n - 1, static_cast<int>(std::floor(z.next() * n)));
            if (i == j) j = (j + 1) % n;
            if (i > j) std::swap(i, j);
            std::reverse(out.order.begin() + i, out.order.begin() + j + 1);
        }
        return out;
    }
    Tour center(const std::vector<Tour>& neighbors) const {
        return swarm_center(neighbors, *dist_);
    }
    Tour add_scaled_diff(const Tour& base, const Tour& plus, const Tour& minus,
                         double f) const {
        Tour out;
        out.order = perm_add_scaled_diff(base.order, plus.order, minus.order, f);
        return out;
    }
    Tour crossover(const Tour& x, const Tour& v, double cr, Rng& rng) const {
        return binomial_cross(x, v, cr, rng);
    }

    const DistanceMatrix& matrix() const { return *dist_; }

private:
    const DistanceMatrix* dist_;
};

static_assert(SearchDomain<TourDomain>);

}  // namespace decafsa

#endif
