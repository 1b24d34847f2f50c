#ifndef DECAFSA_MTSP_HPP
#define DECAFSA_MTSP_HPP

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "decafsa/afsa.hpp"
#include "decafsa/instance.hpp"
#include "decafsa/rng.hpp"
#include "decafsa/tour.hpp"

namespace decafsa {

// A K-group investigation plan over N non-depot sites: `sites` is a
// permutation of slot indices 0..N-1 (the domain maps slots to instance
// sites) and `breaks` holds K-1 strictly increasing cut positions in (0, N),
// so every group gets a non-empty segment. Group g's route is
// depot -> segment_g -> depot.
struct MtspPlan {
    std::vector<int> sites;
    std::vector<int> breaks;
    int depot = 0;

    int group_count() const { return static_cast<int>(breaks.size()) + 1; }
    int site_count() const { return static_cast<int>(sites.size()); }
    // Half-open [first, last) slot range of group g.
    std::pair<int, int> segment(int g) const {
        int first = g == 0 ? 0 : breaks[g - 1];
        int last = g == group_count() - 1 ? site_count() : breaks[g];
        return {first, last};
    }
    bool operator==(const MtspPlan&) const = default;
};

// How the road correction coefficient enters the fuel term: the aggregate
// form uses Kr = 1 on the total distance; the per-edge form weights each
// travelled edge by the coefficient of its destination's road type.
enum class KrMode { AggregateUnity, PerEdge };

struct CostParams {
    double fuel_price = 7.0;       // p1, currency per liter
    double fuel_per_100km = 7.0;   // q, liters per 100 km
    double daily_cost = 250.0;     // p2, currency per person-day
    int people_per_group = 2;      // m
    double toll_per_km = 0.45;     // p3
    double parking_fee = 20.0;     // p4 per visited site
    double speed_kmh = 70.0;       // v
    double hours_per_site = 1.0;   // t
    std::array<double, 6> kr_table = {1.00, 1.10, 1.25, 1.35, 1.45, 1.70};
    KrMode kr_mode = KrMode::AggregateUnity;
    std::vector<int> road_types;   // per instance site, values 1..6
};

struct GroupCost {
    int site_count = 0;
    double distance = 0.0;  // km
    double hours = 0.0;
    int days = 0;
    double fuel = 0.0;      // C1 share
    double staff = 0.0;     // C2 share
    double other = 0.0;     // C3 share
};

struct CostBreakdown {
    std::vector<GroupCost> groups;
    double total_distance = 0.0;  // D
    int total_days = 0;           // T
    double fuel = 0.0;            // C1
    double staff = 0.0;           // C2
    double other = 0.0;           // C3
    double total = 0.0;           // C1 + C2 + C3
};

// Distance and site count of one group's closed depot route; the common
// currency between plan evaluation and the direct cost arithmetic.
struct GroupStats {
    double distance = 0.0;
    int site_count = 0;
};

// Cost arithmetic from per-group distance/site-count stats under the
// aggregate Kr = 1 fuel form. Days settle upward: floor(hours / 8) + 1.
CostBreakdown cost_from_groups(const std::vector<GroupStats>& groups,
                               const CostParams& params);

// ---- Plan-level evaluation --------------------------------------------------
// `dist` is the full instance matrix; `site_ids` maps plan slots to instance
// indices (the depot is excluded from the slots).

std::vector<GroupStats> group_stats(const MtspPlan& plan,
                                    const DistanceMatrix& dist,
                                    const std::vector<int>& site_ids);

std::pair<double, std::vector<double>> total_distance(
    const MtspPlan& plan, const DistanceMatrix& dist,
    const std::vector<int>& site_ids);

double fuel_cost(const MtspPlan& plan, const DistanceMatrix& dist,
                 const std::vector<int>& site_ids, const CostParams& params);

// (T, per-group hours, per-group days)
struct PersonDays {
    int total_days = 0;
    std::vector<double> hours;
    std::vector<int> days;
};
PersonDays person_days(const MtspPlan& plan, const DistanceMatrix& dist,
                       const std::vector<int>& site_ids,
                       const CostParams& params);

double personnel_cost(int total_days, const CostParams& params);

double other_cost(const MtspPlan& plan, const DistanceMatrix& dist,
                  const std::vector<int>& site_ids, const CostParams& params);

CostBreakdown total_cost(const MtspPlan& plan, const DistanceMatrix& dist,
                         const std::vector<int>& site_ids,
                         const CostParams& params);

// Structural checks: permutation over all slots, valid break positions,
// every site in exactly one group. Empty result means the plan is valid.
std::vector<std::string> validate_plan(const MtspPlan& plan, int k_groups,
                                       int n_sites);

// ---- Search space lift ------------------------------------------------------

// Repairs an arbitrary break vector to K-1 strictly increasing positions
// in [1, N-1].
std::vector<int> repair_breaks(std::vector<int> breaks, int n_sites);

// One random structural move: a 2-opt reversal on the sites permutation, a
// +-1 break shift that keeps segments non-empty, or relocating one site
// into another group.
MtspPlan plan_random_move(const MtspPlan& plan, Rng& rng);

// Edge distance over the sites permutation plus sum |break_i(a) - break_i(b)|.
int plan_distance(const MtspPlan& a, const MtspPlan& b);

MtspPlan plan_random_neighbor(const MtspPlan& plan, double visual, Rng& rng);

// Guided move: break positions step toward the target's first, then missing
// target edges are inserted into the sites permutation; each applied step
// strictly decreases plan_distance.
MtspPlan plan_move_toward(const MtspPlan& plan, const MtspPlan& target,
                          int max_steps, Rng& rng);

// The MTSP search domain driven by the hybrid solver: plans scored by the
// full monetary objective.
class MtspDomain {
public:
    using State = MtspPlan;

    MtspDomain(const DistanceMatrix& dist, std::vector<int> site_ids,
               int depot_id, int k_groups, const CostParams& params);

    double objective(const MtspPlan& plan) const;
    CostBreakdown breakdown(const MtspPlan& plan) const;

    MtspPlan random_state(Rng& rng) const;
    double distance(const MtspPlan& a, const MtspPlan& b) const {
        return plan_distance(a, b);
    }
    MtspPlan random_neighbor(const MtspPlan& plan, double visual, Rng& rng) const {
        return plan_random_neighbor(plan, visual, rng);
    }
    MtspPlan move_toward(const MtspPlan& plan, const MtspPlan& target,
                         int steps, Rng& rng) const {
        return plan_move_toward(plan, target, steps, rng);
    }
    MtspPlan local_improve(const MtspPlan& plan, int max_passes) const;
    MtspPlan random_step(const MtspPlan& plan, double step, Rng& rng) const;
    MtspPlan chaos_perturb(const MtspPlan& plan, int moves, ChaosStream& z) const;
    MtspPlan center(const std::vector<MtspPlan>& neighbors) const;
    MtspPlan add_scaled_diff(const MtspPlan& base, const MtspPlan& plus,
                             const MtspPlan& minus, double f) const;
    MtspPlan crossover(const MtspPlan& x, const MtspPlan& v, double cr,
                       Rng& rng) const;

    const std::vector<int>& site_ids() const { return site_ids_; }
    int depot_id() const { return depot_id_; }
    int k_groups() const { return k_groups_; }
    const CostParams& params() const { return params_; }

private:
    const DistanceMatrix* dist_;
    std::vector<int> site_ids_;
    int depot_id_;
    int k_groups_;
    CostParams params_;
    DistanceMatrix site_dist_;  // slot-indexed submatrix for consensus voting
};

// ---- Scenario files ---------------------------------------------------------

// JSON scenario: site coordinates, the depot (index or extra coordinate),
// requested group counts and the cost parameters.
struct Scenario {
    std::string name;
    TspInstance instance;        // all coordinates, depot included
    int depot_index = 0;
    std::vector<int> group_counts;
    CostParams params;
};

Scenario parse_scenario(const std::string& json_text);
Scenario load_scenario_file(const std::string& path);

// Table-shaped serializations of a breakdown (one column per group).
std::string breakdown_to_csv(const CostBreakdown& breakdown);
std::string breakdown_to_json(const CostBreakdown& breakdown);

}  // namespace decafsa

#endif
