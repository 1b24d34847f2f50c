#include "decafsa/mtsp.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "decafsa/de.hpp"
#include "json.hpp"

namespace decafsa {

namespace {

int settle_days(double hours) {
    return static_cast<int>(std::floor(hours / 8.0)) + 1;
}

double kr_of(const CostParams& params, int instance_site) {
    if (params.road_types.empty())
        throw std::invalid_argument("per-edge fuel mode requires road_types");
    int type = params.road_types.at(instance_site);
    if (type < 1 || type > 6)
        throw std::invalid_argument("road type out of range 1..6");
    return params.kr_table[type - 1];
}

// Instance indices of group g's closed route: depot, segment, depot.
template <typename Fn>
void for_each_route_edge(const MtspPlan& plan, const std::vector<int>& site_ids,
                         int g, Fn&& fn) {
    auto [first, last] = plan.segment(g);
    int prev = plan.depot;
    for (int p = first; p < last; ++p) {
        int cur = site_ids[plan.sites[p]];
        fn(prev, cur);
        prev = cur;
    }
    fn(prev, plan.depot);
}

}  // namespace

CostBreakdown cost_from_groups(const std::vector<GroupStats>& groups,
                               const CostParams& params) {
    if (params.speed_kmh <= 0.0)
        throw std::invalid_argument("speed must be positive");
    CostBreakdown out;
    for (const GroupStats& g : groups) {
        GroupCost gc;
        gc.site_count = g.site_count;
        gc.distance = g.distance;
        gc.hours = g.distance / params.speed_kmh +
                   g.site_count * params.hours_per_site;
        gc.days = settle_days(gc.hours);
        gc.fuel = params.fuel_price * params.fuel_per_100km * g.distance / 100.0;
        gc.staff = params.daily_cost * gc.days * params.people_per_group;
        gc.other = params.toll_per_km * g.distance + params.parking_fee * g.site_count;
        out.total_distance += gc.distance;
        out.total_days += gc.days;
        out.fuel += gc.fuel;
        out.staff += gc.staff;
        out.other += gc.other;
        out.groups.push_back(gc);
    }
    out.total = out.fuel + out.staff + out.other;
    return out;
}

std::vector<GroupStats> group_stats(const MtspPlan& plan,
                                    const DistanceMatrix& dist,
                                    const std::vector<int>& site_ids) {
    std::vector<GroupStats> stats(plan.group_count());
    for (int g = 0; g < plan.group_count(); ++g) {
        auto [first, last] = plan.segment(g);
        stats[g].site_count = last - first;
        for_each_route_edge(plan, site_ids, g, [&](int from, int to) {
            stats[g].distance += dist.at(from, to);
        });
    }
    return stats;
}

std::pair<double, std::vector<double>> total_distance(
    const MtspPlan& plan, const DistanceMatrix& dist,
    const std::vector<int>& site_ids) {
    auto stats = group_stats(plan, dist, site_ids);
    std::vector<double> per_group;
    double total = 0.0;
    for (const GroupStats& g : stats) {
        per_group.push_back(g.distance);
        total += g.distance;
    }
    return {total, per_group};
}

double fuel_cost(const MtspPlan& plan, const DistanceMatrix& dist,
                 const std::vector<int>& site_ids, const CostParams& params) {
    if (params.kr_mode == KrMode::AggregateUnity) {
        auto [total, per_group] = total_distance(plan, dist, site_ids);
        return params.fuel_price * params.fuel_per_100km * total / 100.0;
    }
    double weighted = 0.0;
    for (int g = 0; g < plan.group_count(); ++g) {
        for_each_route_edge(plan, site_ids, g, [&](int from, int to) {
            weighted += dist.at(from, to) * kr_of(params, to);
        });
    }
    return params.fuel_price * params.fuel_per_100km / 100.0 * weighted;
}

PersonDays person_days(const MtspPlan& plan, const DistanceMatrix& dist,
                       const std::vector<int>& site_ids,
                       const CostParams& params) {
    if (params.speed_kmh <= 0.0)
        throw std::invalid_argument("speed must be positive");
    PersonDays out;
    for (const GroupStats& g : group_stats(plan, dist, site_ids)) {
        double hours = g.distance / params.speed_kmh +
                       g.site_count * params.hours_per_site;
        out.hours.push_back(hours);
        out.days.push_back(settle_days(hours));
        out.total_days += out.days.back();
    }
    return out;
}

double personnel_cost(int total_days, const CostParams& params) {
    return params.daily_cost * total_days * params.people_per_group;
}

double other_cost(const MtspPlan& plan, const DistanceMatrix& dist,
                  const std::vector<int>& site_ids, const CostParams& params) {
    auto [total, per_group] = total_distance(plan, dist, site_ids);
    return params.toll_per_km * total + params.parking_fee * plan.site_count();
}

CostBreakdown total_cost(const MtspPlan& plan, const DistanceMatrix& dist,
                         const std::vector<int>& site_ids,
                         const CostParams& params) {
    CostBreakdown out = cost_from_groups(group_stats(plan, dist, site_ids), params);
    if (params.kr_mode == KrMode::PerEdge) {
        // Replace the aggregate fuel term with the road-weighted one.
        out.fuel = 0.0;
        for (int g = 0; g < plan.group_count(); ++g) {
            double weighted = 0.0;
            for_each_route_edge(plan, site_ids, g, [&](int from, int to) {
                weighted += dist.at(from, to) * kr_of(params, to);
            });
            out.groups[g].fuel =
                params.fuel_price * params.fuel_per_100km / 100.0 * weighted;
            out.fuel += out.groups[g].fuel;
        }
        out.total = out.fuel + out.staff + out.other;
    }
    return out;
}

std::vector<std::string> validate_plan(const MtspPlan& plan, int k_groups,
                                       int n_sites) {
    std::vector<std::string> violations;
    if (plan.site_count() != n_sites)
        violations.push_back("expected " + std::to_string(n_sites) + " sites, got " +
                             std::to_string(plan.site_count()));
    if (plan.group_count() != k_groups)
        violations.push_back("expected " + std::to_string(k_groups) +
                             " groups, got " + std::to_string(plan.group_count()));

    std::vector<int> seen(n_sites, 0);
    for (int s : plan.sites) {
        if (s < 0 || s >= n_sites) {
            violations.push_back("site index out of range: " + std::to_string(s));
            continue;
        }
        ++seen[s];
    }
    for (int s = 0; s < n_sites; ++s) {
        if (seen[s] == 0)
            violations.push_back("site " + std::to_string(s) + " is never visited");
        else if (seen[s] > 1)
            violations.push_back("site " + std::to_string(s) + " visited " +
                                 std::to_string(seen[s]) + " times");
    }

    int prev = 0;
    for (int b : plan.breaks) {
        if (b <= prev || b >= plan.site_count()) {
            violations.push_back("break position " + std::to_string(b) +
                                 " leaves an empty group");
        }
        prev = b;
    }
    return violations;
}

std::vector<int> repair_breaks(std::vector<int> breaks, int n_sites) {
    const int cuts = static_cast<int>(breaks.size());
    if (cuts == 0) return breaks;
    std::sort(breaks.begin(), breaks.end());
    for (int i = 0; i < cuts; ++i) {
        int lo = i == 0 ? 1 : breaks[i - 1] + 1;
        breaks[i] = std::max(breaks[i], lo);
    }
    for (int i = cuts - 1; i >= 0; --i) {
        int hi = i == cuts - 1 ? n_sites - 1 : breaks[i + 1] - 1;
        breaks[i] = std::min(breaks[i], hi);
    }
    return breaks;
}

namespace {

// Relocate the site at slot position p into group h at offset `at` within
// that group's segment. Rebuilds via decoded segments to keep breaks exact.
MtspPlan relocate_site(const MtspPlan& plan, int p, int h, int at) {
    const int k = plan.group_count();
    std::vector<std::vector<int>> segments(k);
    int from_group = 0;
    for (int g = 0; g < k; ++g) {
        auto [first, last] = plan.segment(g);
        if (p >= first && p < last) from_group = g;
        for (int q = first; q < last; ++q)
            if (q != p) segments[g].push_back(plan.sites[q]);
    }
    (void)from_group;
    at = std::clamp(at, 0, static_cast<int>(segments[h].size()));
    segments[h].insert(segments[h].begin() + at, plan.sites[p]);

    MtspPlan out;
    out.depot = plan.depot;
    for (int g = 0; g < k; ++g) {
        out.sites.insert(out.sites.end(), segments[g].begin(), segments[g].end());
        if (g + 1 < k) out.breaks.push_back(static_cast<int>(out.sites.size()));
    }
    return out;
}

}  // namespace

MtspPlan plan_random_move(const MtspPlan& plan, Rng& rng) {
    const int n = plan.site_count();
    const int k = plan.group_count();
    MtspPlan out = plan;

    enum { Reverse, Shift, Relocate };
    std::vector<int> moves;
    if (n >= 2) moves.push_back(Reverse);
    if (k >= 2) moves.push_back(Shift);
    if (k >= 2 && n > k) moves.push_back(Relocate);
    if (moves.empty()) return out;

    switch (moves[rand_int(rng, 0, static_cast<int>(moves.size()) - 1)]) {
        case Reverse: {
            int i = rand_int(rng, 0, n - 2);
            int j = rand_int(rng, i + 1, n - 1);
            std::reverse(out.sites.begin() + i, out.sites.begin() + j + 1);
            break;
        }
        case Shift: {
            int b = rand_int(rng, 0, k - 2);
            int dir = rand_int(rng, 0, 1) == 0 ? -1 : 1;
            int lo = b == 0 ? 1 : plan.breaks[b - 1] + 1;
            int hi = b == k - 2 ? n - 1 : plan.breaks[b + 1] - 1;
            int moved = std::clamp(plan.breaks[b] + dir, lo, hi);
            out.breaks[b] = moved;
            break;
        }
        case Relocate: {
            // Pick a site from a group that keeps at least one member.
            for (int attempt = 0; attempt < 16; ++attempt) {
                int p = rand_int(rng, 0, n - 1);
                int g = 0;
                while (plan.segment(g).second <= p) ++g;
                auto [first, last] = plan.segment(g);
                if (last - first < 2) continue;
                int h = rand_int(rng, 0, k - 2);
                if (h >= g) ++h;
                auto [hf, hl] = plan.segment(h);
                int at = rand_int(rng, 0, hl - hf);
                return relocate_site(plan, p, h, at);
            }
            break;
        }
    }
    return out;
}

int plan_distance(const MtspPlan& a, const MtspPlan& b) {
    if (a.site_count() != b.site_count() || a.group_count() != b.group_count())
        throw std::invalid_argument("plan_distance shape mismatch");
    Tour ta{a.sites}, tb{b.sites};
    int dist = edge_distance(ta, tb);
    for (size_t i = 0; i < a.breaks.size(); ++i)
        dist += std::abs(a.breaks[i] - b.breaks[i]);
    return dist;
}

MtspPlan plan_random_neighbor(const MtspPlan& plan, double visual, Rng& rng) {
    int hi = std::max(1, static_cast<int>(std::floor(visual / 2.0)));
    int m = rand_int(rng, 1, hi);
    MtspPlan out = plan;
    for (int i = 0; i < m; ++i) out = plan_random_move(out, rng);
    return out;
}

MtspPlan plan_move_toward(const MtspPlan& plan, const MtspPlan& target,
                          int max_steps, Rng& rng) {
    MtspPlan out = plan;
    const int cuts = static_cast<int>(out.breaks.size());
    for (int step = 0; step < max_steps; ++step) {
        // Break coordinates first: one unit toward the target, picked so the
        // intermediate vector stays strictly increasing.
        int move_at = -1, dir = 0;
        for (int i = cuts - 1; i >= 0; --i) {
            if (out.breaks[i] < target.breaks[i]) {
                move_at = i;
                dir = 1;
                break;
            }
        }
        if (move_at < 0) {
            for (int i = 0; i < cuts; ++i) {
                if (out.breaks[i] > target.breaks[i]) {
                    move_at = i;
                    dir = -1;
                    break;
                }
            }
        }
        if (move_at >= 0) {
            out.breaks[move_at] += dir;
            continue;
        }
        Tour cur{out.sites}, goal{target.sites};
        if (edge_distance(cur, goal) == 0) break;
        out.sites = move_toward(cur, goal, 1, rng).order;
    }
    return out;
}

MtspDomain::MtspDomain(const DistanceMatrix& dist, std::vector<int> site_ids,
                       int depot_id, int k_groups, const CostParams& params)
    : dist_(&dist),
      site_ids_(std::move(site_ids)),
      depot_id_(depot_id),
      k_groups_(k_groups),
      params_(params) {
    const int n = static_cast<int>(site_ids_.size());
    if (k_groups_ < 1 || k_groups_ > n)
        throw std::invalid_argument("group count must be in 1..site count");
    std::vector<double> d(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            d[static_cast<size_t>(i) * n + j] = dist.at(site_ids_[i], site_ids_[j]);
    site_dist_ = DistanceMatrix(n, std::move(d));
}

double MtspDomain::objective(const MtspPlan& plan) const {
    return total_cost(plan, *dist_, site_ids_, params_).total;
}

CostBreakdown MtspDomain::breakdown(const MtspPlan& plan) const {
    return total_cost(plan, *dist_, site_ids_, params_);
}

MtspPlan MtspDomain::random_state(Rng& rng) const {
    const int n = static_cast<int>(site_ids_.size());
    MtspPlan plan;
    plan.depot = depot_id_;
    plan.sites.resize(n);
    std::iota(plan.sites.begin(), plan.sites.end(), 0);
    std::shuffle(plan.sites.begin(), plan.sites.end(), rng);
    if (k_groups_ > 1) {
        // K-1 distinct cut positions drawn from 1..n-1.
        std::vector<int> positions(n - 1);
        std::iota(positions.begin(), positions.end(), 1);
        std::shuffle(positions.begin(), positions.end(), rng);
        plan.breaks.assign(positions.begin(), positions.begin() + (k_groups_ - 1));
        std::sort(plan.breaks.begin(), plan.breaks.end());
    }
    return plan;
}

MtspPlan MtspDomain::local_improve(const MtspPlan& plan, int max_passes) const {
    MtspPlan out = plan;
    const bool per_edge = params_.kr_mode == KrMode::PerEdge;
    double best_cost = per_edge ? objective(out) : 0.0;
    for (int pass = 0; pass < max_passes; ++pass) {
        bool improved = false;
        for (int g = 0; g < out.group_count(); ++g) {
            auto [first, last] = out.segment(g);
            for (int i = first; i < last - 1; ++i) {
                for (int j = i + 1; j < last; ++j) {
                    int prev = i == first ? out.depot : site_ids_[out.sites[i - 1]];
                    int next = j == last - 1 ? out.depot : site_ids_[out.sites[j + 1]];
                    int si = site_ids_[out.sites[i]];
                    int sj = site_ids_[out.sites[j]];
                    double delta = dist_->at(prev, sj) + dist_->at(si, next) -
                                   dist_->at(prev, si) - dist_->at(sj, next);
                    if (delta < -1e-9) {
                        MtspPlan candidate = out;
                        std::reverse(candidate.sites.begin() + i,
                                     candidate.sites.begin() + j + 1);
                        if (per_edge) {
                            // Road weights can outweigh a distance gain.
                            double cost = objective(candidate);
                            if (cost >= best_cost) continue;
                            best_cost = cost;
                        }
                        out = std::move(candidate);
                        improved = true;
                    }
                }
            }
        }
        if (!improved) break;
    }
    return out;
}

MtspPlan MtspDomain::random_step(const MtspPlan& plan, double step, Rng& rng) const {
    int hi = std::max(1, static_cast<int>(std::floor(step)));
    int m = rand_int(rng, 1, hi);
    MtspPlan out = plan;
    for (int i = 0; i < m; ++i) out = plan_random_move(out, rng);
    return out;
}

MtspPlan MtspDomain::chaos_perturb(const MtspPlan& plan, int moves,
                                   ChaosStream& z) const {
    const int n = plan.site_count();
    MtspPlan out = plan;
    if (n < 2) return out;
    for (int k = 0; k < moves; ++k) {
        int i = std::min(n - 1, static_cast<int>(std::floor(z.next() * n)));
        int j = std::min(n - 1, static_cast<int>(std::floor(z.next() * n)));
        if (i == j) j = (j + 1) % n;
        if (i > j) std::swap(i, j);
        std::reverse(out.sites.begin() + i, out.sites.begin() + j + 1);
    }
    return out;
}

MtspPlan MtspDomain::center(const std::vector<MtspPlan>& neighbors) const {
    if (neighbors.empty())
        throw std::invalid_argument("center: empty neighbor list");
    std::vector<Tour> tours;
    tours.reserve(neighbors.size());
    for (const MtspPlan& p : neighbors) tours.push_back(Tour{p.sites});
    MtspPlan out;
    out.depot = depot_id_;
    out.sites = swarm_center(tours, site_dist_).order;
    const int cuts = neighbors.front().group_count() - 1;
    std::vector<int> breaks(cuts, 0);
    for (const MtspPlan& p : neighbors)
        for (int i = 0; i < cuts; ++i) breaks[i] += p.breaks[i];
    for (int i = 0; i < cuts; ++i)
        breaks[i] = static_cast<int>(std::llround(
            static_cast<double>(breaks[i]) / neighbors.size()));
    out.breaks = repair_breaks(std::move(breaks), out.site_count());
    return out;
}

MtspPlan MtspDomain::add_scaled_diff(const MtspPlan& base, const MtspPlan& plus,
                                     const MtspPlan& minus, double f) const {
    MtspPlan out;
    out.depot = base.depot;
    out.sites = perm_add_scaled_diff(base.sites, plus.sites, minus.sites, f);
    out.breaks = base.breaks;
    for (size_t i = 0; i < out.breaks.size(); ++i)
        out.breaks[i] += static_cast<int>(
            std::llround(f * (plus.breaks[i] - minus.breaks[i])));
    out.breaks = repair_breaks(std::move(out.breaks), out.site_count());
    return out;
}

MtspPlan MtspDomain::crossover(const MtspPlan& x, const MtspPlan& v, double cr,
                               Rng& rng) const {
    MtspPlan out;
    out.depot = x.depot;
    out.sites = binomial_cross_perm(x.sites, v.sites, cr, rng);
    out.breaks = x.breaks;
    for (size_t i = 0; i < out.breaks.size(); ++i)
        if (rand01(rng) <= cr) out.breaks[i] = v.breaks[i];
    out.breaks = repair_breaks(std::move(out.breaks), out.site_count());
    return out;
}

// ---- Scenario parsing -------------------------------------------------------

Scenario parse_scenario(const std::string& json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    Scenario sc;
    sc.name = j.value("name", "scenario");

    if (!j.contains("sites") || !j["sites"].is_array() || j["sites"].empty())
        throw std::runtime_error("scenario: 'sites' must be a non-empty array");
    for (const auto& row : j["sites"]) {
        if (!row.is_array() || row.size() != 2)
            throw std::runtime_error("scenario: each site must be [x, y]");
        sc.instance.coords.push_back({row[0].get<double>(), row[1].get<double>()});
    }

    if (j.contains("depot_index")) {
        sc.depot_index = j["depot_index"].get<int>();
        if (sc.depot_index < 0 ||
            sc.depot_index >= static_cast<int>(sc.instance.coords.size()))
            throw std::runtime_error("scenario: depot_index out of range");
    } else if (j.contains("depot")) {
        const auto& d = j["depot"];
        if (!d.is_array() || d.size() != 2)
            throw std::runtime_error("scenario: 'depot' must be [x, y]");
        sc.instance.coords.push_back({d[0].get<double>(), d[1].get<double>()});
        sc.depot_index = static_cast<int>(sc.instance.coords.size()) - 1;
    } else {
        throw std::runtime_error("scenario: need 'depot' or 'depot_index'");
    }

    sc.instance.name = sc.name;
    sc.instance.n = static_cast<int>(sc.instance.coords.size());
    sc.instance.metric = Metric::RealEuclidean;

    if (j.contains("k")) {
        if (j["k"].is_array())
            for (const auto& k : j["k"]) sc.group_counts.push_back(k.get<int>());
        else
            sc.group_counts.push_back(j["k"].get<int>());
    } else {
        sc.group_counts.push_back(2);
    }

    if (j.contains("params")) {
        const auto& p = j["params"];
        CostParams& cp = sc.params;
        cp.fuel_price = p.value("fuel_price", cp.fuel_price);
        cp.fuel_per_100km = p.value("fuel_per_100km", cp.fuel_per_100km);
        cp.daily_cost = p.value("daily_cost", cp.daily_cost);
        cp.people_per_group = p.value("people_per_group", cp.people_per_group);
        cp.toll_per_km = p.value("toll_per_km", cp.toll_per_km);
        cp.parking_fee = p.value("parking_fee", cp.parking_fee);
        cp.speed_kmh = p.value("speed_kmh", cp.speed_kmh);
        cp.hours_per_site = p.value("hours_per_site", cp.hours_per_site);
        if (p.contains("kr_table")) {
            const auto& table = p["kr_table"];
            if (!table.is_array() || table.size() != 6)
                throw std::runtime_error("scenario: kr_table must have 6 entries");
            for (int i = 0; i < 6; ++i) cp.kr_table[i] = table[i].get<double>();
        }
        if (p.contains("kr_mode")) {
            std::string mode = p["kr_mode"].get<std::string>();
            if (mode == "aggregate-unity")
                cp.kr_mode = KrMode::AggregateUnity;
            else if (mode == "per-edge")
                cp.kr_mode = KrMode::PerEdge;
            else
                throw std::runtime_error("scenario: unknown kr_mode '" + mode + "'");
        }
        if (p.contains("road_types"))
            for (const auto& t : p["road_types"])
                cp.road_types.push_back(t.get<int>());
        if (cp.kr_mode == KrMode::PerEdge &&
            cp.road_types.size() != sc.instance.coords.size())
            throw std::runtime_error(
                "scenario: per-edge kr_mode needs one road type per site");
    }
    return sc;
}

Scenario load_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open scenario file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str());
}

namespace {

std::string fmt4(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

}  // namespace

std::string breakdown_to_csv(const CostBreakdown& b) {
    int total_sites = 0;
    double total_hours = 0.0;
    for (const GroupCost& g : b.groups) {
        total_sites += g.site_count;
        total_hours += g.hours;
    }

    std::ostringstream out;
    out << "row";
    for (size_t g = 0; g < b.groups.size(); ++g) out << ",group" << (g + 1);
    out << ",total\n";

    auto line = [&](const std::string& label, auto per_group,
                    const std::string& total) {
        out << label;
        for (const GroupCost& g : b.groups) out << "," << per_group(g);
        out << "," << total << "\n";
    };
    line("sites", [](const GroupCost& g) { return std::to_string(g.site_count); },
         std::to_string(total_sites));
    line("distance_km", [](const GroupCost& g) { return fmt4(g.distance); },
         fmt4(b.total_distance));
    line("hours", [](const GroupCost& g) { return fmt4(g.hours); }, fmt4(total_hours));
    line("days", [](const GroupCost& g) { return std::to_string(g.days); },
         std::to_string(b.total_days));
    line("fuel_cost", [](const GroupCost& g) { return fmt4(g.fuel); }, fmt4(b.fuel));
    line("staff_cost", [](const GroupCost& g) { return fmt4(g.staff); },
         fmt4(b.staff));
    line("other_cost", [](const GroupCost& g) { return fmt4(g.other); },
         fmt4(b.other));
    line("total_cost", [](const GroupCost&) { return std::string(); }, fmt4(b.total));
    return out.str();
}

std::string breakdown_to_json(const CostBreakdown& b) {
    nlohmann::json j;
    j["groups"] = nlohmann::json::array();
    for (const GroupCost& g : b.groups) {
        j["groups"].push_back({{"sites", g.site_count},
                               {"distance_km", g.distance},
                               {"hours", g.hours},
                               {"days", g.days},
                               {"fuel_cost", g.fuel},
                               {"staff_cost", g.staff},
                               {"other_cost", g.other}});
    }
    j["total_distance_km"] = b.total_distance;
    j["total_days"] = b.total_days;
    j["fuel_cost"] = b.fuel;
    j["staff_cost"] = b.staff;
    j["other_cost"] = b.other;
    j["total_cost"] = b.total;
    return j.dump(2);
}

}  // namespace decafsa
