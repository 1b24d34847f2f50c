#include "decafsa/hybrid.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

namespace decafsa {

Variant parse_variant(std::string_view name) {
    if (name == "afsa") return Variant::Afsa;
    if (name == "cafsa") return Variant::Cafsa;
    if (name == "de") return Variant::De;
    if (name == "de-afsa") return Variant::DeAfsa;
    if (name == "de-cafsa") return Variant::DeCafsa;
    throw std::invalid_argument("unknown variant: '" + std::string(name) + "'");
}

std::string variant_name(Variant v) {
    switch (v) {
        case Variant::Afsa: return "afsa";
        case Variant::Cafsa: return "cafsa";
        case Variant::De: return "de";
        case Variant::DeAfsa: return "de-afsa";
        case Variant::DeCafsa: return "de-cafsa";
    }
    return "?";
}

const std::vector<Variant>& all_variants() {
    static const std::vector<Variant> variants = {
        Variant::De, Variant::Afsa, Variant::DeAfsa, Variant::Cafsa,
        Variant::DeCafsa};
    return variants;
}

VariantFeatures variant_features(Variant v) {
    VariantFeatures f;
    switch (v) {
        case Variant::Afsa:
            break;
        case Variant::Cafsa:
            f.adaptive_schedules = true;
            f.two_opt_fallback = true;
            f.sub_optimal_accept = true;
            f.chaos = true;
            break;
        case Variant::De:
            f.fish_behaviors = false;
            f.de_every_iteration = true;
            break;
        case Variant::DeAfsa:
            f.de_on_stagnation = true;
            break;
        case Variant::DeCafsa:
            f.adaptive_schedules = true;
            f.two_opt_fallback = true;
            f.sub_optimal_accept = true;
            f.chaos = true;
            f.de_on_stagnation = true;
            f.multi_strategy_de = true;
            break;
    }
    return f;
}

BenchReport run_variant_matrix(const DistanceMatrix& dist,
                               const std::vector<Variant>& variants,
                               const std::vector<std::uint64_t>& seeds,
                               const HybridConfig& base, int jobs) {
    const TourDomain dom(dist);
    const int n_variants = static_cast<int>(variants.size());
    const int n_runs = static_cast<int>(seeds.size());

    std::vector<std::vector<RunResult<Tour>>> results(
        n_variants, std::vector<RunResult<Tour>>(n_runs));

    std::atomic<int> cursor{0};
    auto worker = [&] {
        for (;;) {
            int job = cursor.fetch_add(1);
            if (job >= n_variants * n_runs) break;
            int v = job / n_runs;
            int r = job % n_runs;
            HybridConfig cfg = base;
            cfg.variant = variants[v];
            cfg.seed = seeds[r];
            results[v][r] = run(dom, cfg);
        }
    };
    jobs = std::max(1, jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    BenchReport report;
    for (int v = 0; v < n_variants; ++v) {
        VariantStats row;
        row.variant = variants[v];
        row.optimal = results[v][0].best_fitness;
        row.worst = results[v][0].best_fitness;
        double sum = 0.0, time_sum = 0.0;
        std::vector<std::vector<double>> variant_histories;
        for (const RunResult<Tour>& res : results[v]) {
            row.optimal = std::min(row.optimal, res.best_fitness);
            row.worst = std::max(row.worst, res.best_fitness);
            sum += res.best_fitness;
            time_sum += res.wall_seconds;
            variant_histories.push_back(res.history);
        }
        row.average = sum / n_runs;
        row.avg_time_s = time_sum / n_runs;
        report.rows.push_back(row);
        report.histories.push_back(std::move(variant_histories));
    }
    return report;
}

}  // namespace decafsa
