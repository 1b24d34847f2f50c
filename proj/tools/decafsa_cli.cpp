#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "decafsa/hybrid.hpp"
#include "decafsa/instance.hpp"
#include "decafsa/mtsp.hpp"
#include "json.hpp"

namespace fs = std::filesystem;
using namespace decafsa;

namespace {

std::string fmt4(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << content;
}

std::string history_csv(const std::vector<double>& history) {
    std::ostringstream out;
    out << "iteration,best_fitness\n";
    for (size_t i = 0; i < history.size(); ++i)
        out << (i + 1) << "," << fmt4(history[i]) << "\n";
    return out.str();
}

std::vector<std::uint64_t> parse_seed_list(const std::string& spec) {
    std::vector<std::uint64_t> seeds;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        seeds.push_back(std::stoull(item));
    }
    if (seeds.empty()) throw std::runtime_error("empty seed list");
    return seeds;
}

struct SolverOptions {
    std::string variant = "de-cafsa";
    int iters = 200;
    std::uint64_t seed = 1;
    int population = 20;
    int trynum = 20;
    double visual = 10.0;
    double step = 6.0;
    double delta = 0.8;
    double beta = 0.2;
    int max_time = 10;
    double scale_f = 0.5;
    double cross_rate = 0.5;
    double scale_k = 0.5;
    std::string lambda = "";
    int chaos_budget = 20;

    void attach(CLI::App* cmd) {
        cmd->add_option("--variant", variant, "afsa|cafsa|de|de-afsa|de-cafsa")
            ->check(CLI::IsMember({"afsa", "cafsa", "de", "de-afsa", "de-cafsa"}));
        cmd->add_option("--iters", iters, "iterations per run");
        cmd->add_option("--seed", seed, "base RNG seed");
        cmd->add_option("--pop", population, "swarm size");
        cmd->add_option("--trynum", trynum, "prey trials before fallback");
        cmd->add_option("--visual", visual, "initial field of view");
        cmd->add_option("--step", step, "initial moving step");
        cmd->add_option("--delta", delta, "crowding factor");
        cmd->add_option("--beta", beta, "schedule lower limit factor");
        cmd->add_option("--max-time", max_time, "stagnation threshold");
        cmd->add_option("--f", scale_f, "DE scaling factor F");
        cmd->add_option("--cr", cross_rate, "DE crossover probability");
        cmd->add_option("--k-de", scale_k, "rand-to-best second factor");
        cmd->add_option("--lambda", lambda,
                        "subpopulation proportions a,b,c (sum 1)");
        cmd->add_option("--chaos-budget", chaos_budget,
                        "chaotic evaluations per iteration");
    }

    HybridConfig to_config() const {
        HybridConfig cfg;
        cfg.variant = parse_variant(variant);
        cfg.seed = seed;
        cfg.max_time = max_time;
        cfg.swarm.population = population;
        cfg.swarm.max_iter = iters;
        cfg.swarm.trynum = trynum;
        cfg.swarm.visual0 = visual;
        cfg.swarm.step0 = step;
        cfg.swarm.delta = delta;
        cfg.swarm.beta = beta;
        cfg.swarm.chaos_budget = chaos_budget;
        cfg.de.scale_f = scale_f;
        cfg.de.cross_rate = cross_rate;
        cfg.de.scale_k = scale_k;
        if (!lambda.empty()) {
            std::stringstream ss(lambda);
            std::string item;
            std::vector<double> parts;
            while (std::getline(ss, item, ',')) parts.push_back(std::stod(item));
            if (parts.size() != 3)
                throw std::runtime_error("--lambda needs three proportions");
            cfg.de.lambdas = {parts[0], parts[1], parts[2]};
        }
        return cfg;
    }
};

DistanceMatrix load_matrix(const std::string& path, const std::string& metric,
                           TspInstance& inst_out) {
    inst_out = load_tsplib_file(path);
    if (metric == "rounded") inst_out.metric = Metric::TsplibRounded;
    return distance_matrix(inst_out);
}

int cmd_solve(const std::string& instance_path, const std::string& metric,
              const SolverOptions& opts, const std::string& out_dir,
              const std::string& format) {
    TspInstance inst;
    DistanceMatrix d = load_matrix(instance_path, metric, inst);
    TourDomain dom(d);
    HybridConfig cfg = opts.to_config();
    RunResult<Tour> res = run(dom, cfg);

    fs::create_directories(out_dir);
    write_file(fs::path(out_dir) / "history.csv", history_csv(res.history));

    if (format == "csv") {
        std::ostringstream out;
        out << "instance,variant,seed,iterations,best_fitness,tour\n";
        out << inst.name << "," << opts.variant << "," << opts.seed << ","
            << res.iterations << "," << fmt4(res.best_fitness) << ",";
        for (size_t i = 0; i < res.best.order.size(); ++i)
            out << (i ? "-" : "") << res.best.order[i];
        out << "\n";
        write_file(fs::path(out_dir) / "result.csv", out.str());
    } else {
        nlohmann::json j;
        j["instance"] = inst.name;
        j["variant"] = opts.variant;
        j["seed"] = opts.seed;
        j["iterations"] = res.iterations;
        j["best_fitness"] = std::stod(fmt4(res.best_fitness));
        j["best_tour"] = res.best.order;
        write_file(fs::path(out_dir) / "result.json", j.dump(2) + "\n");
    }

    std::cout << inst.name << " " << opts.variant << " seed=" << opts.seed
              << " best=" << fmt4(res.best_fitness) << " time="
              << fmt4(res.wall_seconds) << "s\n";
    return 0;
}

std::string plan_csv(const MtspPlan& plan, const std::vector<int>& site_ids) {
    std::ostringstream out;
    out << "group,sequence\n";
    for (int g = 0; g < plan.group_count(); ++g) {
        out << (g + 1) << "," << (plan.depot + 1);
        auto [first, last] = plan.segment(g);
        for (int p = first; p < last; ++p)
            out << "-" << (site_ids[plan.sites[p]] + 1);
        out << "-" << (plan.depot + 1) << "\n";
    }
    return out.str();
}

int cmd_mtsp(const std::string& scenario_path, const std::vector<int>& k_override,
             const SolverOptions& opts, const std::string& out_dir,
             const std::string& format) {
    Scenario sc = load_scenario_file(scenario_path);
    if (!k_override.empty()) sc.group_counts = k_override;
    DistanceMatrix d = distance_matrix(sc.instance);
    std::vector<int> site_ids;
    for (int i = 0; i < sc.instance.n; ++i)
        if (i != sc.depot_index) site_ids.push_back(i);

    fs::create_directories(out_dir);
    for (int k : sc.group_counts) {
        MtspDomain dom(d, site_ids, sc.depot_index, k, sc.params);
        HybridConfig cfg = opts.to_config();
        RunResult<MtspPlan> res = run(dom, cfg);
        auto violations = validate_plan(res.best, k, static_cast<int>(site_ids.size()));
        if (!violations.empty())
            throw std::runtime_error("invalid plan for k=" + std::to_string(k) +
                                     ": " + violations.front());
        CostBreakdown breakdown = dom.breakdown(res.best);

        std::string suffix = "_k" + std::to_string(k);
        write_file(fs::path(out_dir) / ("plan" + suffix + ".csv"),
                   plan_csv(res.best, site_ids));
        write_file(fs::path(out_dir) / ("history" + suffix + ".csv"),
                   history_csv(res.history));
        if (format == "csv")
            write_file(fs::path(out_dir) / ("breakdown" + suffix + ".csv"),
                       breakdown_to_csv(breakdown));
        else
            write_file(fs::path(out_dir) / ("breakdown" + suffix + ".json"),
                       breakdown_to_json(breakdown) + "\n");

        std::cout << sc.name << " k=" << k << " total_cost="
                  << fmt4(breakdown.total) << " distance_km="
                  << fmt4(breakdown.total_distance) << " days="
                  << breakdown.total_days << " time=" << fmt4(res.wall_seconds)
                  << "s\n";
    }
    return 0;
}

int cmd_bench(const std::string& instance_path, const std::string& metric,
              const std::vector<std::string>& variant_names,
              const std::string& seeds_spec, int runs, const SolverOptions& opts,
              const std::string& out_dir, const std::string& format, int jobs,
              bool no_times) {
    TspInstance inst;
    DistanceMatrix d = load_matrix(instance_path, metric, inst);

    std::vector<Variant> variants;
    if (variant_names.empty())
        variants = all_variants();
    else
        for (const auto& name : variant_names) variants.push_back(parse_variant(name));

    std::vector<std::uint64_t> seeds;
    if (!seeds_spec.empty())
        seeds = parse_seed_list(seeds_spec);
    else
        for (int r = 0; r < runs; ++r) seeds.push_back(opts.seed + r);

    HybridConfig base = opts.to_config();
    BenchReport report = run_variant_matrix(d, variants, seeds, base, jobs);

    fs::create_directories(out_dir);
    for (size_t v = 0; v < variants.size(); ++v)
        for (size_t r = 0; r < seeds.size(); ++r)
            write_file(fs::path(out_dir) /
                           ("history_" + variant_name(variants[v]) + "_seed" +
                            std::to_string(seeds[r]) + ".csv"),
                       history_csv(report.histories[v][r]));

    if (format == "csv") {
        std::ostringstream out;
        out << "variant,optimal,worst,average";
        if (!no_times) out << ",avg_time_s";
        out << "\n";
        for (const VariantStats& row : report.rows) {
            out << variant_name(row.variant) << "," << fmt4(row.optimal) << ","
                << fmt4(row.worst) << "," << fmt4(row.average);
            if (!no_times) out << "," << fmt4(row.avg_time_s);
            out << "\n";
        }
        write_file(fs::path(out_dir) / "report.csv", out.str());
    } else {
        nlohmann::json j = nlohmann::json::array();
        for (const VariantStats& row : report.rows) {
            nlohmann::json entry;
            entry["variant"] = variant_name(row.variant);
            entry["optimal"] = std::stod(fmt4(row.optimal));
            entry["worst"] = std::stod(fmt4(row.worst));
            entry["average"] = std::stod(fmt4(row.average));
            if (!no_times) entry["avg_time_s"] = std::stod(fmt4(row.avg_time_s));
            j.push_back(entry);
        }
        write_file(fs::path(out_dir) / "report.json", j.dump(2) + "\n");
    }

    std::cout << inst.name << ": " << variants.size() << " variants x "
              << seeds.size() << " seeds\n";
    for (const VariantStats& row : report.rows)
        std::cout << "  " << variant_name(row.variant) << " optimal="
                  << fmt4(row.optimal) << " worst=" << fmt4(row.worst)
                  << " average=" << fmt4(row.average) << " avg_time="
                  << fmt4(row.avg_time_s) << "s\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"DE-CAFSA: chaotic fish swarm / differential evolution solver"};
    app.require_subcommand(1);

    std::string instance_path, scenario_path, metric = "real";
    std::string out_dir = "out", format = "json";
    std::string seeds_spec;
    std::vector<std::string> variant_names;
    std::vector<int> k_values;
    int runs = 10, jobs = 1;
    bool no_times = false;
    SolverOptions opts;

    CLI::App* solve = app.add_subcommand("solve", "optimize one TSP instance");
    solve->add_option("--instance", instance_path, "TSPLIB file")->required();
    solve->add_option("--metric", metric, "real|rounded")
        ->check(CLI::IsMember({"real", "rounded"}));
    solve->add_option("--out", out_dir, "output directory");
    solve->add_option("--format", format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
    opts.attach(solve);

    CLI::App* mtsp = app.add_subcommand("mtsp", "optimize an investigation scenario");
    mtsp->add_option("--scenario", scenario_path, "scenario JSON file")->required();
    mtsp->add_option("--k", k_values, "group counts (overrides the scenario)")
        ->delimiter(',');
    mtsp->add_option("--out", out_dir, "output directory");
    mtsp->add_option("--format", format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
    opts.attach(mtsp);

    CLI::App* bench = app.add_subcommand("bench", "variant x seed benchmark matrix");
    bench->add_option("--instance", instance_path, "TSPLIB file")->required();
    bench->add_option("--metric", metric, "real|rounded")
        ->check(CLI::IsMember({"real", "rounded"}));
    bench->add_option("--variants", variant_names, "subset of variants")
        ->delimiter(',');
    bench->add_option("--seeds", seeds_spec, "explicit seed list, e.g. 1,2,3");
    bench->add_option("--runs", runs, "seed count when --seeds is absent");
    bench->add_option("--jobs", jobs, "parallel (variant, seed) runs");
    bench->add_flag("--no-times", no_times,
                    "omit wall-time columns for byte-stable reports");
    bench->add_option("--out", out_dir, "output directory");
    bench->add_option("--format", format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
    opts.attach(bench);

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed())
            return cmd_solve(instance_path, metric, opts, out_dir, format);
        if (mtsp->parsed())
            return cmd_mtsp(scenario_path, k_values, opts, out_dir, format);
        if (bench->parsed())
            return cmd_bench(instance_path, metric, variant_names, seeds_spec,
                             runs, opts, out_dir, format, jobs, no_times);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
