#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "qaoa/landscape.hpp"
#include "qaoa/oracle.hpp"
#include "qaoa/schedule.hpp"
#include "qaoa/serialize.hpp"
#include "qaoa/simulator.hpp"
#include "qaoa/strategies.hpp"

using namespace qaoa;

namespace {

// ---------------------------------------------------------------------------
// shared plumbing

struct GeneratorConfig {
    int n = 0;                 // 0 means "not requested"
    double d = 0.6;
    int count = 1;
    std::uint64_t seed = 0;
};

std::vector<IsingInstance> resolve_targets(const std::vector<std::string>& paths,
                                           const GeneratorConfig& gen) {
    std::vector<IsingInstance> targets;
    for (const std::string& path : paths) targets.push_back(load_instance(path));
    if (gen.n > 0)
        for (int k = 0; k < gen.count; ++k)
            targets.push_back(gen_random_ising(gen.n, gen.d, gen.seed + k));
    if (targets.empty())
        throw CLI::ValidationError(
            "targets", "provide --instance files and/or --n for generated instances");
    return targets;
}

json generator_json(const GeneratorConfig& gen) {
    return {{"kind", "random-ising"},
            {"n", gen.n},
            {"d", gen.d},
            {"count", gen.count},
            {"seed", gen.seed}};
}

LinearParams resolve_params(const std::string& params_path, bool rough) {
    if (!params_path.empty())
        return linear_params_from_json(load_json(params_path));
    // the stored pre-trained vector is in gate angles; transfers use the
    // evolution-angle form
    return rough ? presets::rough_guess() : presets::pretrained_evolution_angles();
}

json params_source_json(const std::string& params_path, bool rough) {
    if (!params_path.empty()) return {{"source", "file"}, {"path", params_path}};
    return {{"source", rough ? "rough-guess" : "pretrained"}};
}

double sample_std(const std::vector<double>& xs) {
    if (xs.size() < 2) return 0.0;
    double mean = 0.0;
    for (double x : xs) mean += x;
    mean /= static_cast<double>(xs.size());
    double ss = 0.0;
    for (double x : xs) ss += (x - mean) * (x - mean);
    return std::sqrt(ss / static_cast<double>(xs.size() - 1));
}

double mean_of(const std::vector<double>& xs) {
    double mean = 0.0;
    for (double x : xs) mean += x;
    return xs.empty() ? 0.0 : mean / static_cast<double>(xs.size());
}

void write_csv_lines(const std::string& path, const std::string& header,
                     const std::vector<std::string>& rows) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << header << '\n';
    for (const std::string& row : rows) out << row << '\n';
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// ---------------------------------------------------------------------------
// generate

struct GenerateOpts {
    std::string kind;
    int n = 0;
    double d = 0.0;
    double variance_scale = 1.0;
    std::uint64_t seed = 0;
    std::string out;
};

void cmd_generate(const GenerateOpts& opts) {
    IsingInstance instance;
    json generator{{"kind", opts.kind}, {"seed", opts.seed}};
    if (opts.kind == "random-ising") {
        instance = gen_random_ising(opts.n, opts.d, opts.seed);
        generator["n"] = opts.n;
        generator["d"] = opts.d;
    } else if (opts.kind == "maxcut") {
        instance = gen_maxcut(opts.n, opts.d, opts.seed);
        generator["n"] = opts.n;
        generator["d"] = opts.d;
    } else {
        instance = gen_sk(opts.n, opts.variance_scale / opts.n, opts.seed);
        generator["n"] = opts.n;
        generator["variance_scale"] = opts.variance_scale;
    }
    std::string out = opts.out;
    if (out.empty())
        out = opts.kind + "-n" + std::to_string(opts.n) + "-seed" +
              std::to_string(opts.seed) + ".json";
    json j = to_json(instance);
    j["generator"] = generator;
    save_json(j, out);
    std::cout << instance.label << " edges=" << instance.edges.size() << " -> " << out
              << '\n';
}

// ---------------------------------------------------------------------------
// oracle

struct OracleOpts {
    std::string instance_path;
    std::string method = "auto";
    int sweeps = 1000;
    int restarts = 16;
    std::uint64_t seed = 0;
    std::string out;
};

void cmd_oracle(const OracleOpts& opts) {
    const IsingInstance instance = load_instance(opts.instance_path);
    const bool exhaustive = opts.method == "exhaustive" ||
                            (opts.method == "auto" && instance.n_qubits <= 24);
    GroundTruth gt;
    if (exhaustive) {
        gt = brute_force_min(instance);
    } else {
        gt = simulated_annealing(instance, opts.sweeps, opts.restarts, opts.seed);
    }
    json j = to_json(gt);
    j["instance"] = instance.label;
    if (!exhaustive) {
        j["sweeps"] = opts.sweeps;
        j["restarts"] = opts.restarts;
        j["seed"] = opts.seed;
    }
    std::cout << j.dump(2) << '\n';
    if (!opts.out.empty()) save_json(j, opts.out);
}

// ---------------------------------------------------------------------------
// compare

struct CompareOpts {
    std::vector<std::string> instance_paths;
    GeneratorConfig gen;
    std::vector<int> ps;
    std::vector<std::string> strategies;
    int budget = 1000;
    int fourier_k = 2;
    std::string params_path;
    bool rough = false;
    std::string out_dir = ".";
};

StrategyReport run_strategy(const std::string& name, const IsingInstance& instance,
                            int p, const CompareOpts& opts) {
    if (name == "standard") return run_standard(instance, p, opts.budget);
    if (name == "interp") return run_interp(instance, p, opts.budget);
    if (name == "fourier") return run_fourier(instance, p, opts.fourier_k, opts.budget);
    return linxfer_apply(resolve_params(opts.params_path, opts.rough), instance, p);
}

void cmd_compare(const CompareOpts& opts) {
    const std::vector<IsingInstance> instances =
        resolve_targets(opts.instance_paths, opts.gen);

    json reports = json::array();
    std::vector<std::string> rows;
    for (const std::string& strategy : opts.strategies) {
        for (int p : opts.ps) {
            std::vector<double> ratios;
            std::vector<double> evals;
            for (std::size_t k = 0; k < instances.size(); ++k) {
                const StrategyReport report =
                    run_strategy(strategy, instances[k], p, opts);
                ratios.push_back(report.ratio);
                evals.push_back(report.eval_count);
                json r = to_json(report);
                r["instance"] = instances[k].label;
                r["p"] = p;
                reports.push_back(std::move(r));
            }
            rows.push_back(strategy + ',' + std::to_string(p) + ',' +
                           fmt(mean_of(ratios)) + ',' + fmt(sample_std(ratios)) + ',' +
                           fmt(mean_of(evals)) + ',' +
                           std::to_string(instances.size()));
            std::cout << strategy << " p=" << p << " mean_ratio=" << mean_of(ratios)
                      << " std=" << sample_std(ratios) << '\n';
        }
    }

    const std::string csv_path = opts.out_dir + "/compare.csv";
    write_csv_lines(csv_path, "method,p,mean_ratio,std_ratio,mean_evals,instances",
                    rows);

    json labels = json::array();
    for (const IsingInstance& instance : instances) labels.push_back(instance.label);
    json meta{{"command", "compare"},
              {"instances", labels},
              {"instance_files", opts.instance_paths},
              {"generator", generator_json(opts.gen)},
              {"p", opts.ps},
              {"strategies", opts.strategies},
              {"budget", opts.budget},
              {"fourier_k", opts.fourier_k},
              {"linxfer_params", params_source_json(opts.params_path, opts.rough)},
              {"reports", reports}};
    save_json(meta, opts.out_dir + "/compare.meta.json");
    std::cout << "wrote " << csv_path << '\n';
}

// ---------------------------------------------------------------------------
// transfer

struct TransferOpts {
    std::vector<std::string> instance_paths;
    GeneratorConfig gen;
    std::string params_path;
    bool rough = false;
    int p = 8;
    int shots = 1024;
    double fixed_x = 0.0;  // 0 -> sqrt_edges
    int sweeps = 1000;
    int restarts = 16;
    std::uint64_t anneal_seed = 0;
    std::uint64_t sample_seed = 0;
    std::string out_dir = ".";
};

void cmd_transfer(const TransferOpts& opts) {
    const std::vector<IsingInstance> targets =
        resolve_targets(opts.instance_paths, opts.gen);
    const LinearParams lp = resolve_params(opts.params_path, opts.rough);
    const NormalizationMode mode = opts.fixed_x > 0.0
                                       ? NormalizationMode::fixed_x(opts.fixed_x)
                                       : NormalizationMode::sqrt_edges();
    const Schedule schedule = linear_schedule(lp, opts.p);

    json summary = json::array();
    for (std::size_t t = 0; t < targets.size(); ++t) {
        const IsingInstance& target = targets[t];
        const double e_ref =
            simulated_annealing(target, opts.sweeps, opts.restarts, opts.anneal_seed)
                .energy;
        const double factor = normalization_factor(target, mode, e_ref);
        const CostTable table = build_cost_table(target);
        const StateVector plain = evolve(table, schedule);
        // the normalized run evolves the rescaled couplings but reports
        // energies on the original scale
        const StateVector scaled =
            evolve(build_cost_table(scale_instance(target, 1.0 / factor)), schedule);

        json entry{{"instance", target.label},
                   {"e_ref", e_ref},
                   {"factor", factor}};
        entry["unnormalized"] = {{"expectation", expectation(plain, table)},
                                 {"ratio", expectation(plain, table) / e_ref}};
        entry["normalized"] = {{"expectation", expectation(scaled, table)},
                               {"ratio", expectation(scaled, table) / e_ref}};
        if (opts.shots > 0) {
            const SampleSet raw =
                sample(plain, opts.shots, opts.sample_seed + 2 * t, table);
            const SampleSet renorm =
                sample(scaled, opts.shots, opts.sample_seed + 2 * t + 1, table);
            const std::string base = opts.out_dir + "/target-" + std::to_string(t);
            write_sample_csv(raw, base + "-unnormalized.csv");
            write_sample_csv(renorm, base + "-normalized.csv");
            entry["unnormalized"]["mean_energy"] = raw.mean_energy;
            entry["unnormalized"]["best_energy"] = raw.best_energy;
            entry["unnormalized"]["best_ratio"] = raw.best_energy / e_ref;
            entry["unnormalized"]["csv"] = base + "-unnormalized.csv";
            entry["normalized"]["mean_energy"] = renorm.mean_energy;
            entry["normalized"]["best_energy"] = renorm.best_energy;
            entry["normalized"]["best_ratio"] = renorm.best_energy / e_ref;
            entry["normalized"]["csv"] = base + "-normalized.csv";
        }
        std::cout << target.label << " ratio unnormalized="
                  << entry["unnormalized"]["ratio"].get<double>()
                  << " normalized=" << entry["normalized"]["ratio"].get<double>()
                  << '\n';
        summary.push_back(std::move(entry));
    }

    json meta{{"command", "transfer"},
              {"params", to_json(lp)},
              {"params_source", params_source_json(opts.params_path, opts.rough)},
              {"p", opts.p},
              {"shots", opts.shots},
              {"normalization",
               opts.fixed_x > 0.0 ? "x=" + fmt(opts.fixed_x) : "sqrt-edges"},
              {"sweeps", opts.sweeps},
              {"restarts", opts.restarts},
              {"anneal_seed", opts.anneal_seed},
              {"sample_seed", opts.sample_seed},
              {"instance_files", opts.instance_paths},
              {"generator", generator_json(opts.gen)},
              {"targets", summary}};
    save_json(meta, opts.out_dir + "/transfer.json");
    std::cout << "wrote " << opts.out_dir << "/transfer.json\n";
}

// ---------------------------------------------------------------------------
// landscape

struct LandscapeOpts {
    std::string instance_path;
    std::string plane = "gamma";
    int p = 8;
    int resolution = 64;
    AxisRange slope_range;
    AxisRange intcp_range;
    std::optional<double> fixed_slope;
    std::optional<double> fixed_intcp;
    double fixed_x = 0.0;  // 0 -> no normalization
    std::optional<double> e_ref;
    std::uint64_t anneal_seed = 0;
    std::string out;
    std::string metadata;
};

void cmd_landscape(const LandscapeOpts& opts) {
    IsingInstance instance = load_instance(opts.instance_path);
    const Plane plane =
        opts.plane == "gamma" ? Plane::gamma_plane : Plane::beta_plane;

    std::string normalization = "none";
    if (opts.fixed_x > 0.0) {
        const double e_ref =
            opts.e_ref ? *opts.e_ref
                       : reference_energy(instance, opts.anneal_seed);
        const double factor = normalization_factor(
            instance, NormalizationMode::fixed_x(opts.fixed_x), e_ref);
        instance = scale_instance(instance, 1.0 / factor);
        normalization = "x=" + fmt(opts.fixed_x) + ",e_ref=" + fmt(e_ref) +
                        ",factor=" + fmt(factor);
    }

    PlaneConfig config;
    config.resolution = opts.resolution;
    config.slope_range = opts.slope_range;
    config.intcp_range = opts.intcp_range;
    if (plane == Plane::beta_plane) {
        // off-plane default is the pre-trained pair of the *other* plane
        config.fixed_slope = presets::pretrained_n16_d06_p8().gamma_slope;
        config.fixed_intcp = presets::pretrained_n16_d06_p8().gamma_intcp;
    }
    if (opts.fixed_slope) config.fixed_slope = *opts.fixed_slope;
    if (opts.fixed_intcp) config.fixed_intcp = *opts.fixed_intcp;

    const LandscapeGrid grid = scan_plane(instance, opts.p, plane, config);
    write_landscape_csv(grid, opts.out);

    json meta = landscape_metadata(grid, instance.label, normalization);
    meta["command"] = "landscape";
    meta["instance_file"] = opts.instance_path;
    meta["resolution"] = opts.resolution;
    if (opts.fixed_x > 0.0) meta["anneal_seed"] = opts.anneal_seed;
    const BestPoint best = best_point(grid);
    meta["best"] = {{"slope", best.slope}, {"intcp", best.intcp}, {"value", best.value}};
    save_json(meta,
              opts.metadata.empty() ? opts.out + ".meta.json" : opts.metadata);

    std::cout << "best slope=" << best.slope << " intcp=" << best.intcp
              << " value=" << best.value << " -> " << opts.out << '\n';
}

// ---------------------------------------------------------------------------
// fitline

struct FitlineOpts {
    std::string schedule_path;
    std::string out;
};

void cmd_fitline(const FitlineOpts& opts) {
    json j = load_json(opts.schedule_path);
    if (j.contains("schedule")) j = j.at("schedule");
    const Schedule schedule = schedule_from_json(j);
    const int p = schedule.depth();
    json result{{"p", p},
                {"source", opts.schedule_path},
                {"gamma", to_json(fit_linear(schedule.gammas, p))},
                {"beta", to_json(fit_linear(schedule.betas, p))}};
    std::cout << result.dump(2) << '\n';
    if (!opts.out.empty()) save_json(result, opts.out);
}

// ---------------------------------------------------------------------------
// sample

struct SampleOpts {
    std::string instance_path;
    std::string schedule_path;
    std::string params_path;
    bool rough = false;
    bool pretrained = false;
    int p = 8;
    int shots = 1024;
    std::uint64_t seed = 0;
    std::string out;
};

void cmd_sample(const SampleOpts& opts) {
    const IsingInstance instance = load_instance(opts.instance_path);
    Schedule schedule;
    json source;
    if (!opts.schedule_path.empty()) {
        json j = load_json(opts.schedule_path);
        if (j.contains("schedule")) j = j.at("schedule");
        schedule = schedule_from_json(j);
        source = {{"schedule_file", opts.schedule_path}};
    } else {
        const LinearParams lp = resolve_params(opts.params_path, opts.rough);
        schedule = linear_schedule(lp, opts.p);
        source = params_source_json(opts.params_path, opts.rough);
        source["params"] = to_json(lp);
        source["p"] = opts.p;
    }

    const CostTable table = build_cost_table(instance);
    const StateVector state = evolve(table, schedule);
    const SampleSet samples = sample(state, opts.shots, opts.seed, table);
    if (!opts.out.empty()) {
        write_sample_csv(samples, opts.out);
        json meta{{"command", "sample"},
                  {"instance", instance.label},
                  {"instance_file", opts.instance_path},
                  {"shots", opts.shots},
                  {"seed", opts.seed},
                  {"source", source},
                  {"schedule", to_json(schedule)}};
        save_json(meta, opts.out + ".meta.json");
    }
    json result{{"shots", samples.shots},
                {"mean_energy", samples.mean_energy},
                {"best_energy", samples.best_energy},
                {"expectation", expectation(state, table)}};
    std::cout << result.dump(2) << '\n';
}

void add_target_flags(CLI::App* cmd, std::vector<std::string>& paths,
                      GeneratorConfig& gen) {
    cmd->add_option("--instance", paths, "instance JSON file (repeatable)");
    cmd->add_option("--n", gen.n, "generate random Ising targets with n qubits");
    cmd->add_option("--d", gen.d, "edge density for generated targets");
    cmd->add_option("--count", gen.count, "number of generated targets")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--instance-seed", gen.seed, "base seed for generated targets");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"QAOA parameter transfer toolkit"};
    app.require_subcommand(1);

    GenerateOpts gen_opts;
    CLI::App* generate = app.add_subcommand("generate", "write an instance JSON file");
    generate->require_subcommand(1);
    for (const char* kind : {"random-ising", "maxcut", "sk"}) {
        CLI::App* sub = generate->add_subcommand(kind);
        sub->add_option("--n", gen_opts.n, "qubit count")
            ->required()
            ->check(CLI::PositiveNumber);
        if (std::string(kind) == "sk")
            sub->add_option("--variance-scale", gen_opts.variance_scale,
                            "coupling variance is this value divided by n");
        else
            sub->add_option("--d", gen_opts.d, "edge density in (0, 1]")->required();
        sub->add_option("--seed", gen_opts.seed, "generator seed");
        sub->add_option("--out", gen_opts.out, "output path");
        sub->callback([&gen_opts, kind] {
            gen_opts.kind = kind;
            cmd_generate(gen_opts);
        });
    }

    OracleOpts oracle_opts;
    CLI::App* oracle = app.add_subcommand("oracle", "ground-state energy and config");
    oracle->add_option("--instance", oracle_opts.instance_path)->required();
    oracle->add_option("--method", oracle_opts.method)
        ->check(CLI::IsMember({"auto", "exhaustive", "annealing"}));
    oracle->add_option("--sweeps", oracle_opts.sweeps);
    oracle->add_option("--restarts", oracle_opts.restarts);
    oracle->add_option("--seed", oracle_opts.seed);
    oracle->add_option("--out", oracle_opts.out);
    oracle->callback([&oracle_opts] { cmd_oracle(oracle_opts); });

    CompareOpts compare_opts;
    CLI::App* compare =
        app.add_subcommand("compare", "strategy comparison table over instances");
    add_target_flags(compare, compare_opts.instance_paths, compare_opts.gen);
    compare_opts.gen.count = 8;
    compare->add_option("--p", compare_opts.ps, "circuit depths (repeatable)")
        ->required();
    compare->add_option("--strategy", compare_opts.strategies, "strategies to run")
        ->required()
        ->check(CLI::IsMember({"standard", "interp", "fourier", "linxfer"}));
    compare->add_option("--budget", compare_opts.budget, "evaluation budget per level");
    compare->add_option("--fourier-k", compare_opts.fourier_k);
    compare->add_option("--params", compare_opts.params_path,
                        "linear parameter JSON for linxfer");
    compare->add_flag("--rough-guess", compare_opts.rough,
                      "use the untuned unit-magnitude parameters for linxfer");
    compare->add_option("--out-dir", compare_opts.out_dir);
    compare->callback([&compare_opts] { cmd_compare(compare_opts); });

    TransferOpts transfer_opts;
    CLI::App* transfer =
        app.add_subcommand("transfer", "apply linear parameters to target instances");
    add_target_flags(transfer, transfer_opts.instance_paths, transfer_opts.gen);
    transfer->add_option("--params", transfer_opts.params_path);
    transfer->add_flag("--rough-guess", transfer_opts.rough);
    transfer->add_option("--p", transfer_opts.p)->check(CLI::PositiveNumber);
    transfer->add_option("--shots", transfer_opts.shots,
                         "0 for exact expectations only")
        ->check(CLI::NonNegativeNumber);
    transfer->add_option("--x", transfer_opts.fixed_x,
                         "fixed-target normalization scale (default sqrt of edge count)");
    transfer->add_option("--sweeps", transfer_opts.sweeps);
    transfer->add_option("--restarts", transfer_opts.restarts);
    transfer->add_option("--anneal-seed", transfer_opts.anneal_seed);
    transfer->add_option("--sample-seed", transfer_opts.sample_seed);
    transfer->add_option("--out-dir", transfer_opts.out_dir);
    transfer->callback([&transfer_opts] { cmd_transfer(transfer_opts); });

    LandscapeOpts landscape_opts;
    CLI::App* landscape =
        app.add_subcommand("landscape", "grid scan of one reduced-parameter plane");
    landscape->add_option("--instance", landscape_opts.instance_path)->required();
    landscape->add_option("--plane", landscape_opts.plane)
        ->check(CLI::IsMember({"gamma", "beta"}));
    landscape->add_option("--p", landscape_opts.p)->check(CLI::PositiveNumber);
    landscape->add_option("--resolution", landscape_opts.resolution)
        ->check(CLI::PositiveNumber);
    landscape->add_option("--slope-min", landscape_opts.slope_range.lo);
    landscape->add_option("--slope-max", landscape_opts.slope_range.hi);
    landscape->add_option("--intcp-min", landscape_opts.intcp_range.lo);
    landscape->add_option("--intcp-max", landscape_opts.intcp_range.hi);
    landscape->add_option("--fixed-slope", landscape_opts.fixed_slope,
                          "off-plane slope (default: pre-trained pair)");
    landscape->add_option("--fixed-intcp", landscape_opts.fixed_intcp);
    landscape->add_option("--x", landscape_opts.fixed_x,
                          "normalize couplings to this scale before scanning");
    landscape->add_option("--e-ref", landscape_opts.e_ref,
                          "reference energy for normalization (default: oracle)");
    landscape->add_option("--anneal-seed", landscape_opts.anneal_seed);
    landscape->add_option("--out", landscape_opts.out, "CSV path")->required();
    landscape->add_option("--metadata", landscape_opts.metadata,
                          "metadata path (default: CSV path + .meta.json)");
    landscape->callback([&landscape_opts] { cmd_landscape(landscape_opts); });

    FitlineOpts fitline_opts;
    CLI::App* fitline =
        app.add_subcommand("fitline", "least-squares line fit of a schedule");
    fitline->add_option("--schedule", fitline_opts.schedule_path,
                        "schedule or strategy report JSON")
        ->required();
    fitline->add_option("--out", fitline_opts.out);
    fitline->callback([&fitline_opts] { cmd_fitline(fitline_opts); });

    SampleOpts sample_opts;
    CLI::App* sample_cmd =
        app.add_subcommand("sample", "measurement histogram for a schedule");
    sample_cmd->add_option("--instance", sample_opts.instance_path)->required();
    sample_cmd->add_option("--schedule", sample_opts.schedule_path);
    sample_cmd->add_option("--params", sample_opts.params_path);
    sample_cmd->add_flag("--rough-guess", sample_opts.rough);
    sample_cmd->add_option("--p", sample_opts.p)->check(CLI::PositiveNumber);
    sample_cmd->add_option("--shots", sample_opts.shots)->check(CLI::PositiveNumber);
    sample_cmd->add_option("--seed", sample_opts.seed);
    sample_cmd->add_option("--out", sample_opts.out, "CSV path");
    sample_cmd->callback([&sample_opts] { cmd_sample(sample_opts); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
