#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "uavpso/errors.hpp"
#include "uavpso/oracle.hpp"
#include "uavpso/pso.hpp"
#include "uavpso/report.hpp"
#include "uavpso/scenario.hpp"

namespace {

namespace fs = std::filesystem;
using namespace uavpso;

constexpr double kOracleResolution = 0.5;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInfeasible = 2;

struct RunOptions {
    std::string scenario_path;
    std::string generate_class;
    std::uint64_t seed = 0;
    int waypoints = kDefaultWaypoints;
    PsoConfig pso;
    CostWeights weights;
    std::string out_dir = "out";
    bool compare_oracle = false;
    int reps = 1;
    std::vector<std::string> classes;
};

void add_pso_flags(CLI::App* cmd, RunOptions& opt) {
    cmd->add_option("--seed", opt.seed, "RNG seed (scenario generation and swarm)");
    cmd->add_option("--iters", opt.pso.iterations, "Iteration budget")->check(CLI::PositiveNumber);
    cmd->add_option("--swarm", opt.pso.swarm_size, "Swarm size")->check(CLI::Range(2, 1000000));
    cmd->add_option("--waypoints", opt.waypoints, "Free interior waypoints")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--w-threat", opt.weights.w_threat, "Threat violation weight")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--w-bounds", opt.weights.w_bounds, "Out-of-bounds violation weight")
        ->check(CLI::NonNegativeNumber);
}

void add_source_flags(CLI::App* cmd, RunOptions& opt, bool required) {
    auto* file = cmd->add_option("--scenario", opt.scenario_path, "Scenario file to plan in");
    auto* gen = cmd->add_option("--generate", opt.generate_class,
                                "Generate a scenario of this complexity class")
                    ->check(CLI::IsMember({"low", "medium", "high"}));
    file->excludes(gen);
    gen->excludes(file);
    if (required) {
        // exactly one source
        cmd->callback([file, gen]() {
            if (file->count() == 0 && gen->count() == 0) {
                throw CLI::RequiredError("one of --scenario / --generate");
            }
        });
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open scenario file '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("cannot write '" + path.string() + "'");
    }
    out << content;
}

Scenario load_scenario(const RunOptions& opt) {
    if (!opt.scenario_path.empty()) {
        return parse_scenario(read_file(opt.scenario_path));
    }
    const auto cls = complexity_from_name(opt.generate_class);
    return generate_scenario(*cls, opt.seed);
}

std::string sig6(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

std::string format_report(const Scenario& scenario, const RunOptions& opt,
                          const RunReport& report) {
    std::ostringstream out;
    out << "scenario: " << scenario.name << "\n";
    out << "seed: " << opt.seed << "\n";
    out << "swarm_size: " << opt.pso.swarm_size << "\n";
    out << "iterations: " << opt.pso.iterations << "\n";
    out << "inertia_w: " << sig6(opt.pso.inertia_w) << "\n";
    out << "cognitive_c1: " << sig6(opt.pso.cognitive_c1) << "\n";
    out << "social_c2: " << sig6(opt.pso.social_c2) << "\n";
    out << "v_max_fraction: " << sig6(opt.pso.v_max_fraction) << "\n";
    out << "waypoints: " << opt.waypoints << "\n";
    out << "w_threat: " << sig6(opt.weights.w_threat) << "\n";
    out << "w_bounds: " << sig6(opt.weights.w_bounds) << "\n";
    out << "best_length: " << sig6(report.best_breakdown.length) << "\n";
    out << "best_total: " << sig6(report.best_breakdown.total) << "\n";
    out << "threat_violation: " << sig6(report.best_breakdown.threat_violation) << "\n";
    out << "bounds_violation: " << sig6(report.best_breakdown.bounds_violation) << "\n";
    out << "feasible: " << (report.feasible ? "true" : "false") << "\n";
    out << "wall_time_s: " << sig6(report.wall_time_seconds) << "\n";
    return out.str();
}

int run_plan(RunOptions& opt) {
    opt.pso.seed = opt.seed;
    const Scenario scenario = load_scenario(opt);
    const EncodingSpec spec(opt.waypoints, scenario.bounds);
    const RunReport report = optimize(scenario, spec, opt.pso, opt.weights);

    fs::create_directories(opt.out_dir);
    write_file(fs::path(opt.out_dir) / "path.svg", render_svg(scenario, report.best_path));
    write_file(fs::path(opt.out_dir) / "convergence.csv", write_convergence_csv(report.history));
    write_file(fs::path(opt.out_dir) / "report.txt", format_report(scenario, opt, report));

    if (opt.compare_oracle) {
        std::ostringstream oracle_text;
        try {
            const OracleResult oracle = grid_shortest_path(scenario, GridSpec{kOracleResolution});
            oracle_text << "oracle_resolution: " << sig6(kOracleResolution) << "\n";
            oracle_text << "oracle_length: " << sig6(oracle.length) << "\n";
            oracle_text << "pso_length: " << sig6(report.best_breakdown.length) << "\n";
            oracle_text << "pso_oracle_ratio: "
                        << sig6(report.best_breakdown.length / oracle.length) << "\n";
        } catch (const Error& e) {
            oracle_text << "oracle_resolution: " << sig6(kOracleResolution) << "\n";
            oracle_text << "oracle_error: " << e.what() << "\n";
        }
        write_file(fs::path(opt.out_dir) / "oracle.txt", oracle_text.str());
    }

    return report.feasible ? kExitOk : kExitInfeasible;
}

int run_curves(RunOptions& opt) {
    if (opt.classes.empty()) {
        opt.classes = {"low", "medium", "high"};
    }
    std::ostringstream csv;
    csv << "class,seed,iteration,best_total,best_length\n";
    for (const std::string& name : opt.classes) {
        const auto cls = complexity_from_name(name);
        if (!cls) {
            throw Error("unknown complexity class '" + name + "'");
        }
        for (int rep = 0; rep < opt.reps; ++rep) {
            const std::uint64_t seed = opt.seed + static_cast<std::uint64_t>(rep);
            const Scenario scenario = generate_scenario(*cls, seed);
            const EncodingSpec spec(opt.waypoints, scenario.bounds);
            PsoConfig config = opt.pso;
            config.seed = seed;
            const RunReport report = optimize(scenario, spec, config, opt.weights);
            for (const HistoryEntry& entry : report.history) {
                csv << name << "," << seed << "," << entry.iteration << ","
                    << sig6(entry.best_total) << "," << sig6(entry.best_length) << "\n";
            }
        }
    }
    fs::create_directories(opt.out_dir);
    write_file(fs::path(opt.out_dir) / "curves.csv", csv.str());
    return kExitOk;
}

int run_gen(RunOptions& opt, bool have_out) {
    const auto cls = complexity_from_name(opt.generate_class);
    const Scenario scenario = generate_scenario(*cls, opt.seed);
    const std::string text = serialize_scenario(scenario);
    if (have_out) {
        fs::create_directories(opt.out_dir);
        write_file(fs::path(opt.out_dir) / (scenario.name + ".txt"), text);
    } else {
        std::cout << text;
    }
    return kExitOk;
}

int run_oracle(RunOptions& opt, bool have_out) {
    const Scenario scenario = load_scenario(opt);
    try {
        const OracleResult oracle = grid_shortest_path(scenario, GridSpec{kOracleResolution});
        std::cout << "oracle_length " << sig6(oracle.length) << "\n";
        if (have_out) {
            fs::create_directories(opt.out_dir);
            write_file(fs::path(opt.out_dir) / "oracle.svg", render_svg(scenario, oracle.path));
        }
    } catch (const StartBlocked& e) {
        std::cerr << "oracle: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const GoalBlocked& e) {
        std::cerr << "oracle: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const NoPath& e) {
        std::cerr << "oracle: " << e.what() << "\n";
        return kExitInfeasible;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Threat-aware UAV route planning with particle swarm optimization"};
    app.require_subcommand(1);

    RunOptions opt;

    CLI::App* plan = app.add_subcommand("plan", "Plan a route and write SVG/CSV/report artifacts");
    add_source_flags(plan, opt, true);
    add_pso_flags(plan, opt);
    plan->add_flag("--oracle", opt.compare_oracle, "Also run the grid oracle and report the ratio");
    plan->add_option("--out", opt.out_dir, "Output directory");

    CLI::App* curves = app.add_subcommand(
        "curves", "Multi-seed convergence study over complexity classes (combined CSV)");
    curves->add_option("classes", opt.classes, "Complexity classes to run (default: all three)")
        ->check(CLI::IsMember({"low", "medium", "high"}));
    add_pso_flags(curves, opt);
    curves->add_option("--reps", opt.reps, "Repetitions per class, seeds seed..seed+reps-1")
        ->check(CLI::PositiveNumber);
    curves->add_option("--out", opt.out_dir, "Output directory");

    CLI::App* gen = app.add_subcommand("gen", "Generate a scenario file");
    gen->add_option("--generate", opt.generate_class, "Complexity class")
        ->required()
        ->check(CLI::IsMember({"low", "medium", "high"}));
    gen->add_option("--seed", opt.seed, "Generator seed");
    CLI::Option* gen_out = gen->add_option("--out", opt.out_dir,
                                           "Write <out>/<name>.txt instead of stdout");

    CLI::App* oracle = app.add_subcommand("oracle", "Run the grid planner alone");
    add_source_flags(oracle, opt, true);
    oracle->add_option("--seed", opt.seed, "Generator seed for --generate");
    CLI::Option* oracle_out =
        oracle->add_option("--out", opt.out_dir, "Also write <out>/oracle.svg");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(plan)) return run_plan(opt);
        if (app.got_subcommand(curves)) return run_curves(opt);
        if (app.got_subcommand(gen)) return run_gen(opt, gen_out->count() > 0);
        if (app.got_subcommand(oracle)) return run_oracle(opt, oracle_out->count() > 0);
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
