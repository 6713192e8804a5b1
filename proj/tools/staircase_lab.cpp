// staircase-lab: identity checks and Monte Carlo experiments on shifted
// staircase tableaux, written as CSV or JSON.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "staircase/error.hpp"
#include "staircase/experiments.hpp"
#include "staircase/parallel.hpp"

using namespace staircase;

namespace {

void emit(const ExperimentConfig& config, const Table& table)
{
    std::ofstream file;
    if (!config.out.empty()) {
        file.open(config.out, std::ios::binary);
        if (!file) throw std::runtime_error("cannot open " + config.out);
    }
    std::ostream& out = config.out.empty() ? std::cout : file;
    if (config.format == OutputFormat::Json)
        write_json(out, table, config.metadata());
    else
        write_csv(out, table, config.metadata());
    out.flush();
    if (!out) throw std::runtime_error("write failed");
}

int verify(const ExperimentConfig& config)
{
    auto reports = run_verify(config.n, config.suites);
    emit(config, verify_table(reports));
    long failures = 0;
    const SuiteReport* first = nullptr;
    for (const auto& r : reports)
        if (!r.report.holds) {
            ++failures;
            if (!first) first = &r;
        }
    std::cerr << reports.size() << " checks, " << failures << " failures\n";
    if (first) {
        std::cerr << "first failure: " << first->suite << ' ' << to_string(first->report.identity) << ' '
                  << first->report.params << " lhs=" << format_ratio(first->report.lhs)
                  << " rhs=" << format_ratio(first->report.rhs) << '\n';
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Shifted staircase tableaux, 132-avoiding sorting networks and their limit shapes"};
    app.require_subcommand(1);

    ExperimentConfig config;
    config.threads = default_threads();
    std::string format = "csv";

    auto common = [&](CLI::App* sub, int default_n) {
        config.n = default_n;
        sub->add_option("--n", config.n, "staircase order")->capture_default_str();
        sub->add_option("--samples", config.samples, "number of samples")->capture_default_str();
        sub->add_option("--seed", config.seed, "master seed")->capture_default_str();
        sub->add_option("--threads", config.threads, "worker threads (default STAIRCASE_LAB_THREADS)")
            ->check(CLI::Range(1, 1024));
        sub->add_option("--out", config.out, "output file (default stdout)");
        sub->add_option("--format", format, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}))
            ->capture_default_str();
    };

    auto* verify_cmd = app.add_subcommand("verify", "exact identity and census checks; exit 1 on a failure");
    common(verify_cmd, 5);
    verify_cmd->add_option("--suite", config.suites, "restrict to these suites")
        ->check(CLI::IsMember({"fL", "hook", "prefix", "amusing", "inequality", "sums", "adjacency"}))
        ->delimiter(',');

    auto* sample_cmd = app.add_subcommand("sample", "uniform shifted staircase tableaux");
    common(sample_cmd, 5);

    auto* surface_cmd = app.add_subcommand("surface", "scaled labels against the limit surface");
    common(surface_cmd, 50);
    surface_cmd->add_option("--sigma-threshold", config.sigma_threshold, "interior region min(xy,(1-x)(1-y)) > t")
        ->capture_default_str();

    auto* traj_cmd = app.add_subcommand("trajectories", "scaled trajectories of chosen elements");
    common(traj_cmd, 50);
    traj_cmd->add_option("--elements", config.elements, "elements to follow (default 1 and n)")->delimiter(',');
    traj_cmd->add_option("--grid", config.grid, "alpha steps")->check(CLI::PositiveNumber)->capture_default_str();

    auto* matrix_cmd = app.add_subcommand("matrices", "support of intermediate permutations");
    common(matrix_cmd, 50);
    matrix_cmd->add_option("--alphas", config.alphas, "times in [0,1] (default 0.5)")
        ->check(CLI::Range(0.0, 1.0))
        ->delimiter(',');

    auto* adj_cmd = app.add_subcommand("adjacencies", "adjacency counts along networks and value distances");
    common(adj_cmd, 50);
    adj_cmd->add_option("--grid", config.grid, "alpha steps")->check(CLI::PositiveNumber)->capture_default_str();

    CLI11_PARSE(app, argc, argv);
    config.format = format == "json" ? OutputFormat::Json : OutputFormat::Csv;

    try {
        auto* sub = app.get_subcommands().front();
        config.command = sub->get_name();
        if (sub == verify_cmd) return verify(config);
        if (sub == sample_cmd) emit(config, sample_table(config));
        if (sub == surface_cmd) emit(config, run_surface(config).table());
        if (sub == traj_cmd) emit(config, run_trajectories(config).table());
        if (sub == matrix_cmd) emit(config, run_matrices(config).table());
        if (sub == adj_cmd) emit(config, run_adjacencies(config).table());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
