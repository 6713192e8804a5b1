#ifndef STAIRCASE_EXPERIMENTS_HPP
#define STAIRCASE_EXPERIMENTS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "staircase/enumeration.hpp"
#include "staircase/partition.hpp"
#include "staircase/sorting_network.hpp"
#include "staircase/table.hpp"

namespace staircase {

enum class OutputFormat { Csv, Json };

struct ExperimentConfig {
    std::string command;
    int n = 10;
    int samples = 1;
    std::uint64_t seed = 1;
    int threads = 1;
    std::string out;  // empty: stdout
    OutputFormat format = OutputFormat::Csv;

    double sigma_threshold = 0.1;
    int grid = 200;  // alpha step 1/grid
    std::vector<double> alphas;
    std::vector<int> elements;
    std::vector<std::string> suites;  // verify only; empty means all

    Metadata metadata() const;
};

// verify

struct SuiteBound {
    std::string suite;
    int max_n;
};

/// Largest staircase order each identity suite accepts.
const std::vector<SuiteBound>& verify_suites();

struct SuiteReport {
    std::string suite;
    IdentityReport report;
};

/// Every identity of the selected suites (all when empty) for the order n
/// staircase. Throws OutOfRange listing the per-suite maxima when n is too
/// large for one of them, or for n < 2.
std::vector<SuiteReport> run_verify(int n, const std::vector<std::string>& suites = {});
Table verify_table(const std::vector<SuiteReport>& reports);

// Monte Carlo. Sample i always uses derive_seed(seed, i), and results are
// merged in sample order, so the output does not depend on the thread count.

/// Uniform shifted staircase tableau of order n for sample `index`.
Tableau staircase_sample(int n, std::uint64_t seed, int index);

/// Rows sample,row,col,label.
Table sample_table(const ExperimentConfig& config);

/// min(xy, (1-x)(1-y)).
double boundary_distance(double x, double y);

struct SurfaceRun {
    int n = 0;
    int samples = 0;
    double sigma_threshold = 0.1;
    std::vector<Cell> cells;           // shifted staircase cells, row-major
    std::vector<double> mean_scaled;   // mean of label / N
    std::vector<double> limit;         // L(row/n, col/n)
    std::vector<double> sample_max;        // per sample, over all cells
    std::vector<double> sample_max_sigma;  // per sample, cells with sigma > threshold

    Table table() const;
};

SurfaceRun run_surface(const ExperimentConfig& config);

struct TrajectoryRun {
    int n = 0;
    std::vector<int> elements;
    std::vector<double> alphas;
    std::vector<std::vector<double>> limit;                     // [element][alpha]
    std::vector<std::vector<std::vector<double>>> scaled;       // [sample][element][alpha]
    std::vector<std::vector<double>> sup_distance;              // [sample][element]

    Table table() const;
};

/// (position - 1)/(n - 1) of each element at time alpha N, linear between
/// steps, against limit_trajectory((m - 1)/(n - 1), alpha). Throws
/// OutOfRange for elements outside 1..n.
TrajectoryRun run_trajectories(const ExperimentConfig& config);

/// Scaled trajectory of element m of w on the given alphas.
std::vector<double> scaled_trajectory(const ReducedWord& w, int m, const std::vector<double>& alphas);

struct MatrixPoint {
    int position;  // j
    int value;     // sigma_k(j)
    bool lower;    // sigma_k(j) <= sigma_k(1)
    double predicted;  // limit value of sigma_k(j)/n
};

struct MatrixRun {
    int n = 0;
    std::vector<double> alphas;
    std::vector<std::vector<std::vector<MatrixPoint>>> points;  // [sample][alpha][j-1]

    /// Fraction of lower points with |value/n - predicted| <= band, pooled
    /// over samples.
    double fraction_within(int alpha_index, double band) const;
    Table table() const;
};

/// Support of sigma_k, k = floor(alpha N), of the network of each sample.
/// Lower points are predicted on intermediate_limit_curve(alpha, j/n), the
/// rest on 1 - intermediate_limit_curve(1 - alpha, j/n).
MatrixRun run_matrices(const ExperimentConfig& config);

struct AdjacencyRun {
    int n = 0;
    std::vector<double> alphas;
    std::vector<std::vector<double>> avoiding;  // [sample][alpha], X / (2(n-2))
    /// [sample][alpha], Y / E[Y(1)]; only for n <= 6 where general networks
    /// are sampled from the full list.
    std::optional<std::vector<std::vector<double>>> general;
    std::map<int, long long> avoiding_distances;  // |w_{k+1} - w_k| -> count
    std::map<int, long long> general_distances;

    std::vector<double> avoiding_mean() const;
    Table table() const;
};

AdjacencyRun run_adjacencies(const ExperimentConfig& config);

/// Number of k with 1 <= k < limit and |w_{k+1} - w_k| = 1, for each limit.
std::vector<long long> adjacency_counts(const ReducedWord& w, const std::vector<double>& limits);

/// k/grid for k = 0..grid.
std::vector<double> uniform_grid(int grid);

}  // namespace staircase

#endif  // STAIRCASE_EXPERIMENTS_HPP
