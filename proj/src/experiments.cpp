#include "staircase/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <thread>

#include "staircase/error.hpp"
#include "staircase/limit_shape.hpp"
#include "staircase/parallel.hpp"
#include "staircase/promotion.hpp"
#include "staircase/rng.hpp"
#include "staircase/sampler.hpp"

namespace staircase {

int default_threads()
{
    if (const char* env = std::getenv("STAIRCASE_LAB_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1 && v <= 1024) return static_cast<int>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

Metadata ExperimentConfig::metadata() const
{
    return {command, seed, n, samples, build_version()};
}

std::vector<double> uniform_grid(int grid)
{
    if (grid < 1) fail(ErrorKind::OutOfRange, "grid must be at least 1");
    std::vector<double> out(static_cast<std::size_t>(grid) + 1);
    for (int k = 0; k <= grid; ++k) out[static_cast<std::size_t>(k)] = static_cast<double>(k) / grid;
    return out;
}

namespace {

long staircase_size(int n) { return static_cast<long>(n) * (n - 1) / 2; }

void require_order(int n, int least)
{
    if (n < least) fail(ErrorKind::OutOfRange, "n must be at least " + std::to_string(least));
}

void require_samples(int samples)
{
    if (samples < 1) fail(ErrorKind::OutOfRange, "samples must be at least 1");
}

std::string ratio(const BigRatio& r) { return format_ratio(r); }

}  // namespace

// ---- verify ----

const std::vector<SuiteBound>& verify_suites()
{
    static const std::vector<SuiteBound> suites = {
        {"fL", 12},        {"hook", 12}, {"prefix", 10},    {"amusing", 6},
        {"inequality", 7}, {"sums", 9},  {"adjacency", 7},
    };
    return suites;
}

std::vector<SuiteReport> run_verify(int n, const std::vector<std::string>& suites)
{
    std::vector<SuiteBound> chosen;
    for (const auto& s : verify_suites())
        if (suites.empty() || std::find(suites.begin(), suites.end(), s.suite) != suites.end()) chosen.push_back(s);
    for (const auto& name : suites)
        if (std::none_of(verify_suites().begin(), verify_suites().end(),
                         [&](const SuiteBound& s) { return s.suite == name; }))
            fail(ErrorKind::OutOfRange, "unknown suite '" + name + "'");

    std::string limits;
    bool too_large = false;
    for (const auto& s : chosen) {
        limits += (limits.empty() ? "" : ", ") + s.suite + " <= " + std::to_string(s.max_n);
        too_large = too_large || n > s.max_n;
    }
    if (n < 2 || too_large)
        fail(ErrorKind::OutOfRange, "n=" + std::to_string(n) + " outside the exhaustive bounds (n >= 2; " + limits + ")");

    std::vector<SuiteReport> out;
    auto add = [&](const std::string& suite, IdentityReport r) { out.push_back({suite, std::move(r)}); };
    for (const auto& s : chosen) {
        const std::string& suite = s.suite;
        if (suite == "fL") {
            for (const auto& p : strict_partitions_in_staircase(n)) add(suite, verify_fL(p));
        } else if (suite == "hook") {
            for (const auto& p : strict_partitions_in_staircase(n)) add(suite, verify_hook_product(p));
        } else if (suite == "prefix") {
            for (const auto& p : strict_partitions_in_staircase(n)) add(suite, verify_prefix_probability(n, p));
            for (long k = 0; k <= staircase_size(n); ++k)
                add(suite, verify_prefix_level_sum(n, static_cast<int>(k)));
        } else if (suite == "amusing") {
            for (int rows = 1; rows <= n; ++rows)
                for (int cols = 1; cols <= n + 1; ++cols)
                    for (const auto& p : partitions_in_box(rows, cols))
                        if (p.part(1) < cols) add(suite, verify_amusing(rows, cols, p));
        } else if (suite == "inequality") {
            for (auto& r : verify_expected_inequalities(n)) add(suite, std::move(r));
        } else if (suite == "sums") {
            if (n < 3) continue;
            for (auto pattern : {SumPattern::TrivialCell, SumPattern::Domino, SumPattern::Tromino})
                add(suite, verify_sum_identity(n, pattern));
        } else if (suite == "adjacency") {
            for (auto& r : verify_adjacency_census(expected_adjacency_census(n))) add(suite, std::move(r));
        }
    }
    return out;
}

Table verify_table(const std::vector<SuiteReport>& reports)
{
    Table t({"suite", "identity", "params", "lhs", "rhs", "holds"});
    for (const auto& [suite, r] : reports)
        t.add({suite, std::string(to_string(r.identity)), r.params, ratio(r.lhs), ratio(r.rhs),
               static_cast<long long>(r.holds)});
    return t;
}

// ---- sampling ----

Tableau staircase_sample(int n, std::uint64_t seed, int index)
{
    RngState rng(derive_seed(seed, static_cast<std::uint64_t>(index)));
    return sample_tableau(Partition::staircase(n), DiagramKind::Shifted, rng);
}

Table sample_table(const ExperimentConfig& config)
{
    require_order(config.n, 2);
    require_samples(config.samples);
    Table t({"sample", "row", "col", "label"});
    run_ordered(
        config.samples, config.threads, [&](int i) { return staircase_sample(config.n, config.seed, i); },
        [&](int i, Tableau tab) {
            for (std::size_t r = 0; r < tab.rows().size(); ++r) {
                int row = static_cast<int>(r) + 1;
                for (std::size_t c = 0; c < tab.rows()[r].size(); ++c)
                    t.add({static_cast<long long>(i), static_cast<long long>(row),
                           static_cast<long long>(row + static_cast<int>(c)),
                           static_cast<long long>(tab.rows()[r][c])});
            }
        });
    return t;
}

// ---- surface ----

double boundary_distance(double x, double y) { return std::min(x * y, (1 - x) * (1 - y)); }

SurfaceRun run_surface(const ExperimentConfig& config)
{
    require_order(config.n, 2);
    require_samples(config.samples);
    const int n = config.n;
    SurfaceRun run;
    run.n = n;
    run.samples = config.samples;
    run.sigma_threshold = config.sigma_threshold;
    run.cells = cells(Partition::staircase(n), DiagramKind::Shifted);
    std::vector<char> inner;
    for (const auto& u : run.cells) {
        double x = static_cast<double>(u.row) / n, y = static_cast<double>(u.col) / n;
        run.limit.push_back(surface_L(x, y));
        inner.push_back(boundary_distance(x, y) > config.sigma_threshold);
    }
    const double size = static_cast<double>(staircase_size(n));

    struct Sample {
        std::vector<double> scaled;
        double max = 0, max_sigma = 0;
    };
    run.mean_scaled.assign(run.cells.size(), 0.0);
    run_ordered(
        config.samples, config.threads,
        [&](int i) {
            Tableau t = staircase_sample(n, config.seed, i);
            Sample s;
            s.scaled.reserve(run.cells.size());
            for (std::size_t c = 0; c < run.cells.size(); ++c) {
                double v = t.at(run.cells[c]) / size;
                double d = std::abs(v - run.limit[c]);
                s.scaled.push_back(v);
                s.max = std::max(s.max, d);
                if (inner[c]) s.max_sigma = std::max(s.max_sigma, d);
            }
            return s;
        },
        [&](int, Sample s) {
            for (std::size_t c = 0; c < s.scaled.size(); ++c) run.mean_scaled[c] += s.scaled[c];
            run.sample_max.push_back(s.max);
            run.sample_max_sigma.push_back(s.max_sigma);
        });
    for (auto& v : run.mean_scaled) v /= config.samples;
    return run;
}

Table SurfaceRun::table() const
{
    Table t({"record", "sample", "row", "col", "x", "y", "sigma", "scaled", "limit", "deviation"});
    double max = 0, max_sigma = 0;
    for (std::size_t c = 0; c < cells.size(); ++c) {
        double x = static_cast<double>(cells[c].row) / n, y = static_cast<double>(cells[c].col) / n;
        double sigma = boundary_distance(x, y);
        double d = std::abs(mean_scaled[c] - limit[c]);
        max = std::max(max, d);
        if (sigma > sigma_threshold) max_sigma = std::max(max_sigma, d);
        t.add({"cell", {}, static_cast<long long>(cells[c].row), static_cast<long long>(cells[c].col), x, y, sigma,
               mean_scaled[c], limit[c], d});
    }
    for (std::size_t i = 0; i < sample_max.size(); ++i) {
        t.add({"sample_max", static_cast<long long>(i), {}, {}, {}, {}, {}, {}, {}, sample_max[i]});
        t.add({"sample_max_sigma", static_cast<long long>(i), {}, {}, {}, {}, sigma_threshold, {}, {},
               sample_max_sigma[i]});
    }
    t.add({"max", {}, {}, {}, {}, {}, {}, {}, {}, max});
    t.add({"max_sigma", {}, {}, {}, {}, {}, sigma_threshold, {}, {}, max_sigma});
    return t;
}

// ---- trajectories ----

std::vector<double> scaled_trajectory(const ReducedWord& w, int m, const std::vector<double>& alphas)
{
    std::vector<int> pos = trajectory(w, m);
    const int steps = w.length();
    const double span = w.n() - 1;
    std::vector<double> out;
    out.reserve(alphas.size());
    for (double a : alphas) {
        if (!(a >= 0 && a <= 1)) fail(ErrorKind::OutOfRange, "alpha must lie in [0, 1]");
        double p;
        if (steps == 0) {
            p = pos[0];
        } else {
            double at = a * steps;
            int k = std::min(static_cast<int>(std::floor(at)), steps - 1);
            double frac = at - k;
            p = pos[static_cast<std::size_t>(k)] + frac * (pos[static_cast<std::size_t>(k) + 1] - pos[static_cast<std::size_t>(k)]);
        }
        out.push_back((p - 1) / span);
    }
    return out;
}

TrajectoryRun run_trajectories(const ExperimentConfig& config)
{
    require_order(config.n, 2);
    require_samples(config.samples);
    const int n = config.n;
    TrajectoryRun run;
    run.n = n;
    run.elements = config.elements.empty() ? std::vector<int>{1, n} : config.elements;
    for (int m : run.elements)
        if (m < 1 || m > n)
            fail(ErrorKind::OutOfRange, "element " + std::to_string(m) + " outside 1.." + std::to_string(n));
    run.alphas = uniform_grid(config.grid);
    for (int m : run.elements) {
        double beta = static_cast<double>(m - 1) / (n - 1);
        std::vector<double> curve;
        for (double a : run.alphas) curve.push_back(limit_trajectory(beta, a));
        run.limit.push_back(std::move(curve));
    }

    struct Sample {
        std::vector<std::vector<double>> scaled;
        std::vector<double> sup;
    };
    run_ordered(
        config.samples, config.threads,
        [&](int i) {
            ReducedWord w = eg_inverse(staircase_sample(n, config.seed, i));
            Sample s;
            for (std::size_t e = 0; e < run.elements.size(); ++e) {
                auto curve = scaled_trajectory(w, run.elements[e], run.alphas);
                double sup = 0;
                for (std::size_t a = 0; a < curve.size(); ++a) sup = std::max(sup, std::abs(curve[a] - run.limit[e][a]));
                s.scaled.push_back(std::move(curve));
                s.sup.push_back(sup);
            }
            return s;
        },
        [&](int, Sample s) {
            run.scaled.push_back(std::move(s.scaled));
            run.sup_distance.push_back(std::move(s.sup));
        });
    return run;
}

Table TrajectoryRun::table() const
{
    Table t({"record", "sample", "element", "alpha", "scaled", "limit", "distance"});
    for (std::size_t s = 0; s < scaled.size(); ++s)
        for (std::size_t e = 0; e < elements.size(); ++e) {
            for (std::size_t a = 0; a < alphas.size(); ++a)
                t.add({"point", static_cast<long long>(s), static_cast<long long>(elements[e]), alphas[a],
                       scaled[s][e][a], limit[e][a], std::abs(scaled[s][e][a] - limit[e][a])});
            t.add({"sup", static_cast<long long>(s), static_cast<long long>(elements[e]), {}, {}, {},
                   sup_distance[s][e]});
        }
    return t;
}

// ---- intermediate permutations ----

MatrixRun run_matrices(const ExperimentConfig& config)
{
    require_order(config.n, 2);
    require_samples(config.samples);
    const int n = config.n;
    MatrixRun run;
    run.n = n;
    run.alphas = config.alphas.empty() ? std::vector<double>{0.5} : config.alphas;
    for (double a : run.alphas)
        if (!(a >= 0 && a <= 1)) fail(ErrorKind::OutOfRange, "alpha must lie in [0, 1]");
    const long size = staircase_size(n);

    // Predictions depend only on (alpha, j), not on the sample.
    std::vector<std::vector<double>> below, above;
    for (double a : run.alphas) {
        std::vector<double> lo, hi;
        for (int j = 1; j <= n; ++j) {
            double y = static_cast<double>(j) / n;
            lo.push_back(intermediate_limit_curve(a, y));
            hi.push_back(1 - intermediate_limit_curve(1 - a, y));
        }
        below.push_back(std::move(lo));
        above.push_back(std::move(hi));
    }

    run_ordered(
        config.samples, config.threads,
        [&](int i) {
            ReducedWord w = eg_inverse(staircase_sample(n, config.seed, i));
            std::vector<std::vector<MatrixPoint>> per_alpha;
            for (std::size_t a = 0; a < run.alphas.size(); ++a) {
                int k = static_cast<int>(std::floor(run.alphas[a] * static_cast<double>(size)));
                Permutation sigma = apply_prefix(w, k);
                std::vector<MatrixPoint> pts;
                for (int j = 1; j <= n; ++j) {
                    bool lower = sigma(j) <= sigma(1);
                    auto idx = static_cast<std::size_t>(j - 1);
                    pts.push_back({j, sigma(j), lower, lower ? below[a][idx] : above[a][idx]});
                }
                per_alpha.push_back(std::move(pts));
            }
            return per_alpha;
        },
        [&](int, std::vector<std::vector<MatrixPoint>> pts) { run.points.push_back(std::move(pts)); });
    return run;
}

double MatrixRun::fraction_within(int alpha_index, double band) const
{
    long total = 0, near = 0;
    for (const auto& sample : points)
        for (const auto& p : sample.at(static_cast<std::size_t>(alpha_index))) {
            if (!p.lower) continue;
            ++total;
            if (std::abs(static_cast<double>(p.value) / n - p.predicted) <= band) ++near;
        }
    return total ? static_cast<double>(near) / total : 1.0;
}

Table MatrixRun::table() const
{
    Table t({"sample", "alpha", "k", "position", "value", "x", "y", "lower", "predicted", "deviation"});
    const long size = staircase_size(n);
    for (std::size_t s = 0; s < points.size(); ++s)
        for (std::size_t a = 0; a < alphas.size(); ++a) {
            auto k = static_cast<long long>(std::floor(alphas[a] * static_cast<double>(size)));
            for (const auto& p : points[s][a]) {
                double y = static_cast<double>(p.value) / n;
                t.add({static_cast<long long>(s), alphas[a], k, static_cast<long long>(p.position),
                       static_cast<long long>(p.value), static_cast<double>(p.position) / n, y,
                       static_cast<long long>(p.lower), p.predicted, std::abs(y - p.predicted)});
            }
        }
    return t;
}

// ---- adjacencies ----

std::vector<long long> adjacency_counts(const ReducedWord& w, const std::vector<double>& limits)
{
    std::vector<int> at;
    for (const auto& a : word_adjacencies(w)) at.push_back(a.index);
    std::vector<long long> out;
    for (double lim : limits)
        out.push_back(std::lower_bound(at.begin(), at.end(), lim,
                                       [](int k, double bound) { return k < bound; }) -
                      at.begin());
    return out;
}

namespace {

void add_distances(const ReducedWord& w, std::map<int, long long>& hist)
{
    for (int k = 1; k < w.length(); ++k) ++hist[std::abs(w.letter(k + 1) - w.letter(k))];
}

// Uniform index below `count` by rejection.
std::size_t uniform_index(RngState& rng, std::size_t count)
{
    const std::uint64_t range = std::uint64_t{1} << 53;
    const std::uint64_t limit = range - range % count;
    for (;;) {
        std::uint64_t v = rng.next_bits53();
        if (v < limit) return static_cast<std::size_t>(v % count);
    }
}

const std::vector<ReducedWord>& networks_of(int n)
{
    static std::mutex mutex;
    static std::map<int, std::vector<ReducedWord>> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, all_sorting_networks(n)).first;
    return it->second;
}

}  // namespace

AdjacencyRun run_adjacencies(const ExperimentConfig& config)
{
    require_order(config.n, 3);
    require_samples(config.samples);
    const int n = config.n;
    const double size = static_cast<double>(staircase_size(n));
    AdjacencyRun run;
    run.n = n;
    run.alphas = uniform_grid(config.grid);
    std::vector<double> limits;
    for (double a : run.alphas) limits.push_back(a * size);
    const double scale = 2.0 * (n - 2);

    const bool general = n <= 6;
    const std::vector<ReducedWord>* all = general ? &networks_of(n) : nullptr;
    double general_mean = 0;
    if (general) {
        long long total = 0;
        for (const auto& w : *all) total += static_cast<long long>(word_adjacencies(w).size());
        general_mean = static_cast<double>(total) / static_cast<double>(all->size());
        run.general.emplace();
    }

    struct Sample {
        std::vector<long long> avoiding, general;
        std::map<int, long long> avoiding_hist, general_hist;
    };
    run_ordered(
        config.samples, config.threads,
        [&](int i) {
            Sample s;
            ReducedWord w = eg_inverse(staircase_sample(n, config.seed, i));
            s.avoiding = adjacency_counts(w, limits);
            add_distances(w, s.avoiding_hist);
            if (general) {
                // A separate stream so the 132-avoiding column matches runs
                // without the general comparison.
                RngState rng(derive_seed(config.seed ^ 0x5bd1e995ULL, static_cast<std::uint64_t>(i)));
                const ReducedWord& g = (*all)[uniform_index(rng, all->size())];
                s.general = adjacency_counts(g, limits);
                add_distances(g, s.general_hist);
            }
            return s;
        },
        [&](int, Sample s) {
            std::vector<double> x;
            for (auto c : s.avoiding) x.push_back(static_cast<double>(c) / scale);
            run.avoiding.push_back(std::move(x));
            for (auto [d, c] : s.avoiding_hist) run.avoiding_distances[d] += c;
            if (general) {
                std::vector<double> y;
                for (auto c : s.general) y.push_back(static_cast<double>(c) / general_mean);
                run.general->push_back(std::move(y));
                for (auto [d, c] : s.general_hist) run.general_distances[d] += c;
            }
        });
    return run;
}

std::vector<double> AdjacencyRun::avoiding_mean() const
{
    std::vector<double> mean(alphas.size(), 0.0);
    for (const auto& s : avoiding)
        for (std::size_t a = 0; a < mean.size(); ++a) mean[a] += s[a];
    for (auto& v : mean) v /= static_cast<double>(avoiding.size());
    return mean;
}

Table AdjacencyRun::table() const
{
    Table t({"record", "network", "sample", "alpha", "value", "profile", "distance", "count"});
    const std::string avoid = "132-avoiding", gen = "general";
    for (std::size_t s = 0; s < avoiding.size(); ++s)
        for (std::size_t a = 0; a < alphas.size(); ++a)
            t.add({"curve", avoid, static_cast<long long>(s), alphas[a], avoiding[s][a],
                   conjectured_adjacency_profile(alphas[a]), {}, {}});
    auto mean = avoiding_mean();
    for (std::size_t a = 0; a < alphas.size(); ++a)
        t.add({"mean", avoid, {}, alphas[a], mean[a], conjectured_adjacency_profile(alphas[a]), {}, {}});
    if (general) {
        for (std::size_t s = 0; s < general->size(); ++s)
            for (std::size_t a = 0; a < alphas.size(); ++a)
                t.add({"curve", gen, static_cast<long long>(s), alphas[a], (*general)[s][a], alphas[a], {}, {}});
    } else {
        t.add({"unavailable", gen, {}, {}, {}, {}, {}, {}});
    }
    for (auto [d, c] : avoiding_distances)
        t.add({"histogram", avoid, {}, {}, {}, {}, static_cast<long long>(d), c});
    for (auto [d, c] : general_distances) t.add({"histogram", gen, {}, {}, {}, {}, static_cast<long long>(d), c});
    return t;
}

}  // namespace staircase
