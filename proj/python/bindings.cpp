#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "staircase/enumeration.hpp"
#include "staircase/error.hpp"
#include "staircase/experiments.hpp"
#include "staircase/limit_shape.hpp"
#include "staircase/parallel.hpp"
#include "staircase/promotion.hpp"
#include "staircase/sampler.hpp"
#include "staircase/sorting_network.hpp"

namespace py = pybind11;
using namespace staircase;

namespace {

using Rows = std::vector<std::vector<int>>;

DiagramKind kind_of(bool shifted) { return shifted ? DiagramKind::Shifted : DiagramKind::Ordinary; }

Tableau tableau_of(const Rows& rows, bool shifted)
{
    std::vector<int> shape;
    for (const auto& r : rows) shape.push_back(static_cast<int>(r.size()));
    return Tableau(Partition(shape), kind_of(shifted), rows);
}

// Python ints are arbitrary precision; go through the decimal string.
py::int_ to_python(const BigCount& x)
{
    return py::reinterpret_steal<py::int_>(PyLong_FromString(x.get_str().c_str(), nullptr, 10));
}

py::object to_python(const BigRatio& r)
{
    auto fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(to_python(r.get_num()), to_python(r.get_den()));
}

py::list table_rows(const Table& t)
{
    py::list rows;
    for (const auto& row : t.rows) {
        py::dict d;
        for (std::size_t i = 0; i < row.size(); ++i) {
            py::object v = std::visit(
                [](const auto& x) -> py::object {
                    using T = std::decay_t<decltype(x)>;
                    if constexpr (std::is_same_v<T, std::monostate>)
                        return py::none();
                    else
                        return py::cast(x);
                },
                row[i]);
            d[py::str(t.columns[i])] = v;
        }
        rows.append(d);
    }
    return rows;
}

ExperimentConfig make_config(const std::string& command, int n, int samples, std::uint64_t seed, int threads)
{
    ExperimentConfig c;
    c.command = command;
    c.n = n;
    c.samples = samples;
    c.seed = seed;
    c.threads = threads > 0 ? threads : default_threads();
    return c;
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Shifted staircase tableaux, 132-avoiding sorting networks and their limit shapes";
    py::register_exception<Error>(m, "StaircaseError", PyExc_ValueError);

    // counting and tableaux
    m.def(
        "count_tableaux",
        [](const std::vector<int>& shape, bool shifted) { return to_python(count_tableaux(Partition(shape), kind_of(shifted))); },
        py::arg("shape"), py::arg("shifted") = false);
    m.def(
        "all_tableaux",
        [](const std::vector<int>& shape, bool shifted) {
            std::vector<Rows> out;
            for (const auto& t : all_tableaux(Partition(shape), kind_of(shifted))) out.push_back(t.rows());
            return out;
        },
        py::arg("shape"), py::arg("shifted") = false);
    m.def(
        "sample_tableau",
        [](const std::vector<int>& shape, bool shifted, std::uint64_t seed) {
            RngState rng(seed);
            return sample_tableau(Partition(shape), kind_of(shifted), rng).rows();
        },
        py::arg("shape"), py::arg("shifted"), py::arg("seed"), py::call_guard<py::gil_scoped_release>());
    m.def(
        "sample_staircase", [](int n, std::uint64_t seed, int index) { return staircase_sample(n, seed, index).rows(); },
        py::arg("n"), py::arg("seed"), py::arg("index") = 0, py::call_guard<py::gil_scoped_release>(),
        "Sample `index` of the stream used by the experiments.");

    // sorting networks
    m.def(
        "eg_inverse", [](const Rows& rows) { return eg_inverse(tableau_of(rows, true)).letters(); }, py::arg("rows"),
        "Network of a shifted staircase tableau.");
    m.def(
        "eg_forward", [](const std::vector<int>& letters, int n) { return eg_forward(ReducedWord(n, letters)).shifted.rows(); },
        py::arg("letters"), py::arg("n"));
    m.def(
        "is_sorting_network", [](const std::vector<int>& letters, int n) { return is_sorting_network(ReducedWord(n, letters)); },
        py::arg("letters"), py::arg("n"));
    m.def(
        "is_132_network", [](const std::vector<int>& letters, int n) { return is_132_network(ReducedWord(n, letters)); },
        py::arg("letters"), py::arg("n"));
    m.def(
        "apply_prefix",
        [](const std::vector<int>& letters, int n, int k) { return apply_prefix(ReducedWord(n, letters), k).one_line(); },
        py::arg("letters"), py::arg("n"), py::arg("k"));
    m.def(
        "trajectory", [](const std::vector<int>& letters, int n, int element) { return trajectory(ReducedWord(n, letters), element); },
        py::arg("letters"), py::arg("n"), py::arg("element"));

    // promotion
    m.def(
        "partial_promotion", [](const Rows& rows, int k, bool shifted) { return partial_promotion(tableau_of(rows, shifted), k).rows(); },
        py::arg("rows"), py::arg("k"), py::arg("shifted") = true);
    m.def(
        "inverse_partial_promotion",
        [](const Rows& rows, int k, bool shifted) { return inverse_partial_promotion(tableau_of(rows, shifted), k).rows(); },
        py::arg("rows"), py::arg("k"), py::arg("shifted") = true);
    m.def(
        "adjacencies",
        [](const Rows& rows, bool shifted) {
            std::vector<std::tuple<int, int, std::string, int>> out;
            for (const auto& a : adjacencies(tableau_of(rows, shifted)))
                out.emplace_back(a.cell.row, a.cell.col, a.orientation == Orientation::Horizontal ? "h" : "v", a.label);
            return out;
        },
        py::arg("rows"), py::arg("shifted") = true, "(row, col, 'h' or 'v', smaller label) for each adjacency.");

    // limit objects
    m.def("entropy", &entropy, py::arg("alpha"));
    m.def("g_tilde", &g_tilde, py::arg("alpha"), py::arg("u"));
    m.def("surface_L", &surface_L, py::arg("x"), py::arg("y"));
    m.def("first_row_limit", &first_row_limit, py::arg("y"));
    m.def("limit_trajectory", &limit_trajectory, py::arg("beta"), py::arg("alpha"));
    m.def("first_element_limit_trajectory", &first_element_limit_trajectory, py::arg("alpha"));
    m.def("intermediate_limit_curve", &intermediate_limit_curve, py::arg("alpha"), py::arg("y"));
    m.def("conjectured_adjacency_profile", &conjectured_adjacency_profile, py::arg("alpha"));
    m.def(
        "limit_energy", [](double alpha, int cells) { return energy_K(AdmissibleCurve::limit(alpha, cells)); },
        py::arg("alpha"), py::arg("cells") = 2048, "K of the level curve at alpha on an even grid.");

    // verification and experiments
    m.def(
        "verify",
        [](int n, const std::vector<std::string>& suites) {
            std::vector<SuiteReport> reports;
            {
                py::gil_scoped_release release;
                reports = run_verify(n, suites);
            }
            py::list out;
            for (const auto& [suite, r] : reports) {
                py::dict d;
                d["suite"] = suite;
                d["identity"] = std::string(to_string(r.identity));
                d["params"] = r.params;
                d["lhs"] = to_python(r.lhs);
                d["rhs"] = to_python(r.rhs);
                d["holds"] = r.holds;
                out.append(d);
            }
            return out;
        },
        py::arg("n"), py::arg("suites") = std::vector<std::string>{});
    m.def(
        "surface",
        [](int n, int samples, std::uint64_t seed, int threads, double sigma_threshold) {
            auto cfg = make_config("surface", n, samples, seed, threads);
            cfg.sigma_threshold = sigma_threshold;
            SurfaceRun run;
            {
                py::gil_scoped_release release;
                run = run_surface(cfg);
            }
            py::dict d;
            std::vector<std::pair<int, int>> cells;
            for (auto c : run.cells) cells.emplace_back(c.row, c.col);
            d["cells"] = cells;
            d["mean_scaled"] = run.mean_scaled;
            d["limit"] = run.limit;
            d["sample_max"] = run.sample_max;
            d["sample_max_sigma"] = run.sample_max_sigma;
            return d;
        },
        py::arg("n"), py::arg("samples"), py::arg("seed") = 1, py::arg("threads") = 0, py::arg("sigma_threshold") = 0.1);
    m.def(
        "experiment_table",
        [](const std::string& command, int n, int samples, std::uint64_t seed, int threads, int grid,
           const std::vector<double>& alphas, const std::vector<int>& elements) {
            auto cfg = make_config(command, n, samples, seed, threads);
            cfg.grid = grid;
            cfg.alphas = alphas;
            cfg.elements = elements;
            Table t({});
            {
                py::gil_scoped_release release;
                if (command == "sample")
                    t = sample_table(cfg);
                else if (command == "surface")
                    t = run_surface(cfg).table();
                else if (command == "trajectories")
                    t = run_trajectories(cfg).table();
                else if (command == "matrices")
                    t = run_matrices(cfg).table();
                else if (command == "adjacencies")
                    t = run_adjacencies(cfg).table();
                else
                    fail(ErrorKind::OutOfRange, "unknown experiment '" + command + "'");
            }
            py::dict d;
            d["columns"] = t.columns;
            d["rows"] = table_rows(t);
            return d;
        },
        py::arg("command"), py::arg("n"), py::arg("samples"), py::arg("seed") = 1, py::arg("threads") = 0,
        py::arg("grid") = 200, py::arg("alphas") = std::vector<double>{}, py::arg("elements") = std::vector<int>{},
        "Rows of the CLI experiment of the same name, as dicts.");
    m.attr("__version__") = build_version();
}
