#include "staircase/promotion.hpp"

#include <climits>

#include "staircase/error.hpp"

namespace staircase {

namespace {

// Mutable copy of a tableau's rows addressed by diagram cells.
struct Grid {
    Partition shape;
    DiagramKind kind;
    std::vector<std::vector<int>> rows;

    explicit Grid(const Tableau& t) : shape(t.shape()), kind(t.kind()), rows(t.rows()) {}

    int start(int r) const { return kind == DiagramKind::Shifted ? r : 1; }
    bool inside(Cell u) const
    {
        return u.row >= 1 && u.row <= static_cast<int>(rows.size()) && u.col >= start(u.row) &&
               u.col < start(u.row) + static_cast<int>(rows[static_cast<std::size_t>(u.row - 1)].size());
    }
    int& at(Cell u)
    {
        return rows[static_cast<std::size_t>(u.row - 1)][static_cast<std::size_t>(u.col - start(u.row))];
    }
    int get(Cell u, int absent) { return inside(u) ? at(u) : absent; }

    Tableau finish() { return Tableau(shape, kind, std::move(rows)); }
};

void require_label(int k, int lo, int hi)
{
    if (k < lo || k > hi)
        fail(ErrorKind::OutOfRange,
             "index " + std::to_string(k) + " outside " + std::to_string(lo) + ".." + std::to_string(hi));
}

// Cells from the largest label backwards through the larger of the west and
// north neighbours, kept while the label is at least k.
std::vector<Cell> inverse_path(const Tableau& t, int k)
{
    std::vector<Cell> path{t.cell_of(t.size())};
    for (;;) {
        Cell u = path.back();
        int w = t.get(u.west(), 0), n = t.get(u.north(), 0);
        if (std::max(w, n) < k) break;
        path.push_back(w > n ? u.west() : u.north());
    }
    return path;
}

}  // namespace

Tableau tau(const Tableau& t, int k)
{
    require_label(k, 1, t.size() - 1);
    Cell a = t.cell_of(k), b = t.cell_of(k + 1);
    if (b == a.east() || b == a.south()) return t;
    Grid g(t);
    std::swap(g.at(a), g.at(b));
    return g.finish();
}

Tableau partial_promotion(const Tableau& t, int k)
{
    require_label(k, 1, t.size());
    int total = t.size();
    if (k == total) return t;
    Grid g(t);
    Cell u = t.cell_of(k);
    for (;;) {
        int e = g.get(u.east(), INT_MAX), s = g.get(u.south(), INT_MAX);
        if (e == INT_MAX && s == INT_MAX) break;
        Cell next = e < s ? u.east() : u.south();
        g.at(u) = g.at(next);
        u = next;
    }
    g.at(u) = 0;
    for (auto& row : g.rows)
        for (int& x : row)
            if (x > k) --x;
    g.at(u) = total;
    return g.finish();
}

Tableau partial_promotion_by_tau(const Tableau& t, int k)
{
    require_label(k, 1, t.size());
    Tableau out = t;
    for (int i = k; i < t.size(); ++i) out = tau(out, i);
    return out;
}

Cell inverse_promotion_end(const Tableau& t, int k)
{
    require_label(k, 1, t.size());
    return inverse_path(t, k).back();
}

Tableau inverse_partial_promotion(const Tableau& t, int k)
{
    require_label(k, 1, t.size());
    if (k == t.size()) return t;
    auto path = inverse_path(t, k);
    Grid g(t);
    for (std::size_t i = 0; i + 1 < path.size(); ++i) g.at(path[i]) = g.at(path[i + 1]);
    g.at(path.back()) = 0;
    for (auto& row : g.rows)
        for (int& x : row)
            if (x >= k) ++x;
    g.at(path.back()) = k;
    return g.finish();
}

std::vector<Adjacency> adjacencies(const Tableau& t)
{
    std::vector<Adjacency> out;
    int start_shift = t.kind() == DiagramKind::Shifted ? 1 : 0;
    const auto& rows = t.rows();
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            int r = static_cast<int>(i) + 1;
            Cell u{r, static_cast<int>(j) + 1 + start_shift * (r - 1)};
            int x = rows[i][j];
            if (t.get(u.east(), 0) == x + 1) out.push_back({u, Orientation::Horizontal, x});
            if (t.get(u.south(), 0) == x + 1) out.push_back({u, Orientation::Vertical, x});
        }
    return out;
}

std::pair<Tableau, Cell> adjacency_bijection_phi(const Tableau& t, int c)
{
    int total = t.size();
    if (total == 0 || c < 1 || t.cell_of(total).col < c + 1)
        fail(ErrorKind::MaxEntryTooFarLeft, "largest label not right of column " + std::to_string(c));
    for (int k = total - 1; k >= 1; --k) {
        Cell end = inverse_promotion_end(t, k);
        if (end.col != c) continue;
        Tableau s = inverse_partial_promotion(t, k);
        if (s.get(end.east(), 0) != k + 1)
            fail(ErrorKind::InternalMismatch, "inverse path ended in column " + std::to_string(c) + " off an adjacency");
        return {std::move(s), end};
    }
    fail(ErrorKind::InternalMismatch, "no inverse path reaches column " + std::to_string(c));
}

Tableau adjacency_bijection_psi(const Tableau& s, Cell u)
{
    int k = s.get(u, 0);
    if (k == 0 || s.get(u.east(), 0) != k + 1) fail(ErrorKind::OutOfRange, "not a horizontal adjacency");
    return partial_promotion(s, k);
}

std::vector<WordAdjacency> word_adjacencies(const ReducedWord& w)
{
    std::vector<WordAdjacency> out;
    for (int k = 1; k < w.length(); ++k) {
        int d = w.letter(k + 1) - w.letter(k);
        if (d == 1 || d == -1) out.push_back({k, d == 1});
    }
    return out;
}

BigRatio AdjacencyCensus::column_mean(int c) const
{
    BigRatio r(horizontal_by_column.at(static_cast<std::size_t>(c - 1)), tableaux);
    r.canonicalize();
    return r;
}

BigRatio AdjacencyCensus::row_mean(int r) const
{
    BigRatio q(vertical_by_row.at(static_cast<std::size_t>(r - 1)), tableaux);
    q.canonicalize();
    return q;
}

BigRatio AdjacencyCensus::word_mean() const
{
    BigRatio q(word_total, tableaux);
    q.canonicalize();
    return q;
}

std::string AdjacencyCensus::to_tsv() const
{
    std::string out = "kind\tindex\ttotal\tcount\tmean\n";
    auto line = [&](const char* kind, std::size_t index, const BigCount& total, const BigRatio& mean) {
        out += std::string(kind) + '\t' + std::to_string(index) + '\t' + total.get_str() + '\t' + tableaux.get_str() +
               '\t' + mean.get_num().get_str() + '/' + mean.get_den().get_str() + '\n';
    };
    for (std::size_t c = 1; c <= horizontal_by_column.size(); ++c)
        line("h", c, horizontal_by_column[c - 1], column_mean(static_cast<int>(c)));
    for (std::size_t r = 1; r <= vertical_by_row.size(); ++r)
        line("v", r, vertical_by_row[r - 1], row_mean(static_cast<int>(r)));
    line("w", 0, word_total, word_mean());
    return out;
}

AdjacencyCensus expected_adjacency_census(int n)
{
    if (n < 2 || n > 7) fail(ErrorKind::OutOfRange, "exhaustive census needs 2 <= n <= 7");
    AdjacencyCensus census;
    census.n = n;
    census.tableaux = 0;
    census.word_total = 0;
    census.horizontal_by_column.assign(static_cast<std::size_t>(n - 1), 0);
    census.vertical_by_row.assign(static_cast<std::size_t>(n - 1), 0);
    for_each_tableau(Partition::staircase(n), DiagramKind::Shifted, [&](const Tableau& t) {
        ++census.tableaux;
        for (const auto& a : adjacencies(t)) {
            if (a.orientation == Orientation::Horizontal)
                ++census.horizontal_by_column[static_cast<std::size_t>(a.column() - 1)];
            else
                ++census.vertical_by_row[static_cast<std::size_t>(a.row() - 1)];
        }
        census.word_total += static_cast<unsigned long>(word_adjacencies(eg_inverse(t)).size());
    });
    return census;
}

std::vector<IdentityReport> verify_adjacency_census(const AdjacencyCensus& census)
{
    std::vector<IdentityReport> out;
    std::string n = "n=" + std::to_string(census.n);
    for (int c = 1; c < census.n - 1; ++c)
        out.push_back(make_equality(Identity::ColumnAdjacencyMean, n + ",column=" + std::to_string(c),
                                    census.column_mean(c), 1));
    for (int r = 1; r < census.n - 1; ++r)
        out.push_back(
            make_equality(Identity::RowAdjacencyMean, n + ",row=" + std::to_string(r), census.row_mean(r), 1));
    out.push_back(make_equality(Identity::WordAdjacencyMean, n, census.word_mean(), 2 * (census.n - 2)));
    return out;
}

}  // namespace staircase
