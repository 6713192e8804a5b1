#include "staircase/enumeration.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "staircase/error.hpp"

namespace staircase {

BigCount factorial(unsigned n)
{
    BigCount r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigCount binomial(unsigned n, unsigned k)
{
    BigCount r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

BigCount count_tableaux(const Partition& p, DiagramKind kind)
{
    BigCount hooks = 1;
    for (const auto& row : hook_lengths(p, kind))
        for (int h : row) hooks *= static_cast<unsigned long>(h);
    BigCount total = factorial(static_cast<unsigned>(p.size()));
    if (!mpz_divisible_p(total.get_mpz_t(), hooks.get_mpz_t()))
        fail(ErrorKind::InternalMismatch, "hook product does not divide |p|! for " + p.to_string());
    mpz_divexact(total.get_mpz_t(), total.get_mpz_t(), hooks.get_mpz_t());
    return total;
}

const BigCount& count_tableaux_cached(const Partition& p, DiagramKind kind)
{
    thread_local std::map<std::pair<int, std::vector<int>>, BigCount> memo;
    auto key = std::make_pair(static_cast<int>(kind), p.vec());
    auto it = memo.find(key);
    if (it == memo.end()) it = memo.emplace(std::move(key), count_tableaux(p, kind)).first;
    return it->second;
}

namespace {

struct FillingWalker {
    const Partition& shape;
    DiagramKind kind;
    const std::function<void(const Tableau&)>& visit;
    std::vector<int> len;
    std::vector<std::vector<int>> rows;

    void walk(int label)
    {
        if (label == 0) {
            visit(Tableau(shape, kind, rows));
            return;
        }
        for (std::size_t r = 0; r < len.size(); ++r) {
            int cur = len[r];
            if (cur == 0) break;
            int next = r + 1 < len.size() ? len[r + 1] : 0;
            bool corner = kind == DiagramKind::Shifted ? (next == 0 || next < cur - 1) : next < cur;
            if (!corner) continue;
            rows[r][static_cast<std::size_t>(cur - 1)] = label;
            --len[r];
            walk(label - 1);
            ++len[r];
        }
    }
};

}  // namespace

void for_each_tableau(const Partition& p, DiagramKind kind, const std::function<void(const Tableau&)>& visit)
{
    if (kind == DiagramKind::Shifted && !p.is_strict())
        fail(ErrorKind::ShiftedOfNonStrict, "shifted diagram of non-strict " + p.to_string());
    FillingWalker w{p, kind, visit, p.vec(), {}};
    for (int len : p.parts()) w.rows.emplace_back(static_cast<std::size_t>(len), 0);
    w.walk(static_cast<int>(p.size()));
}

std::vector<Tableau> all_tableaux(const Partition& p, DiagramKind kind)
{
    std::vector<Tableau> out;
    for_each_tableau(p, kind, [&](const Tableau& t) { out.push_back(t); });
    return out;
}

std::string_view to_string(Identity id)
{
    switch (id) {
    case Identity::ShiftSymmetricCount: return "shift_symmetric_count";
    case Identity::HookProduct: return "hook_product";
    case Identity::PrefixProbability: return "prefix_probability";
    case Identity::PrefixLevelSum: return "prefix_level_sum";
    case Identity::AddCellRatio: return "add_cell_ratio";
    case Identity::FirstRowInequality: return "first_row_inequality";
    case Identity::TrivialCellSum: return "trivial_cell_sum";
    case Identity::DominoSum: return "domino_sum";
    case Identity::TrominoSum: return "tromino_sum";
    case Identity::ColumnAdjacencyMean: return "column_adjacency_mean";
    case Identity::RowAdjacencyMean: return "row_adjacency_mean";
    case Identity::WordAdjacencyMean: return "word_adjacency_mean";
    }
    return "unknown";
}

std::string_view to_string(SumPattern pattern)
{
    switch (pattern) {
    case SumPattern::TrivialCell: return "trivial";
    case SumPattern::Domino: return "domino";
    case SumPattern::Tromino: return "tromino";
    }
    return "unknown";
}

std::string format_ratio(const BigRatio& r)
{
    return r.get_str();
}

IdentityReport make_equality(Identity id, std::string params, BigRatio lhs, BigRatio rhs)
{
    lhs.canonicalize();
    rhs.canonicalize();
    bool holds = lhs == rhs;
    return {id, std::move(params), std::move(lhs), std::move(rhs), holds};
}

IdentityReport verify_fL(const StrictPartition& p)
{
    auto big = shift_symmetric(p);
    BigRatio lhs(count_tableaux(big, DiagramKind::Ordinary));
    BigCount g = count_tableaux(p, DiagramKind::Shifted);
    auto k = static_cast<unsigned>(p.size());
    BigCount two_pow = 1;
    two_pow <<= static_cast<mp_bitcnt_t>(p.length());
    BigRatio rhs(g * g * binomial(2 * k, k), two_pow);
    return make_equality(Identity::ShiftSymmetricCount, "lambda=" + p.to_string(), lhs, rhs);
}

IdentityReport verify_hook_product(const StrictPartition& p)
{
    BigCount big = 1;
    for (const auto& row : hook_lengths(shift_symmetric(p), DiagramKind::Ordinary))
        for (int h : row) big *= static_cast<unsigned long>(h);
    BigCount shifted = 1;
    for (const auto& row : hook_lengths(p, DiagramKind::Shifted))
        for (int h : row) shifted *= static_cast<unsigned long>(h);
    BigCount rhs = shifted * shifted;
    rhs <<= static_cast<mp_bitcnt_t>(p.length());
    return make_equality(Identity::HookProduct, "lambda=" + p.to_string(), BigRatio(big), BigRatio(rhs));
}

namespace {

void require_in_staircase(int n, const Partition& p)
{
    if (n < 1 || !is_contained(p, Partition::staircase(n), DiagramKind::Shifted))
        fail(ErrorKind::NotContained, p.to_string() + " not inside the order-" + std::to_string(n) + " staircase");
}

struct PrefixForms {
    BigRatio direct;
    BigRatio squared_other;
};

PrefixForms prefix_forms(int n, const StrictPartition& p)
{
    require_in_staircase(n, p);
    auto stair = StrictPartition::staircase(n);
    BigRatio direct(count_tableaux_cached(p, DiagramKind::Shifted) *
                        count_tableaux_cached(complement_in_staircase(n, p), DiagramKind::Shifted),
                    count_tableaux_cached(stair, DiagramKind::Shifted));
    direct.canonicalize();

    auto total = static_cast<unsigned>(stair.size());
    auto k = static_cast<unsigned>(p.size());
    auto big = shift_symmetric(p);
    auto box = Partition::rectangle(n - 1, n);
    BigCount c = binomial(total, k);
    BigRatio other(binomial(2 * total, 2 * k) * count_tableaux_cached(big, DiagramKind::Ordinary) *
                       count_tableaux_cached(complement_in_box(n - 1, n, big), DiagramKind::Ordinary),
                   count_tableaux_cached(box, DiagramKind::Ordinary) * c * c);
    other.canonicalize();
    return {direct, other};
}

}  // namespace

BigRatio prefix_probability(int n, const StrictPartition& p)
{
    auto forms = prefix_forms(n, p);
    if (forms.direct * forms.direct != forms.squared_other)
        fail(ErrorKind::InternalMismatch, "prefix probability forms disagree for " + p.to_string());
    return forms.direct;
}

IdentityReport verify_prefix_probability(int n, const StrictPartition& p)
{
    auto forms = prefix_forms(n, p);
    return make_equality(Identity::PrefixProbability, "n=" + std::to_string(n) + ";lambda=" + p.to_string(),
                         forms.direct * forms.direct, forms.squared_other);
}

IdentityReport verify_prefix_level_sum(int n, int k)
{
    int total = n * (n - 1) / 2;
    if (n < 1 || k < 0 || k > total) fail(ErrorKind::OutOfRange, "level " + std::to_string(k));
    BigRatio sum = 0;
    for (const auto& p : strict_partitions_of(k))
        if (p.part(1) < n) sum += prefix_probability(n, StrictPartition(p));
    return make_equality(Identity::PrefixLevelSum, "n=" + std::to_string(n) + ";k=" + std::to_string(k), sum,
                         BigRatio(1));
}

IdentityReport verify_amusing(int rows, int cols, const Partition& p)
{
    auto box = Partition::rectangle(rows, cols);
    if (rows < 1 || !is_contained(p, box, DiagramKind::Ordinary) || p.part(1) + 1 > cols)
        fail(ErrorKind::NotContained, "cannot add a first-row cell to " + p.to_string() + " inside " +
                                          std::to_string(cols) + "^" + std::to_string(rows));
    auto plus = add_to_row(p, 1);
    auto f = [](const Partition& q) -> const BigCount& { return count_tableaux_cached(q, DiagramKind::Ordinary); };
    BigRatio lhs(f(p) * f(complement_in_box(rows, cols, plus)), f(plus) * f(complement_in_box(rows, cols, p)));
    long first = p.part(1);
    long size = static_cast<long>(p.size());
    BigRatio rhs(BigCount((rows + first) * (cols - first)), BigCount((size + 1) * (long(rows) * cols - size)));
    return make_equality(Identity::AddCellRatio,
                         "rows=" + std::to_string(rows) + ";cols=" + std::to_string(cols) + ";lambda=" + p.to_string(),
                         lhs, rhs);
}

namespace {

// J is the number of first-row labels <= k - 1 (offset 1) or <= k (offset 0).
std::vector<IdentityReport> first_row_reports(int n, int offset)
{
    if (n < 2 || n > 7) fail(ErrorKind::OutOfRange, "first-row inequality needs 2 <= n <= 7");
    int total = n * (n - 1) / 2;
    // hits[k] = #tableaux with k in row 1; j_terms[k] = sum of (2N - J^2).
    std::vector<long> hits(static_cast<std::size_t>(total) + 1, 0);
    std::vector<BigCount> j_terms(static_cast<std::size_t>(total) + 1, 0);
    long count = 0;
    for_each_tableau(Partition::staircase(n), DiagramKind::Shifted, [&](const Tableau& t) {
        ++count;
        std::vector<char> in_first(static_cast<std::size_t>(total) + 1, 0);
        for (int v : t.rows().front()) in_first[static_cast<std::size_t>(v)] = 1;
        long below = 0;
        for (int k = 1; k <= total; ++k) {
            long at = in_first[static_cast<std::size_t>(k)];
            long j = offset == 1 ? below : below + at;
            hits[static_cast<std::size_t>(k)] += at;
            j_terms[static_cast<std::size_t>(k)] += 2L * total - j * j;
            below += at;
        }
    });
    std::vector<IdentityReport> out;
    for (int k = 1; k < total; ++k) {
        BigRatio mean(hits[static_cast<std::size_t>(k)], count);
        mean.canonicalize();
        BigRatio lhs = mean * mean;
        BigRatio rhs(j_terms[static_cast<std::size_t>(k)], BigCount(count) * k * (total - k + 1));
        rhs.canonicalize();
        bool holds = lhs < rhs;
        out.push_back({Identity::FirstRowInequality, "n=" + std::to_string(n) + ";k=" + std::to_string(k), lhs, rhs,
                       holds});
    }
    return out;
}

}  // namespace

std::vector<IdentityReport> verify_expected_inequalities(int n)
{
    return first_row_reports(n, 1);
}

std::vector<IdentityReport> first_row_inequality_literal(int n)
{
    return first_row_reports(n, 0);
}

IdentityReport verify_expected_inequality(int n, int k)
{
    int total = n * (n - 1) / 2;
    if (k < 1 || k >= total) fail(ErrorKind::OutOfRange, "k must satisfy 1 <= k < N");
    return verify_expected_inequalities(n)[static_cast<std::size_t>(k - 1)];
}

std::vector<Cell> pattern_cells(SumPattern pattern, Cell u)
{
    switch (pattern) {
    case SumPattern::TrivialCell: return {u};
    case SumPattern::Domino: return {u, u.east()};
    case SumPattern::Tromino: return {u, u.east(), u.south().east()};
    }
    return {};
}

namespace {

// Row lengths of mu plus the given cells when that is again a shifted
// diagram inside the staircase of order n.
std::optional<Partition> shifted_union(int n, const Partition& mu, std::vector<Cell> extra)
{
    std::sort(extra.begin(), extra.end());
    std::vector<int> len(static_cast<std::size_t>(n), 0);
    for (int i = 1; i <= mu.length(); ++i) len[static_cast<std::size_t>(i - 1)] = mu.part(i);
    for (auto c : extra) {
        if (c.row < 1 || c.row > n - 1 || c.col > n - 1) return std::nullopt;
        auto& l = len[static_cast<std::size_t>(c.row - 1)];
        if (c.col != c.row + l) return std::nullopt;
        ++l;
    }
    std::vector<int> parts;
    for (std::size_t i = 0; i < len.size(); ++i) {
        if (len[i] == 0) {
            for (std::size_t j = i; j < len.size(); ++j)
                if (len[j] != 0) return std::nullopt;
            break;
        }
        if (!parts.empty() && parts.back() <= len[i]) return std::nullopt;
        parts.push_back(len[i]);
    }
    return Partition(std::move(parts));
}

}  // namespace

BigCount pattern_sum(int n, SumPattern pattern)
{
    if (n < 2 || n > 9) fail(ErrorKind::OutOfRange, "sum identities need 2 <= n <= 9");
    auto stair = Partition::staircase(n);
    BigCount sum = 0;
    for (const auto& mu : strict_partitions_in_staircase(n)) {
        for (auto u : cells(stair, DiagramKind::Shifted)) {
            if (contains(mu, u, DiagramKind::Shifted)) continue;
            auto nu = shifted_union(n, mu, pattern_cells(pattern, u));
            if (!nu) continue;
            sum += count_tableaux_cached(mu, DiagramKind::Shifted) *
                   count_tableaux_cached(complement_in_staircase(n, StrictPartition(*nu)), DiagramKind::Shifted);
        }
    }
    return sum;
}

IdentityReport verify_sum_identity(int n, SumPattern pattern)
{
    // At n = 2 no tromino fits, so the right-hand side g = 1 cannot be met.
    if (n < 3) fail(ErrorKind::OutOfRange, "sum identities are stated for n >= 3");
    BigCount lhs = pattern_sum(n, pattern);
    const BigCount& g = count_tableaux_cached(Partition::staircase(n), DiagramKind::Shifted);
    BigCount factor = 1;
    Identity id = Identity::TrominoSum;
    if (pattern == SumPattern::TrivialCell) {
        factor = n * (n - 1) / 2;
        id = Identity::TrivialCellSum;
    } else if (pattern == SumPattern::Domino) {
        factor = n - 2;
        id = Identity::DominoSum;
    }
    return make_equality(id, "n=" + std::to_string(n), BigRatio(lhs), BigRatio(factor * g));
}

}  // namespace staircase
