#include "staircase/sampler.hpp"

#include <cmath>
#include <map>

#include "staircase/error.hpp"

namespace staircase {

namespace {

// Mutable shape with column heights, shrunk one corner at a time.
struct Shape {
    DiagramKind kind;
    std::vector<int> len;   // row lengths, no trailing zeros
    std::vector<int> colh;  // colh[j-1] = height of column j
    long size = 0;

    Shape(const Partition& p, DiagramKind k) : kind(k), len(p.vec()), colh(column_lengths(p, k)), size(p.size()) {}

    bool shifted() const { return kind == DiagramKind::Shifted; }
    int rows() const { return static_cast<int>(len.size()); }
    int row_len(int r) const { return r >= 1 && r <= rows() ? len[static_cast<std::size_t>(r - 1)] : 0; }
    int start(int r) const { return shifted() ? r : 1; }
    int last_col(int r) const { return start(r) + row_len(r) - 1; }

    bool is_corner(int r) const
    {
        int cur = row_len(r), next = row_len(r + 1);
        if (cur == 0) return false;
        return shifted() ? (next == 0 || next < cur - 1) : next < cur;
    }

    int hook(int i, int j) const
    {
        int h = last_col(i) - j + colh[static_cast<std::size_t>(j - 1)] - i + 1;
        if (shifted()) h += row_len(j + 1);
        return h;
    }

    // Hooks that drop by one when the corner of row a is removed.
    template <class F>
    void for_each_affected_hook(int a, F&& f) const
    {
        int b = last_col(a);
        for (int c = start(a); c < b; ++c) f(hook(a, c));
        for (int i = 1; i < a; ++i) f(hook(i, b));
        if (shifted() && a >= 2)
            for (int i = 1; i <= colh[static_cast<std::size_t>(a - 2)]; ++i) f(hook(i, a - 1));
    }

    void remove(int r)
    {
        int b = last_col(r);
        --len[static_cast<std::size_t>(r - 1)];
        --colh[static_cast<std::size_t>(b - 1)];
        if (len.back() == 0) len.pop_back();
        while (!colh.empty() && colh.back() == 0) colh.pop_back();
        --size;
    }
};

BigRatio exact_corner_ratio(const Shape& s, int row)
{
    BigCount num = 1, den = s.size;
    s.for_each_affected_hook(row, [&](int h) {
        num *= static_cast<unsigned long>(h);
        den *= static_cast<unsigned long>(h - 1);
    });
    BigRatio r(num, den);
    r.canonicalize();
    return r;
}

double log_corner_ratio(const Shape& s, int row)
{
    double acc = -std::log(static_cast<double>(s.size));
    s.for_each_affected_hook(row, [&](int h) { acc += std::log1p(1.0 / (h - 1)); });
    return acc;
}

struct ExactStep {
    std::vector<int> rows;
    std::vector<BigRatio> cumulative;
};

ExactStep exact_step(const Shape& s)
{
    ExactStep out;
    BigRatio acc = 0;
    for (int r = 1; r <= s.rows(); ++r) {
        if (!s.is_corner(r)) continue;
        acc += exact_corner_ratio(s, r);
        out.rows.push_back(r);
        out.cumulative.push_back(acc);
    }
    if (acc != 1) fail(ErrorKind::InternalMismatch, "corner probabilities do not sum to 1");
    return out;
}

// Small shapes recur constantly in exhaustive and chi-square runs.
const ExactStep& exact_step_cached(const Shape& s)
{
    thread_local std::map<std::pair<int, std::vector<int>>, ExactStep> memo;
    auto key = std::make_pair(static_cast<int>(s.kind), s.len);
    auto it = memo.find(key);
    if (it == memo.end()) it = memo.emplace(std::move(key), exact_step(s)).first;
    return it->second;
}

// Factor by which the shifted count changes, per other row of length y, when
// a row of length x loses a cell. Zero exactly when y = x - 1.
double row_factor(int x, int y)
{
    if (x - 1 == y) return 0.0;
    return static_cast<double>(std::abs(x - 1 - y)) * (x + y) / (static_cast<double>(std::abs(x - y)) * (x - 1 + y));
}

// For each row r: the product of the nonzero row factors against all other
// rows, and the number of zero factors. The corner weight of row r is
// len[r] * prod[r] when zeros[r] == 0.
struct RowProducts {
    std::vector<double> prod;
    std::vector<int> zeros;

    void rebuild_row(const std::vector<int>& len, std::size_t r)
    {
        double p = 1.0;
        int z = 0;
        for (std::size_t j = 0; j < len.size(); ++j) {
            if (j == r) continue;
            double f = row_factor(len[r], len[j]);
            if (f == 0.0)
                ++z;
            else
                p *= f;
        }
        prod[r] = p;
        zeros[r] = z;
    }

    void rebuild(const std::vector<int>& len)
    {
        prod.assign(len.size(), 1.0);
        zeros.assign(len.size(), 0);
        for (std::size_t r = 0; r < len.size(); ++r) rebuild_row(len, r);
    }

    // Row s went from old_len to old_len - 1; len already updated (and the
    // row popped if it emptied).
    void update(const std::vector<int>& len, std::size_t s, int old_len)
    {
        int new_len = old_len - 1;
        for (std::size_t r = 0; r < len.size(); ++r) {
            if (r == s) continue;
            int x = len[r];
            double out = row_factor(x, old_len), in = row_factor(x, new_len);
            if (out == 0.0)
                --zeros[r];
            else
                prod[r] /= out;
            if (in == 0.0)
                ++zeros[r];
            else
                prod[r] *= in;
        }
        if (s < len.size()) {
            rebuild_row(len, s);
        } else {
            prod.pop_back();
            zeros.pop_back();
        }
    }

    double weight(const std::vector<int>& len, std::size_t r) const
    {
        return zeros[r] == 0 ? len[r] * prod[r] : 0.0;
    }
};

}  // namespace

std::vector<CornerProbability> corner_probabilities(const Partition& p, DiagramKind kind)
{
    if (p.empty()) fail(ErrorKind::EmptyShape, "no corners in the empty shape");
    Shape s(p, kind);
    std::vector<CornerProbability> out;
    for (int r = 1; r <= s.rows(); ++r)
        if (s.is_corner(r)) out.push_back({{r, s.last_col(r)}, exact_corner_ratio(s, r)});
    return out;
}

std::vector<CornerWeight> corner_probabilities_float(const Partition& p, DiagramKind kind)
{
    if (p.empty()) fail(ErrorKind::EmptyShape, "no corners in the empty shape");
    Shape s(p, kind);
    std::vector<CornerWeight> out;
    double total = 0.0;
    if (kind == DiagramKind::Shifted) {
        RowProducts rp;
        rp.rebuild(s.len);
        for (int r = 1; r <= s.rows(); ++r) {
            double w = rp.weight(s.len, static_cast<std::size_t>(r - 1));
            if (w == 0.0) continue;
            out.push_back({{r, s.last_col(r)}, w});
            total += w;
        }
    } else {
        for (int r = 1; r <= s.rows(); ++r) {
            if (!s.is_corner(r)) continue;
            double w = std::exp(log_corner_ratio(s, r));
            out.push_back({{r, s.last_col(r)}, w});
            total += w;
        }
    }
    for (auto& c : out) c.probability /= total;
    return out;
}

Tableau sample_tableau(const Partition& p, DiagramKind kind, RngState& rng, long exact_threshold)
{
    if (kind == DiagramKind::Shifted && !p.is_strict())
        fail(ErrorKind::ShiftedOfNonStrict, "shifted diagram of non-strict " + p.to_string());
    std::vector<std::vector<int>> rows;
    for (int len : p.parts()) rows.emplace_back(static_cast<std::size_t>(len), 0);
    Shape s(p, kind);

    auto place = [&](int r) {
        int label = static_cast<int>(s.size);
        rows[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(s.row_len(r) - 1)] = label;
        s.remove(r);
    };

    // Large shifted shapes: row products, updated in O(rows) per step and
    // rebuilt periodically to keep rounding from accumulating.
    if (kind == DiagramKind::Shifted && s.size > exact_threshold) {
        RowProducts rp;
        rp.rebuild(s.len);
        std::vector<double> weights;
        long steps = 0;
        while (s.size > exact_threshold) {
            weights.assign(s.len.size(), 0.0);
            double total = 0.0;
            for (std::size_t r = 0; r < s.len.size(); ++r) {
                weights[r] = rp.weight(s.len, r);
                total += weights[r];
            }
            double target = rng.uniform() * total;
            std::size_t pick = s.len.size();
            double acc = 0.0;
            for (std::size_t r = 0; r < s.len.size(); ++r) {
                if (weights[r] == 0.0) continue;
                acc += weights[r];
                pick = r;
                if (target < acc) break;
            }
            int old_len = s.len[pick];
            place(static_cast<int>(pick) + 1);
            if (++steps % 4096 == 0)
                rp.rebuild(s.len);
            else
                rp.update(s.len, pick, old_len);
        }
    }

    while (s.size > exact_threshold) {
        std::vector<int> corner_rows;
        std::vector<double> weights;
        double total = 0.0;
        for (int r = 1; r <= s.rows(); ++r) {
            if (!s.is_corner(r)) continue;
            corner_rows.push_back(r);
            weights.push_back(std::exp(log_corner_ratio(s, r)));
            total += weights.back();
        }
        double target = rng.uniform() * total, acc = 0.0;
        int pick = corner_rows.back();
        for (std::size_t i = 0; i < weights.size(); ++i) {
            acc += weights[i];
            if (target < acc) {
                pick = corner_rows[i];
                break;
            }
        }
        place(pick);
    }

    const BigCount scale = BigCount(1) << 53;
    while (s.size > 0) {
        ExactStep fresh;
        const ExactStep* step = nullptr;
        if (s.size <= 32) {
            step = &exact_step_cached(s);
        } else {
            fresh = exact_step(s);
            step = &fresh;
        }
        BigRatio u(BigCount(static_cast<unsigned long>(rng.next_bits53())), scale);
        u.canonicalize();
        std::size_t i = 0;
        while (!(u < step->cumulative[i])) ++i;
        place(step->rows[i]);
    }
    return Tableau(p, kind, std::move(rows));
}

}  // namespace staircase
