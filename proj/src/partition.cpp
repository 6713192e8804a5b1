#include "staircase/partition.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>

#include "staircase/error.hpp"

namespace staircase {

std::string_view to_string(DiagramKind kind)
{
    return kind == DiagramKind::Shifted ? "shifted" : "ordinary";
}

DiagramKind parse_kind(std::string_view text)
{
    if (text == "shifted") return DiagramKind::Shifted;
    if (text == "ordinary") return DiagramKind::Ordinary;
    fail(ErrorKind::ParseError, "unknown diagram kind '" + std::string(text) + "'");
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            fail(ErrorKind::InvalidPartition, "parts must be positive: " + to_string());
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            fail(ErrorKind::InvalidPartition, "parts must be weakly decreasing: " + to_string());
    }
}

Partition Partition::staircase(int n)
{
    std::vector<int> parts;
    for (int k = n - 1; k >= 1; --k) parts.push_back(k);
    return Partition(std::move(parts));
}

Partition Partition::rectangle(int rows, int cols)
{
    if (rows < 0 || cols < 0) fail(ErrorKind::OutOfRange, "negative rectangle dimension");
    if (rows == 0 || cols == 0) return {};
    return Partition(std::vector<int>(static_cast<std::size_t>(rows), cols));
}

Partition Partition::parse(std::string_view text)
{
    std::vector<int> parts;
    while (!text.empty()) {
        auto comma = text.find(',');
        auto token = text.substr(0, comma);
        while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
        while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc() || ptr != token.data() + token.size())
            fail(ErrorKind::ParseError, "bad partition token '" + std::string(token) + "'");
        parts.push_back(value);
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return Partition(std::move(parts));
}

std::int64_t Partition::size() const
{
    return std::accumulate(parts_.begin(), parts_.end(), std::int64_t{0});
}

bool Partition::is_strict() const
{
    return std::adjacent_find(parts_.begin(), parts_.end(), std::equal_to<>()) == parts_.end();
}

std::string Partition::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

StrictPartition::StrictPartition(std::vector<int> parts) : StrictPartition(Partition(std::move(parts))) {}

StrictPartition::StrictPartition(Partition p) : p_(std::move(p))
{
    if (!p_.is_strict()) fail(ErrorKind::ShiftedOfNonStrict, "not strict: " + p_.to_string());
}

StrictPartition StrictPartition::staircase(int n)
{
    return StrictPartition(Partition::staircase(n));
}

StrictPartition StrictPartition::parse(std::string_view text)
{
    return StrictPartition(Partition::parse(text));
}

namespace {

void require_kind(const Partition& p, DiagramKind kind)
{
    if (kind == DiagramKind::Shifted && !p.is_strict())
        fail(ErrorKind::ShiftedOfNonStrict, "shifted diagram of non-strict " + p.to_string());
}

int row_start(int row, DiagramKind kind)
{
    return kind == DiagramKind::Shifted ? row : 1;
}

}  // namespace

Partition conjugate(const Partition& p)
{
    std::vector<int> out(static_cast<std::size_t>(p.part(1)), 0);
    for (int len : p.parts())
        for (int j = 0; j < len; ++j) ++out[static_cast<std::size_t>(j)];
    return Partition(std::move(out));
}

std::vector<Cell> cells(const Partition& p, DiagramKind kind)
{
    require_kind(p, kind);
    std::vector<Cell> out;
    out.reserve(static_cast<std::size_t>(p.size()));
    for (int i = 1; i <= p.length(); ++i) {
        int start = row_start(i, kind);
        for (int j = 0; j < p.part(i); ++j) out.push_back({i, start + j});
    }
    return out;
}

bool contains(const Partition& p, Cell u, DiagramKind kind)
{
    if (u.row < 1 || u.row > p.length()) return false;
    int start = row_start(u.row, kind);
    return u.col >= start && u.col < start + p.part(u.row);
}

std::vector<int> column_lengths(const Partition& p, DiagramKind kind)
{
    require_kind(p, kind);
    if (kind == DiagramKind::Ordinary) return conjugate(p).vec();
    std::vector<int> out(static_cast<std::size_t>(p.part(1)), 0);
    for (int i = 1; i <= p.length(); ++i)
        for (int j = i; j < i + p.part(i); ++j) ++out[static_cast<std::size_t>(j - 1)];
    return out;
}

namespace {

int hook_with_columns(const Partition& p, const std::vector<int>& cols, Cell u, DiagramKind kind)
{
    int end = row_start(u.row, kind) + p.part(u.row) - 1;
    int arm = end - u.col;
    int leg = cols[static_cast<std::size_t>(u.col - 1)] - u.row;
    int h = arm + leg + 1;
    if (kind == DiagramKind::Shifted) h += p.part(u.col + 1);
    return h;
}

}  // namespace

int hook_length(const Partition& p, Cell u, DiagramKind kind)
{
    require_kind(p, kind);
    if (!contains(p, u, kind))
        fail(ErrorKind::CellOutOfShape,
             "(" + std::to_string(u.row) + "," + std::to_string(u.col) + ") not in " + p.to_string());
    return hook_with_columns(p, column_lengths(p, kind), u, kind);
}

std::vector<std::vector<int>> hook_lengths(const Partition& p, DiagramKind kind)
{
    auto cols = column_lengths(p, kind);
    std::vector<std::vector<int>> out;
    for (int i = 1; i <= p.length(); ++i) {
        std::vector<int> row;
        int start = row_start(i, kind);
        for (int j = start; j < start + p.part(i); ++j) row.push_back(hook_with_columns(p, cols, {i, j}, kind));
        out.push_back(std::move(row));
    }
    return out;
}

Partition partition_from_cells(std::vector<Cell> cs, DiagramKind kind)
{
    std::sort(cs.begin(), cs.end());
    cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
    std::map<int, std::vector<int>> rows;
    for (auto c : cs) rows[c.row].push_back(c.col);
    std::vector<int> parts;
    int expected_row = 1;
    for (auto& [row, cols] : rows) {
        if (row != expected_row) fail(ErrorKind::InvalidPartition, "rows are not contiguous from 1");
        int start = row_start(row, kind);
        for (std::size_t k = 0; k < cols.size(); ++k)
            if (cols[k] != start + static_cast<int>(k))
                fail(ErrorKind::InvalidPartition, "row " + std::to_string(row) + " is not left-justified");
        parts.push_back(static_cast<int>(cols.size()));
        ++expected_row;
    }
    Partition p(std::move(parts));
    require_kind(p, kind);
    return p;
}

Partition shift_symmetric(const StrictPartition& p)
{
    std::vector<Cell> out;
    for (auto c : cells(p, DiagramKind::Shifted)) {
        out.push_back({c.row, c.col + 1});
        out.push_back({c.col, c.row});
    }
    return partition_from_cells(std::move(out), DiagramKind::Ordinary);
}

bool is_contained(const Partition& inner, const Partition& outer, DiagramKind kind)
{
    if (inner.length() > outer.length()) return false;
    for (int i = 1; i <= inner.length(); ++i)
        if (inner.part(i) > outer.part(i)) return false;
    (void)kind;  // row starts coincide for both kinds, so the row test suffices
    return true;
}

Partition complement_in_box(int rows, int cols, const Partition& inner)
{
    if (!is_contained(inner, Partition::rectangle(rows, cols), DiagramKind::Ordinary))
        fail(ErrorKind::NotContained, inner.to_string() + " not inside " + std::to_string(cols) + "^" +
                                          std::to_string(rows));
    std::vector<int> parts;
    for (int i = rows; i >= 1; --i) {
        int len = cols - inner.part(i);
        if (len > 0) parts.push_back(len);
    }
    return Partition(std::move(parts));
}

StrictPartition complement_in_staircase(int n, const StrictPartition& inner)
{
    auto outer = Partition::staircase(n);
    if (!is_contained(inner, outer, DiagramKind::Shifted))
        fail(ErrorKind::NotContained, inner.to_string() + " not inside Delta_" + std::to_string(n));
    std::vector<Cell> out;
    for (auto c : cells(outer, DiagramKind::Shifted))
        if (!contains(inner, c, DiagramKind::Shifted)) out.push_back({n - c.col, n - c.row});
    return StrictPartition(partition_from_cells(std::move(out), DiagramKind::Shifted));
}

std::vector<Cell> removable_corners(const Partition& p, DiagramKind kind)
{
    require_kind(p, kind);
    std::vector<Cell> out;
    for (int i = 1; i <= p.length(); ++i) {
        int len = p.part(i), next = p.part(i + 1);
        bool removable = kind == DiagramKind::Shifted ? (next < len - 1 || i == p.length()) : next < len;
        if (removable) out.push_back({i, row_start(i, kind) + len - 1});
    }
    return out;
}

std::vector<Cell> addable_cells(const Partition& p, DiagramKind kind)
{
    require_kind(p, kind);
    std::vector<Cell> out;
    for (int i = 1; i <= p.length() + 1; ++i) {
        int len = p.part(i);
        bool ok = i == 1 || (kind == DiagramKind::Shifted ? len + 1 < p.part(i - 1) : len < p.part(i - 1));
        if (ok) out.push_back({i, row_start(i, kind) + len});
    }
    return out;
}

Partition remove_from_row(const Partition& p, int row)
{
    auto parts = p.vec();
    auto& v = parts.at(static_cast<std::size_t>(row - 1));
    --v;
    if (v == 0) parts.erase(parts.begin() + row - 1);
    return Partition(std::move(parts));
}

Partition add_to_row(const Partition& p, int row)
{
    auto parts = p.vec();
    if (row == p.length() + 1)
        parts.push_back(1);
    else
        ++parts.at(static_cast<std::size_t>(row - 1));
    return Partition(std::move(parts));
}

namespace {

void gen_parts(int remaining, int max_part, int max_len, bool strict, std::vector<int>& cur,
               std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    if (max_len == 0) return;
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        cur.push_back(part);
        gen_parts(remaining - part, strict ? part - 1 : part, max_len - 1, strict, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int size)
{
    std::vector<Partition> out;
    std::vector<int> cur;
    gen_parts(size, size, size, false, cur, out);
    return out;
}

std::vector<Partition> strict_partitions_of(int size)
{
    std::vector<Partition> out;
    std::vector<int> cur;
    gen_parts(size, size, size, true, cur, out);
    return out;
}

std::vector<Partition> partitions_in_box(int rows, int cols)
{
    std::vector<Partition> out;
    std::vector<int> cur;
    for (int k = 0; k <= rows * cols; ++k) gen_parts(k, cols, rows, false, cur, out);
    return out;
}

std::vector<StrictPartition> strict_partitions_in_staircase(int n)
{
    std::vector<StrictPartition> out;
    std::vector<Partition> tmp;
    std::vector<int> cur;
    int total = n * (n - 1) / 2;
    for (int k = 0; k <= total; ++k) gen_parts(k, n - 1, n, true, cur, tmp);
    for (auto& p : tmp) out.emplace_back(std::move(p));
    return out;
}

}  // namespace staircase
