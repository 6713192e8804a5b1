#ifndef STAIRCASE_PARTITION_HPP
#define STAIRCASE_PARTITION_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace staircase {

/// A cell of a (possibly shifted) Young diagram, 1-based, English convention.
/// Shifted cells are stored at their true column, so row i of a shifted
/// diagram starts at column i.
struct Cell {
    int row = 1;
    int col = 1;

    auto operator<=>(const Cell&) const = default;

    Cell north() const { return {row - 1, col}; }
    Cell east() const { return {row, col + 1}; }
    Cell south() const { return {row + 1, col}; }
    Cell west() const { return {row, col - 1}; }
};

enum class DiagramKind { Ordinary, Shifted };

std::string_view to_string(DiagramKind kind);
DiagramKind parse_kind(std::string_view text);

/// Weakly decreasing sequence of positive integers. The empty partition is a
/// valid value.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    static Partition staircase(int n);
    static Partition rectangle(int rows, int cols);
    static Partition parse(std::string_view text);

    std::span<const int> parts() const { return parts_; }
    const std::vector<int>& vec() const { return parts_; }

    /// 1-based row length, 0 past the last row.
    int part(int row) const
    {
        return row >= 1 && row <= length() ? parts_[static_cast<std::size_t>(row - 1)] : 0;
    }
    int length() const { return static_cast<int>(parts_.size()); }
    std::int64_t size() const;
    bool empty() const { return parts_.empty(); }
    bool is_strict() const;

    std::string to_string() const;

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

/// Strictly decreasing partition; the shapes that admit shifted diagrams.
class StrictPartition {
public:
    StrictPartition() = default;
    explicit StrictPartition(std::vector<int> parts);
    explicit StrictPartition(Partition p);

    static StrictPartition staircase(int n);
    static StrictPartition parse(std::string_view text);

    const Partition& partition() const { return p_; }
    operator const Partition&() const { return p_; }

    std::span<const int> parts() const { return p_.parts(); }
    int part(int row) const { return p_.part(row); }
    int length() const { return p_.length(); }
    std::int64_t size() const { return p_.size(); }
    bool empty() const { return p_.empty(); }
    std::string to_string() const { return p_.to_string(); }

    auto operator<=>(const StrictPartition&) const = default;

private:
    Partition p_;
};

Partition conjugate(const Partition& p);

/// Cells in row-major order. Shifted requires p strict.
std::vector<Cell> cells(const Partition& p, DiagramKind kind);

bool contains(const Partition& p, Cell u, DiagramKind kind);

/// Number of cells in each column; index 0 is column 1.
std::vector<int> column_lengths(const Partition& p, DiagramKind kind);

/// Ordinary: arm + leg + 1. Shifted: arm + leg (weakly below) + length of
/// row col+1, which is row i+j in unshifted coordinates.
int hook_length(const Partition& p, Cell u, DiagramKind kind);

/// All hook lengths, one vector per row in diagram order.
std::vector<std::vector<int>> hook_lengths(const Partition& p, DiagramKind kind);

/// Shift-symmetric partition: Y_L = {(i,j+1) : (i,j) in Y^sh} u {(j,i) : (i,j) in Y^sh}.
Partition shift_symmetric(const StrictPartition& p);

/// (cols^rows) minus inner, rotated by 180 degrees.
Partition complement_in_box(int rows, int cols, const Partition& inner);

/// Shifted Delta_n minus inner, mapped by (i,j) -> (n-j, n-i).
StrictPartition complement_in_staircase(int n, const StrictPartition& inner);

/// Y_inner subset of Y_outer under the given diagram semantics.
bool is_contained(const Partition& inner, const Partition& outer, DiagramKind kind);

/// Rebuild a partition from an arbitrary cell set; throws InvalidPartition if
/// the cells are not a (shifted) Young diagram.
Partition partition_from_cells(std::vector<Cell> cells, DiagramKind kind);

/// Removable corners in row order.
std::vector<Cell> removable_corners(const Partition& p, DiagramKind kind);

/// Cells that can be added keeping a valid diagram of the same kind, row order.
std::vector<Cell> addable_cells(const Partition& p, DiagramKind kind);

/// p with one cell removed from (or added to) the given 1-based row. The
/// result is not validated against the diagram kind.
Partition remove_from_row(const Partition& p, int row);
Partition add_to_row(const Partition& p, int row);

// Generators used by exhaustive suites.
std::vector<Partition> partitions_of(int size);
std::vector<Partition> strict_partitions_of(int size);
std::vector<Partition> partitions_in_box(int rows, int cols);
std::vector<StrictPartition> strict_partitions_in_staircase(int n);

}  // namespace staircase

#endif  // STAIRCASE_PARTITION_HPP
