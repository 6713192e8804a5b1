#ifndef STAIRCASE_TABLEAU_HPP
#define STAIRCASE_TABLEAU_HPP

#include <string>
#include <vector>

#include "staircase/partition.hpp"

namespace staircase {

/// A standard filling of an ordinary or shifted diagram. rows()[i] lists the
/// labels of row i+1 left to right, starting at the row's first column.
/// Construction validates the bijection onto 1..size and standardness.
class Tableau {
public:
    Tableau() = default;
    Tableau(Partition shape, DiagramKind kind, std::vector<std::vector<int>> rows);

    const Partition& shape() const { return shape_; }
    DiagramKind kind() const { return kind_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int size() const { return static_cast<int>(where_.size()); }

    /// Label at u; throws CellOutOfShape.
    int at(Cell u) const;
    /// Label at u, or `absent` when u lies outside the diagram.
    int get(Cell u, int absent) const;
    /// Cell holding the given label (1..size); throws OutOfRange.
    Cell cell_of(int label) const;

    bool operator==(const Tableau& other) const
    {
        return kind_ == other.kind_ && rows_ == other.rows_;
    }
    auto operator<=>(const Tableau& other) const
    {
        if (auto c = kind_ <=> other.kind_; c != 0) return c;
        return rows_ <=> other.rows_;
    }

    /// {"shape": "4,3,2,1", "kind": "shifted", "rows": [[...], ...]}
    std::string to_json() const;
    static Tableau from_json(const std::string& text);

private:
    Partition shape_;
    DiagramKind kind_ = DiagramKind::Ordinary;
    std::vector<std::vector<int>> rows_;
    std::vector<Cell> where_;

    int start(int row) const { return kind_ == DiagramKind::Shifted ? row : 1; }
};

/// True when rows and columns strictly increase and labels form 1..size.
bool is_standard(const Partition& shape, DiagramKind kind, const std::vector<std::vector<int>>& rows);

/// The shifted filling obtained from an unshifted one by moving row i right by
/// i-1 (labels unchanged); and back.
Tableau shift_rows(const Tableau& t);
Tableau unshift_rows(const Tableau& t);

}  // namespace staircase

#endif  // STAIRCASE_TABLEAU_HPP
