#include "staircase/tableau.hpp"

#include <json.hpp>

#include "staircase/error.hpp"

namespace staircase {

bool is_standard(const Partition& shape, DiagramKind kind, const std::vector<std::vector<int>>& rows)
{
    if (kind == DiagramKind::Shifted && !shape.is_strict()) return false;
    if (static_cast<int>(rows.size()) != shape.length()) return false;
    std::int64_t size = shape.size();
    std::vector<char> seen(static_cast<std::size_t>(size) + 1, 0);
    for (int i = 1; i <= shape.length(); ++i) {
        const auto& row = rows[static_cast<std::size_t>(i - 1)];
        if (static_cast<int>(row.size()) != shape.part(i)) return false;
        for (std::size_t k = 0; k < row.size(); ++k) {
            int v = row[k];
            if (v < 1 || v > size || seen[static_cast<std::size_t>(v)]) return false;
            seen[static_cast<std::size_t>(v)] = 1;
            if (k > 0 && row[k - 1] >= v) return false;
        }
        if (i == 1) continue;
        // Column condition against the row above, in true column coordinates.
        const auto& above = rows[static_cast<std::size_t>(i - 2)];
        int offset = kind == DiagramKind::Shifted ? 1 : 0;
        for (std::size_t k = 0; k < row.size(); ++k) {
            std::size_t ka = k + static_cast<std::size_t>(offset);
            if (ka >= above.size() || above[ka] >= row[k]) return false;
        }
    }
    return true;
}

Tableau::Tableau(Partition shape, DiagramKind kind, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), kind_(kind), rows_(std::move(rows))
{
    if (kind_ == DiagramKind::Shifted && !shape_.is_strict())
        fail(ErrorKind::ShiftedOfNonStrict, "shifted tableau of non-strict shape " + shape_.to_string());
    if (!is_standard(shape_, kind_, rows_)) fail(ErrorKind::WrongShape, "filling is not a standard tableau");
    where_.resize(static_cast<std::size_t>(shape_.size()));
    for (int i = 1; i <= shape_.length(); ++i) {
        const auto& row = rows_[static_cast<std::size_t>(i - 1)];
        for (std::size_t k = 0; k < row.size(); ++k)
            where_[static_cast<std::size_t>(row[k] - 1)] = {i, start(i) + static_cast<int>(k)};
    }
}

int Tableau::get(Cell u, int absent) const
{
    if (u.row < 1 || u.row > shape_.length()) return absent;
    int k = u.col - start(u.row);
    const auto& row = rows_[static_cast<std::size_t>(u.row - 1)];
    if (k < 0 || k >= static_cast<int>(row.size())) return absent;
    return row[static_cast<std::size_t>(k)];
}

int Tableau::at(Cell u) const
{
    int v = get(u, 0);
    if (v == 0)
        fail(ErrorKind::CellOutOfShape,
             "(" + std::to_string(u.row) + "," + std::to_string(u.col) + ") not in " + shape_.to_string());
    return v;
}

Cell Tableau::cell_of(int label) const
{
    if (label < 1 || label > size()) fail(ErrorKind::OutOfRange, "label " + std::to_string(label));
    return where_[static_cast<std::size_t>(label - 1)];
}

std::string Tableau::to_json() const
{
    nlohmann::ordered_json j;
    j["shape"] = shape_.to_string();
    j["kind"] = std::string(to_string(kind_));
    j["rows"] = rows_;
    return j.dump();
}

Tableau Tableau::from_json(const std::string& text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
        auto shape = Partition::parse(j.at("shape").get<std::string>());
        auto kind = parse_kind(j.at("kind").get<std::string>());
        return Tableau(std::move(shape), kind, j.at("rows").get<std::vector<std::vector<int>>>());
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorKind::ParseError, e.what());
    }
}

Tableau shift_rows(const Tableau& t)
{
    return Tableau(t.shape(), DiagramKind::Shifted, t.rows());
}

Tableau unshift_rows(const Tableau& t)
{
    return Tableau(t.shape(), DiagramKind::Ordinary, t.rows());
}

}  // namespace staircase
