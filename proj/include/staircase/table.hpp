#ifndef STAIRCASE_TABLE_HPP
#define STAIRCASE_TABLE_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace staircase {

/// An empty cell, an integer, a real or text.
using Value = std::variant<std::monostate, long long, double, std::string>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Value>> rows;

    explicit Table(std::vector<std::string> columns_) : columns(std::move(columns_)) {}

    /// Throws InternalMismatch if the row width differs from the header.
    void add(std::vector<Value> row);
};

/// What produced a table; written as the leading comment line of a CSV and
/// as the "meta" object of a JSON document.
struct Metadata {
    std::string command;
    std::uint64_t seed = 0;
    int n = 0;
    int samples = 0;
    std::string version;
};

/// 17 significant digits, '.' separator whatever the locale; nan and inf
/// spelled out.
std::string format_real(double x);

/// "# command=... seed=... n=... samples=... git=..." then the header and
/// the rows. LF line endings; text fields are quoted when needed.
void write_csv(std::ostream& out, const Table& table, const Metadata& meta);

/// {"meta": {...}, "columns": [...], "rows": [{column: value, ...}, ...]}.
/// Empty cells become null.
void write_json(std::ostream& out, const Table& table, const Metadata& meta);

/// git describe of the source tree at configure time.
std::string build_version();

}  // namespace staircase

#endif  // STAIRCASE_TABLE_HPP
