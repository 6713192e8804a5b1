#include "staircase/table.hpp"

#include <charconv>
#include <cmath>
#include <ostream>

#include <json.hpp>

#include "staircase/error.hpp"

#ifndef STAIRCASE_GIT_DESCRIBE
#define STAIRCASE_GIT_DESCRIBE "unknown"
#endif

namespace staircase {

void Table::add(std::vector<Value> row)
{
    if (row.size() != columns.size())
        fail(ErrorKind::InternalMismatch,
             "row has " + std::to_string(row.size()) + " fields, header has " + std::to_string(columns.size()));
    rows.push_back(std::move(row));
}

std::string format_real(double x)
{
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
    if (ec != std::errc()) fail(ErrorKind::InternalMismatch, "cannot format real");
    return std::string(buf, end);
}

namespace {

std::string quote(const std::string& s)
{
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + '"';
}

std::string csv_field(const Value& v)
{
    struct {
        std::string operator()(std::monostate) const { return {}; }
        std::string operator()(long long i) const { return std::to_string(i); }
        std::string operator()(double x) const { return format_real(x); }
        std::string operator()(const std::string& s) const { return quote(s); }
    } visit;
    return std::visit(visit, v);
}

nlohmann::ordered_json json_field(const Value& v)
{
    struct {
        nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
        nlohmann::ordered_json operator()(long long i) const { return i; }
        nlohmann::ordered_json operator()(double x) const
        {
            // JSON has no nan/inf; keep them readable as strings.
            if (!std::isfinite(x)) return format_real(x);
            return x;
        }
        nlohmann::ordered_json operator()(const std::string& s) const { return s; }
    } visit;
    return std::visit(visit, v);
}

}  // namespace

void write_csv(std::ostream& out, const Table& table, const Metadata& meta)
{
    out << "# command=" << meta.command << " seed=" << meta.seed << " n=" << meta.n << " samples=" << meta.samples
        << " git=" << meta.version << '\n';
    for (std::size_t i = 0; i < table.columns.size(); ++i) out << (i ? "," : "") << quote(table.columns[i]);
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(row[i]);
        out << '\n';
    }
}

void write_json(std::ostream& out, const Table& table, const Metadata& meta)
{
    nlohmann::ordered_json doc;
    doc["meta"] = {{"command", meta.command},
                   {"seed", meta.seed},
                   {"n", meta.n},
                   {"samples", meta.samples},
                   {"git", meta.version}};
    doc["columns"] = table.columns;
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size(); ++i) obj[table.columns[i]] = json_field(row[i]);
        rows.push_back(std::move(obj));
    }
    doc["rows"] = std::move(rows);
    out << doc.dump(1) << '\n';
}

std::string build_version() { return STAIRCASE_GIT_DESCRIBE; }

}  // namespace staircase
