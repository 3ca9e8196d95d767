#include "output.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <json.hpp>

namespace primerecip::cli {

OutputFormat parse_format(std::string_view text) {
    if (text == "csv") return OutputFormat::Csv;
    if (text == "json") return OutputFormat::Json;
    if (text == "table") return OutputFormat::Table;
    throw std::invalid_argument("unknown output format '" + std::string(text) + "'");
}

std::string format_value(const Value& v) {
    struct Visitor {
        std::string operator()(std::uint64_t x) const { return std::to_string(x); }
        std::string operator()(std::int64_t x) const { return std::to_string(x); }
        std::string operator()(bool x) const { return x ? "true" : "false"; }
        std::string operator()(const std::string& x) const { return x; }
        std::string operator()(double x) const {
            if (std::isnan(x)) return "nan";
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.17g", x);
            return buf;
        }
    };
    return std::visit(Visitor{}, v);
}

namespace {

nlohmann::ordered_json to_json(const Value& v) {
    return std::visit([](const auto& x) { return nlohmann::ordered_json(x); }, v);
}

void write_csv(std::ostream& out, const std::vector<std::string>& header,
               const std::vector<Record>& records, bool with_header) {
    if (with_header) {
        for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
        out << '\n';
    }
    for (const auto& r : records) {
        for (std::size_t i = 0; i < r.fields.size(); ++i)
            out << (i ? "," : "") << format_value(r.fields[i].second);
        out << '\n';
    }
}

void write_json(std::ostream& out, const std::vector<Record>& records) {
    for (const auto& r : records) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (const auto& [key, value] : r.fields) obj[key] = to_json(value);
        out << obj.dump() << '\n';
    }
}

void write_table(std::ostream& out, const std::vector<std::string>& header,
                 const std::vector<Record>& records, bool with_header) {
    std::vector<std::size_t> width(header.size());
    for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
    std::vector<std::vector<std::string>> cells;
    for (const auto& r : records) {
        auto& row = cells.emplace_back();
        for (std::size_t i = 0; i < r.fields.size(); ++i) {
            row.push_back(format_value(r.fields[i].second));
            if (i < width.size()) width[i] = std::max(width[i], row.back().size());
        }
    }
    auto line = [&](const std::vector<std::string>& row) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            const std::size_t w = i < width.size() ? width[i] : row[i].size();
            out << (i ? "  " : "") << std::string(w - row[i].size(), ' ') << row[i];
        }
        out << '\n';
    };
    if (with_header) line(header);
    for (const auto& row : cells) line(row);
}

}  // namespace

void write_records(std::ostream& out, OutputFormat format, const std::vector<std::string>& header,
                   const std::vector<Record>& records, bool with_header) {
    switch (format) {
        case OutputFormat::Csv: write_csv(out, header, records, with_header); break;
        case OutputFormat::Json: write_json(out, records); break;
        case OutputFormat::Table: write_table(out, header, records, with_header); break;
    }
}

}  // namespace primerecip::cli
