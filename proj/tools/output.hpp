#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace primerecip::cli {

enum class OutputFormat { Csv, Json, Table };

OutputFormat parse_format(std::string_view text);

using Value = std::variant<std::uint64_t, std::int64_t, double, bool, std::string>;

/// Flat, ordered field list; one CSV row, one JSON object, one table line.
struct Record {
    std::vector<std::pair<std::string, Value>> fields;

    Record& add(std::string key, Value v) {
        fields.emplace_back(std::move(key), std::move(v));
        return *this;
    }
};

/// Reals are rendered with 17 significant digits.
std::string format_value(const Value& v);

/// Writes records sharing one schema. CSV emits the header then one row per
/// record; JSON emits one object per line; Table pads columns.
void write_records(std::ostream& out, OutputFormat format, const std::vector<std::string>& header,
                   const std::vector<Record>& records, bool with_header = true);

}  // namespace primerecip::cli
