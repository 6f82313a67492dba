#include "benford/ingest.hpp"

#include "benford/error.hpp"

#include <boost/tokenizer.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>

namespace benford {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::optional<std::size_t> as_index(std::string_view column) {
    std::size_t idx = 0;
    const auto [ptr, ec] = std::from_chars(column.data(), column.data() + column.size(), idx);
    if (ec != std::errc() || ptr != column.data() + column.size() || column.empty()) {
        return std::nullopt;
    }
    return idx;
}

std::vector<std::string> split_csv(const std::string& line) {
    using Tokenizer = boost::tokenizer<boost::escaped_list_separator<char>>;
    std::vector<std::string> cells;
    try {
        Tokenizer tok(line, boost::escaped_list_separator<char>('\\', ',', '"'));
        cells.assign(tok.begin(), tok.end());
    } catch (const boost::escaped_list_error&) {
        // Malformed quoting; treat the whole row as unparseable.
        cells.clear();
    }
    return cells;
}

std::vector<double> read_csv(std::istream& in, const std::string& column) {
    std::string line;
    if (!std::getline(in, line)) {
        throw InputError("CSV input is empty (a header row is required)");
    }
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto header = split_csv(line);

    std::optional<std::size_t> col;
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (trim(header[i]) == column) {
            col = i;
            break;
        }
    }
    if (!col) {
        const auto idx = as_index(column);
        if (idx && *idx < header.size()) col = idx;
    }
    if (!col) {
        throw InputError("column '" + column + "' not found in CSV header");
    }

    std::vector<double> values;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty()) continue;
        const auto cells = split_csv(line);
        values.push_back(*col < cells.size() ? parse_real(cells[*col]).value_or(kNaN) : kNaN);
    }
    return values;
}

std::vector<double> read_jsonl(std::istream& in, const std::string& column) {
    using nlohmann::json;
    const auto idx = as_index(column);
    std::vector<double> values;
    bool seen = false;
    std::string line;
    while (std::getline(in, line)) {
        if (trim(line).empty()) continue;
        const json row = json::parse(line, nullptr, /*allow_exceptions=*/false);
        const json* cell = nullptr;
        if (row.is_object() && row.contains(column)) {
            cell = &row[column];
        } else if (row.is_array() && idx && *idx < row.size()) {
            cell = &row[*idx];
        }
        if (cell == nullptr) {
            values.push_back(kNaN);
            continue;
        }
        seen = true;
        if (cell->is_number()) {
            values.push_back(cell->get<double>());
        } else if (cell->is_string()) {
            values.push_back(parse_real(cell->get_ref<const std::string&>()).value_or(kNaN));
        } else {
            values.push_back(kNaN);
        }
    }
    if (!seen) {
        throw InputError("field '" + column + "' not present in any JSON-lines record");
    }
    return values;
}

}  // namespace

std::optional<double> parse_real(std::string_view text) {
    text = trim(text);
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    if (text.empty()) return std::nullopt;
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ptr != text.data() + text.size()) return std::nullopt;
    if (ec == std::errc::result_out_of_range) {
        // strtod saturates to +-inf or 0; both are skipped downstream.
        return std::strtod(std::string(text).c_str(), nullptr);
    }
    if (ec != std::errc()) return std::nullopt;
    return v;
}

std::vector<double> read_column(std::istream& in, InputFormat format, const std::string& column) {
    return format == InputFormat::Csv ? read_csv(in, column) : read_jsonl(in, column);
}

std::vector<double> ingest(const IngestOptions& options) {
    std::ifstream in(options.path);
    if (!in) {
        throw InputError("cannot open input file '" + options.path.string() + "'");
    }
    auto values = read_column(in, options.format, options.column);
    if (options.absolute_value) {
        std::transform(values.begin(), values.end(), values.begin(),
                       [](double v) { return std::isnan(v) ? v : std::abs(v); });
    }
    return values;
}

}  // namespace benford
