#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace benford {

enum class InputFormat { Csv, JsonLines };

struct IngestOptions {
    std::filesystem::path path;
    InputFormat format = InputFormat::Csv;
    /// Header name, or a zero-based index written in decimal.
    std::string column = "0";
    bool absolute_value = false;
    int base = 10;
};

/// Parses a whole token as a decimal real, ignoring surrounding blanks.
std::optional<double> parse_real(std::string_view text);

/// One value per data row of the selected column. Cells that do not parse as
/// numbers come back as NaN so they are counted as nonfinite downstream.
/// Throws InputError when the column does not exist.
std::vector<double> read_column(std::istream& in, InputFormat format, const std::string& column);

/// read_column on options.path; absolute_value folds negatives onto positives.
/// Throws InputError naming the path when the file cannot be opened.
std::vector<double> ingest(const IngestOptions& options);

}  // namespace benford
