#pragma once

// Line-oriented report documents.
//
// A document is a sequence of records, one per line:
//
//   <type> <key>=<value> <key>=<value> ...
//
// Field order is fixed by the emitting command. Values are integers in plain
// decimal, reals with 12 significant digits (printf "%.12g"), booleans as
// true/false, and strings with '%', ' ', '=' and control characters
// percent-encoded. The first record is always
//
//   report schema=benford-report/1 command=<verb> ...
//
// Parsing accepts only canonical text, so parse followed by emit reproduces
// the input byte for byte.

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace benford {

inline constexpr std::string_view kReportSchema = "benford-report/1";

using ReportValue = std::variant<std::int64_t, double, bool, std::string>;

/// Formats a real the way reports do: 12 significant digits, -0 written as 0.
std::string format_real(double v);

struct Record {
    std::string type;
    std::vector<std::pair<std::string, ReportValue>> fields;

    Record& add(std::string key, ReportValue value);
    const ReportValue& at(std::string_view key) const;
    double real(std::string_view key) const;  // accepts integer fields too
    std::int64_t integer(std::string_view key) const;
    bool boolean(std::string_view key) const;
    const std::string& text(std::string_view key) const;

    std::string emit() const;
    static Record parse(std::string_view line);
};

class ReportDocument {
public:
    ReportDocument() = default;
    /// Starts a document with the header record for `command`.
    explicit ReportDocument(std::string command);

    Record& header();
    Record& add(std::string type);

    const std::vector<Record>& records() const noexcept { return records_; }
    /// Records of the given type, in document order.
    std::vector<const Record*> find(std::string_view type) const;
    const Record& first(std::string_view type) const;

    std::string emit() const;
    static ReportDocument parse(std::string_view text);

private:
    std::vector<Record> records_;
};

}  // namespace benford
