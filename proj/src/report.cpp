#include "benford/report.hpp"

#include "benford/error.hpp"

#include <charconv>
#include <cstdio>
#include <string>

namespace benford {

namespace {

bool needs_escape(unsigned char c) {
    return c == '%' || c == ' ' || c == '=' || c < 0x20 || c == 0x7f;
}

std::string encode(std::string_view s) {
    static constexpr char hex[] = "0123456789ABCDEF";
    std::string out;
    out.reserve(s.size());
    for (unsigned char c : s) {
        if (needs_escape(c)) {
            out += '%';
            out += hex[c >> 4];
            out += hex[c & 0xF];
        } else {
            out += static_cast<char>(c);
        }
    }
    return out;
}

std::string decode(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] != '%') {
            out += s[i];
            continue;
        }
        unsigned value = 0;
        if (i + 2 >= s.size()) {
            throw InputError("truncated percent escape in report value");
        }
        const auto [ptr, ec] = std::from_chars(s.data() + i + 1, s.data() + i + 3, value, 16);
        if (ec != std::errc() || ptr != s.data() + i + 3) {
            throw InputError("bad percent escape in report value");
        }
        out += static_cast<char>(value);
        i += 2;
    }
    return out;
}

std::string emit_value(const ReportValue& v) {
    return std::visit(
        [](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, std::int64_t>) {
                return std::to_string(x);
            } else if constexpr (std::is_same_v<T, double>) {
                return format_real(x);
            } else if constexpr (std::is_same_v<T, bool>) {
                return x ? "true" : "false";
            } else {
                return encode(x);
            }
        },
        v);
}

// Picks the first interpretation whose canonical spelling is the token itself.
ReportValue parse_value(std::string_view token) {
    std::int64_t i = 0;
    auto [ip, iec] = std::from_chars(token.data(), token.data() + token.size(), i);
    if (iec == std::errc() && ip == token.data() + token.size() && std::to_string(i) == token) {
        return i;
    }
    double d = 0.0;
    auto [dp, dec] = std::from_chars(token.data(), token.data() + token.size(), d);
    if (dec == std::errc() && dp == token.data() + token.size() && format_real(d) == token) {
        return d;
    }
    if (token == "true") return true;
    if (token == "false") return false;
    std::string s = decode(token);
    if (encode(s) != token) {
        throw InputError("non-canonical report value '" + std::string(token) + "'");
    }
    return s;
}

}  // namespace

std::string format_real(double v) {
    if (v == 0.0) v = 0.0;  // drop the sign of -0
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

Record& Record::add(std::string key, ReportValue value) {
    fields.emplace_back(std::move(key), std::move(value));
    return *this;
}

const ReportValue& Record::at(std::string_view key) const {
    for (const auto& [k, v] : fields) {
        if (k == key) return v;
    }
    throw InputError("record '" + type + "' has no field '" + std::string(key) + "'");
}

double Record::real(std::string_view key) const {
    const auto& v = at(key);
    if (const auto* d = std::get_if<double>(&v)) return *d;
    if (const auto* i = std::get_if<std::int64_t>(&v)) return static_cast<double>(*i);
    throw InputError("field '" + std::string(key) + "' is not numeric");
}

std::int64_t Record::integer(std::string_view key) const {
    if (const auto* i = std::get_if<std::int64_t>(&at(key))) return *i;
    throw InputError("field '" + std::string(key) + "' is not an integer");
}

bool Record::boolean(std::string_view key) const {
    if (const auto* b = std::get_if<bool>(&at(key))) return *b;
    throw InputError("field '" + std::string(key) + "' is not a boolean");
}

const std::string& Record::text(std::string_view key) const {
    if (const auto* s = std::get_if<std::string>(&at(key))) return *s;
    throw InputError("field '" + std::string(key) + "' is not a string");
}

std::string Record::emit() const {
    std::string line = encode(type);
    for (const auto& [k, v] : fields) {
        line += ' ';
        line += encode(k);
        line += '=';
        line += emit_value(v);
    }
    return line;
}

Record Record::parse(std::string_view line) {
    Record r;
    std::size_t pos = line.find(' ');
    const std::string_view type = line.substr(0, pos);
    if (type.empty()) {
        throw InputError("report record without a type");
    }
    r.type = decode(type);
    if (encode(r.type) != type) {
        throw InputError("non-canonical record type");
    }
    while (pos != std::string_view::npos) {
        const std::size_t start = pos + 1;
        pos = line.find(' ', start);
        const std::string_view token = line.substr(start, pos == std::string_view::npos
                                                              ? std::string_view::npos
                                                              : pos - start);
        const std::size_t eq = token.find('=');
        if (eq == std::string_view::npos || eq == 0) {
            throw InputError("malformed field '" + std::string(token) + "'");
        }
        std::string key = decode(token.substr(0, eq));
        if (encode(key) != token.substr(0, eq)) {
            throw InputError("non-canonical field name");
        }
        r.fields.emplace_back(std::move(key), parse_value(token.substr(eq + 1)));
    }
    return r;
}

ReportDocument::ReportDocument(std::string command) {
    add("report").add("schema", std::string(kReportSchema)).add("command", std::move(command));
}

Record& ReportDocument::header() {
    if (records_.empty()) {
        throw InputError("report document has no header");
    }
    return records_.front();
}

Record& ReportDocument::add(std::string type) {
    records_.push_back(Record{std::move(type), {}});
    return records_.back();
}

std::vector<const Record*> ReportDocument::find(std::string_view type) const {
    std::vector<const Record*> out;
    for (const auto& r : records_) {
        if (r.type == type) out.push_back(&r);
    }
    return out;
}

const Record& ReportDocument::first(std::string_view type) const {
    for (const auto& r : records_) {
        if (r.type == type) return r;
    }
    throw InputError("report has no '" + std::string(type) + "' record");
}

std::string ReportDocument::emit() const {
    std::string out;
    for (const auto& r : records_) {
        out += r.emit();
        out += '\n';
    }
    return out;
}

ReportDocument ReportDocument::parse(std::string_view text) {
    ReportDocument doc;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            throw InputError("report must end with a newline");
        }
        doc.records_.push_back(Record::parse(text.substr(start, end - start)));
        start = end + 1;
    }
    if (doc.records_.empty() || doc.records_.front().type != "report") {
        throw InputError("report must start with a 'report' header record");
    }
    return doc;
}

}  // namespace benford
