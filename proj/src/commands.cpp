#include "benford/commands.hpp"

#include "benford/conformance.hpp"
#include "benford/entropy.hpp"
#include "benford/error.hpp"
#include "benford/nb.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>
#include <sstream>

namespace benford {

namespace {

void add_conformance(ReportDocument& doc, const ConformanceReport& r, std::size_t total) {
    const NBDistribution nb(r.histogram.base());
    for (int d = 1; d <= r.histogram.base().value() - 1; ++d) {
        doc.add("histogram")
            .add("digit", std::int64_t{d})
            .add("count", static_cast<std::int64_t>(r.histogram.count(d)))
            .add("frequency", r.histogram.frequency(d))
            .add("expected", nb.first_digit_prob(d));
    }
    doc.add("conformance")
        .add("total", static_cast<std::int64_t>(total))
        .add("n_used", static_cast<std::int64_t>(r.histogram.total()))
        .add("n_skipped_nonpositive", static_cast<std::int64_t>(r.n_skipped_nonpositive))
        .add("n_skipped_nonfinite", static_cast<std::int64_t>(r.n_skipped_nonfinite))
        .add("chi_square", r.chi_square)
        .add("chi_square_dof", std::int64_t{r.chi_square_dof})
        .add("chi_square_pvalue", r.chi_square_pvalue)
        .add("ks_stat", r.ks_stat)
        .add("tv_distance", r.tv_distance);
}

std::string format_fixed(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12f", v);
    return buf;
}

std::string human_value(const ReportValue& v, bool fixed) {
    if (const auto* d = std::get_if<double>(&v)) {
        return fixed ? format_fixed(*d) : format_real(*d);
    }
    if (const auto* i = std::get_if<std::int64_t>(&v)) return std::to_string(*i);
    if (const auto* b = std::get_if<bool>(&v)) return *b ? "true" : "false";
    return std::get<std::string>(v);
}

bool same_shape(const Record& a, const Record& b) {
    if (a.type != b.type || a.fields.size() != b.fields.size()) return false;
    for (std::size_t i = 0; i < a.fields.size(); ++i) {
        if (a.fields[i].first != b.fields[i].first) return false;
    }
    return true;
}

LogNormalParams lognormal_from(double M, double s) { return LogNormalParams(M, s); }

}  // namespace

MixtureParams parse_mixture(const std::string& spec) {
    std::vector<MixtureComponent> parts;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::vector<double> nums;
        std::stringstream is(item);
        std::string field;
        while (std::getline(is, field, ':')) {
            const auto v = parse_real(field);
            if (!v || !std::isfinite(*v)) {
                throw DomainError("bad number '" + field + "' in mixture spec");
            }
            nums.push_back(*v);
        }
        if (nums.size() != 3) {
            throw DomainError("mixture component '" + item + "' must be weight:M:s");
        }
        parts.push_back({nums[0], LogNormalParams(nums[1], nums[2])});
    }
    return MixtureParams(std::move(parts));
}

ReportDocument cmd_digits(int base_value) {
    const Base base(base_value);
    const NBDistribution nb(base);
    ReportDocument doc("digits");
    doc.header().add("base", std::int64_t{base_value});
    double sum = 0.0;
    for (int d = 1; d <= base_value - 1; ++d) {
        const double p = nb.first_digit_prob(d);
        sum += p;
        doc.add("digit").add("d", std::int64_t{d}).add("probability", p);
    }
    doc.add("sum").add("probability", sum);
    return doc;
}

ReportDocument cmd_fit(const IngestOptions& options) {
    const Base base(options.base);
    const auto values = ingest(options);
    const auto report = analyze_conformance(values, base);

    ReportDocument doc("fit");
    doc.header()
        .add("base", std::int64_t{options.base})
        .add("input", options.path.string())
        .add("input_format", std::string(options.format == InputFormat::Csv ? "csv" : "jsonl"))
        .add("column", options.column)
        .add("absolute_value", options.absolute_value);
    add_conformance(doc, report, values.size());
    return doc;
}

ReportDocument cmd_wrap(const WrapSpec& spec, int base_value, double tol, std::size_t grid_points) {
    const Base base(base_value);
    const NBDistribution nb(base);
    ReportDocument doc("wrap");
    auto& header = doc.header();
    header.add("base", std::int64_t{base_value}).add("tol", tol).add("dist", spec.dist);

    std::function<double(double)> pdf;
    if (spec.dist == "lognormal") {
        const auto p = lognormal_from(spec.M, spec.s);
        header.add("M", p.M).add("s", p.s);
        pdf = [p, base, tol](double x) { return wrapped_lognormal_pdf(x, p, base, tol); };
    } else if (spec.dist == "mixture") {
        auto mix = parse_mixture(spec.mixture);
        header.add("mixture", spec.mixture);
        pdf = [mix, base, tol](double x) { return wrap_mixture_pdf(x, mix, base, tol); };
    } else {
        throw DomainError("wrap supports --dist lognormal or mixture, got '" + spec.dist + "'");
    }
    header.add("grid_points", static_cast<std::int64_t>(grid_points));

    for (double x : log_spaced_grid(base, grid_points)) {
        const double w = pdf(x);
        const double r = nb.pdf(x);
        doc.add("point")
            .add("x", x)
            .add("wrapped_pdf", w)
            .add("nb_pdf", r)
            .add("difference", w - r);
    }
    const auto dist = distance_to_nb(pdf, base, grid_points);
    doc.add("distance").add("sup_distance", dist.sup_distance).add("tv_distance", dist.tv_distance);
    return doc;
}

ReportDocument cmd_entropy(const EntropySpec& spec, int base_value, double tol) {
    const Base base(base_value);
    ReportDocument doc("entropy");
    auto& header = doc.header();
    header.add("base", std::int64_t{base_value}).add("tol", tol).add("dist", spec.dist);

    SignificandDensity pdf;
    if (spec.dist == "nb") {
        const NBDistribution nb(base);
        pdf = [nb](double x) { return nb.pdf(x); };
    } else if (spec.dist == "uniform") {
        const double height = 1.0 / (base.real() - 1.0);
        pdf = [height](double) { return height; };
    } else if (spec.dist == "lognormal") {
        const auto p = lognormal_from(spec.M, spec.s);
        header.add("M", p.M).add("s", p.s);
        pdf = [p, base, tol](double x) { return wrapped_lognormal_pdf(x, p, base, tol); };
    } else if (spec.dist == "mixture") {
        auto mix = parse_mixture(spec.mixture);
        header.add("mixture", spec.mixture);
        pdf = [mix, base, tol](double x) { return wrap_mixture_pdf(x, mix, base, tol); };
    } else {
        throw DomainError("unknown entropy distribution '" + spec.dist + "'");
    }

    const auto r = analyze_entropy(pdf, base);
    doc.add("entropy")
        .add("entropy", r.entropy)
        .add("mean_log", r.mean_log)
        .add("gibbs_bound", r.gibbs_bound)
        .add("constraint_met", r.constraint_met)
        .add("quadrature_error_estimate", r.quadrature_error_estimate)
        .add("nb_entropy", nb_entropy_closed(base));
    return doc;
}

ReportDocument cmd_sequence(const SequenceSpec& spec, int base_value) {
    const Base base(base_value);
    SequenceKind kind;
    if (spec.kind == "pow2") {
        kind = SequenceKind::pow2();
    } else if (spec.kind == "factorial") {
        kind = SequenceKind::factorial();
    } else if (spec.kind == "fibonacci") {
        kind = SequenceKind::fibonacci();
    } else if (spec.kind == "geometric") {
        kind = SequenceKind::geometric(spec.ratio);
    } else {
        throw DomainError("unknown sequence kind '" + spec.kind + "'");
    }
    const auto terms = gen_sequence(kind, spec.n, base);
    const auto report = analyze_conformance(terms, base);

    ReportDocument doc("sequence");
    auto& header = doc.header();
    header.add("base", std::int64_t{base_value}).add("kind", spec.kind);
    if (kind.type == SequenceKind::Type::Geometric) header.add("ratio", spec.ratio);
    header.add("n", static_cast<std::int64_t>(spec.n));
    add_conformance(doc, report, terms.size());
    return doc;
}

std::string render_human(const ReportDocument& doc) {
    const auto& records = doc.records();
    const bool fixed = !records.empty() && records.front().fields.size() > 1 &&
                       records.front().at("command") == ReportValue{std::string("digits")};
    std::ostringstream out;
    std::size_t i = 0;
    while (i < records.size()) {
        std::size_t j = i + 1;
        while (j < records.size() && same_shape(records[i], records[j])) ++j;
        const auto& first = records[i];

        if (j - i == 1) {
            out << first.type << '\n';
            std::size_t width = 0;
            for (const auto& [k, v] : first.fields) width = std::max(width, k.size());
            for (const auto& [k, v] : first.fields) {
                out << "  " << k << std::string(width - k.size() + 2, ' ')
                    << human_value(v, fixed) << '\n';
            }
        } else {
            std::vector<std::vector<std::string>> cells;
            std::vector<std::size_t> widths;
            for (const auto& [k, v] : first.fields) widths.push_back(k.size());
            for (std::size_t r = i; r < j; ++r) {
                auto& row = cells.emplace_back();
                for (std::size_t c = 0; c < records[r].fields.size(); ++c) {
                    row.push_back(human_value(records[r].fields[c].second, fixed));
                    widths[c] = std::max(widths[c], row.back().size());
                }
            }
            out << first.type << '\n';
            out << ' ';
            for (std::size_t c = 0; c < first.fields.size(); ++c) {
                const auto& k = first.fields[c].first;
                out << ' ' << std::string(widths[c] - k.size(), ' ') << k;
            }
            out << '\n';
            for (const auto& row : cells) {
                out << ' ';
                for (std::size_t c = 0; c < row.size(); ++c) {
                    out << ' ' << std::string(widths[c] - row[c].size(), ' ') << row[c];
                }
                out << '\n';
            }
        }
        i = j;
    }
    return out.str();
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Newcomb-Benford first-digit statistics, wrapped densities and conformance tests",
                 "benford"};
    app.require_subcommand(1);
    app.fallthrough();

    int base = 10;
    double tol = kDefaultWrapTol;
    std::uint64_t seed = 1;
    std::string format = "human";
    app.add_option("--base", base, "Radix b >= 2")->capture_default_str();
    app.add_option("--tol", tol, "Truncation tolerance for wrapped series")->capture_default_str();
    app.add_option("--seed", seed, "Seed for the samplers")->capture_default_str();
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"human", "records"}))
        ->capture_default_str();

    auto* digits = app.add_subcommand("digits", "First-digit probabilities log_b(1 + 1/d)");

    IngestOptions ingest_opts;
    std::string input_format;
    auto* fit = app.add_subcommand(
        "fit",
        "Conformance of a data column to the first-digit law.\n"
        "KS critical values for the reported statistic: 1.36/sqrt(n) at 5%, 1.63/sqrt(n) at 1%.");
    fit->add_option("input", ingest_opts.path, "CSV (with header) or JSON-lines file")->required();
    fit->add_option("--column", ingest_opts.column, "Column name or zero-based index")
        ->capture_default_str();
    fit->add_option("--input-format", input_format, "csv or jsonl (default: by extension)")
        ->check(CLI::IsMember({"csv", "jsonl"}));
    fit->add_flag("--absolute-value", ingest_opts.absolute_value,
                  "Fold negative values onto positives instead of skipping them");

    WrapSpec wrap_spec;
    std::size_t grid_points = kDistanceGridPoints;
    auto* wrap = app.add_subcommand("wrap", "Wrapped log-normal density against the NB density");
    wrap->add_option("--dist", wrap_spec.dist)
        ->check(CLI::IsMember({"lognormal", "mixture"}))
        ->capture_default_str();
    wrap->add_option("--M", wrap_spec.M, "Log-normal location")->capture_default_str();
    wrap->add_option("--s", wrap_spec.s, "Log-normal scale")->capture_default_str();
    wrap->add_option("--mixture", wrap_spec.mixture, "Components as w:M:s,w:M:s,...");
    wrap->add_option("--grid-points", grid_points)->capture_default_str()->check(CLI::PositiveNumber);

    EntropySpec entropy_spec;
    auto* entropy_cmd = app.add_subcommand("entropy", "Entropy, mean log and Gibbs bound");
    entropy_cmd->add_option("--dist", entropy_spec.dist)
        ->check(CLI::IsMember({"nb", "uniform", "lognormal", "mixture"}))
        ->capture_default_str();
    entropy_cmd->add_option("--M", entropy_spec.M)->capture_default_str();
    entropy_cmd->add_option("--s", entropy_spec.s)->capture_default_str();
    entropy_cmd->add_option("--mixture", entropy_spec.mixture, "Components as w:M:s,w:M:s,...");

    SequenceSpec seq_spec;
    auto* sequence = app.add_subcommand("sequence", "Conformance of a deterministic sequence");
    sequence->add_option("--kind", seq_spec.kind)
        ->check(CLI::IsMember({"pow2", "factorial", "fibonacci", "geometric"}))
        ->capture_default_str();
    sequence->add_option("--ratio", seq_spec.ratio, "Ratio for --kind geometric");
    sequence->add_option("-n,--n", seq_spec.n, "Number of terms")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);

    std::string sample_dist = "nb";
    std::size_t sample_n = 100000;
    double sample_M = 0.0;
    double sample_s = 1.0;
    std::string sample_components;
    auto* sample = app.add_subcommand("sample", "Write seeded samples as a one-column CSV");
    sample->add_option("--dist", sample_dist)
        ->check(CLI::IsMember({"nb", "lognormal", "mixture"}))
        ->capture_default_str();
    sample->add_option("-n,--n", sample_n)->capture_default_str()->check(CLI::PositiveNumber);
    sample->add_option("--M", sample_M)->capture_default_str();
    sample->add_option("--s", sample_s)->capture_default_str();
    sample->add_option("--mixture", sample_components);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        ReportDocument doc;
        if (*digits) {
            doc = cmd_digits(base);
        } else if (*fit) {
            ingest_opts.base = base;
            if (input_format.empty()) {
                const auto ext = ingest_opts.path.extension().string();
                input_format = (ext == ".jsonl" || ext == ".ndjson") ? "jsonl" : "csv";
            }
            ingest_opts.format = input_format == "jsonl" ? InputFormat::JsonLines : InputFormat::Csv;
            doc = cmd_fit(ingest_opts);
        } else if (*wrap) {
            if (!wrap_spec.mixture.empty() && wrap->count("--dist") == 0) wrap_spec.dist = "mixture";
            doc = cmd_wrap(wrap_spec, base, tol, grid_points);
        } else if (*entropy_cmd) {
            if (!entropy_spec.mixture.empty() && entropy_cmd->count("--dist") == 0) {
                entropy_spec.dist = "mixture";
            }
            doc = cmd_entropy(entropy_spec, base, tol);
        } else if (*sequence) {
            doc = cmd_sequence(seq_spec, base);
        } else if (*sample) {
            std::vector<double> values;
            if (sample_dist == "nb") {
                values = sample_nb(sample_n, Base(base), seed);
            } else if (sample_dist == "lognormal") {
                values = sample_lognormal(sample_n, LogNormalParams(sample_M, sample_s), seed);
            } else {
                values = sample_mixture(sample_n, parse_mixture(sample_components), seed);
            }
            out << "value\n";
            char buf[40];
            for (double v : values) {
                std::snprintf(buf, sizeof buf, "%.17g\n", v);
                out << buf;
            }
            return kExitOk;
        }
        out << (format == "records" ? doc.emit() : render_human(doc));
        return kExitOk;
    } catch (const Error& e) {
        err << "benford: " << e.what() << '\n';
        switch (e.category()) {
            case ErrorCategory::Usage:
                return kExitUsage;
            case ErrorCategory::Data:
                return kExitData;
            case ErrorCategory::Numeric:
                return kExitNumeric;
        }
        return kExitNumeric;
    } catch (const std::exception& e) {
        err << "benford: " << e.what() << '\n';
        return kExitNumeric;
    }
}

}  // namespace benford
