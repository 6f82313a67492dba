#pragma once

#include "benford/report.hpp"
#include "benford/ingest.hpp"
#include "benford/wrapping.hpp"

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace benford {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 2,
    kExitData = 3,
    kExitNumeric = 4,
};

/// Parses "w:M:s,w:M:s,..." into mixture parameters.
MixtureParams parse_mixture(const std::string& spec);

// Report builders behind each verb. They throw benford::Error subclasses.

ReportDocument cmd_digits(int base);
ReportDocument cmd_fit(const IngestOptions& options);

struct WrapSpec {
    std::string dist = "lognormal";  // lognormal | mixture
    double M = 0.0;
    double s = 1.0;
    std::string mixture;
};

ReportDocument cmd_wrap(const WrapSpec& spec, int base, double tol, std::size_t grid_points);

struct EntropySpec {
    std::string dist = "nb";  // nb | uniform | lognormal | mixture
    double M = 0.0;
    double s = 1.0;
    std::string mixture;
};

ReportDocument cmd_entropy(const EntropySpec& spec, int base, double tol);

struct SequenceSpec {
    std::string kind = "pow2";  // pow2 | factorial | fibonacci | geometric
    double ratio = 0.0;
    std::size_t n = 10000;
};

ReportDocument cmd_sequence(const SequenceSpec& spec, int base);

/// Human-readable rendering of a report: aligned tables for repeated records.
std::string render_human(const ReportDocument& doc);

/// Entry point shared by the executable and the tests. args excludes argv[0].
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace benford
