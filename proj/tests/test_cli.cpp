#include "benford/commands.hpp"
#include "benford/conformance.hpp"
#include "benford/entropy.hpp"
#include "benford/report.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace benford;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

ReportDocument records(std::vector<std::string> args) {
    args.insert(args.begin(), {"--format", "records"});
    const auto r = run(args);
    REQUIRE_MESSAGE(r.code == 0, r.err);
    return ReportDocument::parse(r.out);
}

class TempFile {
public:
    TempFile(const std::string& name, const std::string& content)
        : path_(std::filesystem::temp_directory_path() / name) {
        std::ofstream(path_) << content;
    }
    ~TempFile() { std::filesystem::remove(path_); }
    std::string path() const { return path_.string(); }

private:
    std::filesystem::path path_;
};

std::string fmt17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string csv_of(const std::vector<double>& values) {
    std::string s = "value\n";
    char buf[40];
    for (double v : values) {
        std::snprintf(buf, sizeof buf, "%.17g\n", v);
        s += buf;
    }
    return s;
}

}  // namespace

TEST_CASE("digits") {
    auto doc = records({"digits"});
    CHECK(doc.find("digit").size() == 9);
    CHECK(doc.find("digit")[0]->real("probability") == doctest::Approx(0.301029995664).epsilon(1e-12));

    doc = records({"digits", "--base", "2"});
    REQUIRE(doc.find("digit").size() == 1);
    CHECK(doc.find("digit")[0]->real("probability") == 1.0);

    doc = records({"digits", "--base", "16"});
    CHECK(std::abs(doc.first("sum").real("probability") - 1.0) <= 1e-12);

    const auto human = run({"digits"});
    CHECK(human.code == 0);
    CHECK(human.out.find("1.000000000000") != std::string::npos);
    CHECK(human.out.find("0.301029995664") != std::string::npos);

    CHECK(run({"digits", "--base", "1"}).code == kExitUsage);
    CHECK(run({"digits", "--base", "ten"}).code == kExitUsage);
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"frobnicate"}).code == kExitUsage);
    CHECK(run({"--format", "xml", "digits"}).code == kExitUsage);
    CHECK(run({"--help"}).code == kExitOk);
    CHECK(run({"sequence", "--kind", "geometric", "--ratio", "10"}).code == kExitUsage);
    CHECK(run({"sequence", "--kind", "factorial", "-n", "10001"}).code == kExitUsage);
    CHECK(run({"wrap", "--dist", "mixture", "--mixture", "0.5:0:1"}).code == kExitUsage);
    CHECK(run({"wrap", "--mixture", "a:b:c"}).code == kExitUsage);
}

TEST_CASE("fit") {
    SUBCASE("seeded NB samples") {
        TempFile f("benford_cli_nb.csv", csv_of(sample_nb(100000, Base(10), 31)));
        const auto doc = records({"fit", f.path()});
        CHECK(doc.first("conformance").real("chi_square_pvalue") > 0.01);
        CHECK(doc.first("conformance").integer("n_skipped_nonpositive") == 0);
        CHECK(doc.first("conformance").integer("n_skipped_nonfinite") == 0);
        CHECK(doc.find("histogram").size() == 9);
    }
    SUBCASE("powers of two") {
        std::vector<double> sig;
        for (const auto& d : gen_sequence(SequenceKind::pow2(), 100000, Base(10))) {
            sig.push_back(d.significand);
        }
        TempFile f("benford_cli_pow2.csv", csv_of(sig));
        CHECK(records({"fit", f.path()}).first("conformance").real("tv_distance") < 0.005);
    }
    SUBCASE("only zeros") {
        TempFile f("benford_cli_zeros.csv", "value\n0\n0\n0\n");
        const auto r = run({"fit", f.path()});
        CHECK(r.code == kExitData);
        CHECK_FALSE(r.err.empty());
    }
    SUBCASE("missing file names the path") {
        const auto r = run({"fit", "/no/such/benford.csv"});
        CHECK(r.code == kExitData);
        CHECK(r.err.find("/no/such/benford.csv") != std::string::npos);
    }
    SUBCASE("missing column") {
        TempFile f("benford_cli_col.csv", "a,b\n1,2\n");
        CHECK(run({"fit", f.path(), "--column", "c"}).code == kExitData);
    }
    SUBCASE("negatives: skip versus absolute value") {
        std::string body = "id,amount\n";
        const auto draws = sample_nb(500, Base(10), 5);
        for (std::size_t i = 0; i < draws.size(); ++i) {
            body += std::to_string(i) + "," + (i % 3 == 0 ? "-" : "") + std::to_string(draws[i]) + "\n";
        }
        body += "x,oops\n";
        TempFile f("benford_cli_neg.csv", body);
        const auto skip = records({"fit", f.path(), "--column", "amount"}).first("conformance");
        const auto fold =
            records({"fit", f.path(), "--column", "amount", "--absolute-value"}).first("conformance");
        const auto skipped = [](const Record& r) {
            return r.integer("n_skipped_nonpositive") + r.integer("n_skipped_nonfinite");
        };
        CHECK(skipped(skip) > skipped(fold));
        CHECK(skip.integer("n_skipped_nonpositive") == 167);
        CHECK(fold.integer("n_skipped_nonpositive") == 0);
        CHECK(fold.integer("n_skipped_nonfinite") == 1);
        CHECK(skip.integer("total") == 501);
    }
    SUBCASE("json lines") {
        std::string body;
        for (double v : sample_nb(200, Base(10), 6)) body += "{\"v\": " + std::to_string(v) + "}\n";
        TempFile f("benford_cli.jsonl", body);
        const auto doc = records({"fit", f.path(), "--column", "v"});
        CHECK(doc.first("report").text("input_format") == "jsonl");
        CHECK(doc.first("conformance").integer("n_used") == 200);
    }
}

TEST_CASE("wrap") {
    const auto doc = records({"wrap", "--M", "0", "--s", "4"});
    CHECK(doc.first("distance").real("tv_distance") < 1e-3);
    CHECK(doc.find("point").size() == kDistanceGridPoints);

    const auto r = run({"wrap", "--s", "1e-7"});
    CHECK(r.code == kExitUsage);
    CHECK(r.err.find("scale") != std::string::npos);

    // M and M + ln 10 give the same table
    const auto a = records({"wrap", "--M", "0.25", "--s", "0.6", "--grid-points", "256"});
    const auto b = records({"wrap", "--M", fmt17(0.25 + std::log(10.0)), "--s", "0.6",
                            "--grid-points", "256"});
    REQUIRE(a.records().size() == b.records().size());
    for (std::size_t i = 1; i < a.records().size(); ++i) {
        CHECK(a.records()[i].emit() == b.records()[i].emit());
    }

    const auto mix = records({"wrap", "--mixture", "0.5:0:4,0.5:1:4", "--grid-points", "128"});
    CHECK(mix.first("report").text("dist") == "mixture");
    CHECK(mix.first("distance").real("tv_distance") < 1e-3);
}

TEST_CASE("entropy") {
    auto e = records({"entropy", "--dist", "nb"}).first("entropy");
    CHECK(e.real("entropy") == doctest::Approx(1.985324991).epsilon(1e-9));
    CHECK(std::abs(e.real("entropy") - nb_entropy_closed(Base(10))) <= 1e-6);
    CHECK(e.boolean("constraint_met"));

    e = records({"entropy", "--dist", "lognormal", "--M", "0", "--s", "1"}).first("entropy");
    CHECK(e.real("entropy") <= e.real("gibbs_bound"));

    e = records({"entropy", "--dist", "uniform"}).first("entropy");
    CHECK(e.real("entropy") == doctest::Approx(2.197224577).epsilon(1e-9));

    e = records({"entropy", "--mixture", "0.3:0:0.5,0.7:1:0.8"}).first("entropy");
    CHECK(e.real("entropy") <= e.real("gibbs_bound") + e.real("quadrature_error_estimate"));
}

TEST_CASE("sequence") {
    auto c = records({"sequence", "--kind", "pow2", "-n", "100000"}).first("conformance");
    CHECK(c.real("tv_distance") < 0.005);
    c = records({"sequence", "--kind", "factorial", "-n", "10000"}).first("conformance");
    CHECK(c.integer("n_used") == 10000);
    c = records({"sequence", "--kind", "fibonacci", "-n", "100000"}).first("conformance");
    CHECK(c.real("tv_distance") < 0.005);
    const auto g = records({"sequence", "--kind", "geometric", "--ratio", "1.07", "-n", "2000"});
    CHECK(g.first("report").real("ratio") == 1.07);
}

TEST_CASE("sample writes seeded CSV") {
    const auto a = run({"--seed", "4", "sample", "--dist", "nb", "-n", "10"});
    const auto b = run({"--seed", "4", "sample", "--dist", "nb", "-n", "10"});
    const auto c = run({"--seed", "5", "sample", "--dist", "nb", "-n", "10"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out != c.out);
    CHECK(a.out.rfind("value\n", 0) == 0);
    CHECK(std::count(a.out.begin(), a.out.end(), '\n') == 11);
}
