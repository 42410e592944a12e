#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "monconv/harness.hpp"

using namespace monconv;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<Json> lines(const std::string& text) {
    std::vector<Json> v;
    std::istringstream is(text);
    std::string l;
    while (std::getline(is, l))
        if (!l.empty()) v.push_back(Json::parse(l));
    return v;
}

std::size_t count_status(const std::string& text, const std::string& status) {
    std::size_t c = 0;
    for (const auto& j : lines(text)) c += j.value("status", "") == status;
    return c;
}

fs::path temp_file(const std::string& name, const std::string& content) {
    const fs::path p = fs::temp_directory_path() / ("monconv_test_" + name);
    std::ofstream(p) << content;
    return p;
}

}  // namespace

TEST_CASE("exponents") {
    const Run r = run({"exponents", "--m", "4"});
    REQUIRE(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["s"].get<double>() == doctest::Approx((3 + std::sqrt(5.0)) / 2));
    CHECK(j["sigma"].get<double>() == doctest::Approx(0.375));
    CHECK(j["q"].get<double>() == doctest::Approx(8.0 / 7.0));
    CHECK(j.contains("theta"));
}

TEST_CASE("verify tetra batch") {
    const Run r = run({"verify", "--check", "tetra", "--r", "1.5", "--M", "6", "--N", "32", "--eps", "1", "--trials",
                       "100", "--seed", "42"});
    CHECK(r.code == 0);
    CHECK(lines(r.out).size() == 100);
    CHECK(count_status(r.out, "Verified") == 100);
}

TEST_CASE("precondition failures exit with 2") {
    const auto inc = temp_file("inc.txt", "0.1 0.2 0.3\n");
    const Run r = run({"verify", "--check", "tetra", "--vector-file", inc.string(), "--M", "2", "--N", "3"});
    CHECK(r.code == cli::kExitUsage);
    CHECK(r.err.find("nonincreasing") != std::string::npos);
    CHECK(run({"verify", "--check", "nope"}).code == cli::kExitUsage);
    CHECK(run({"verify"}).code == cli::kExitUsage);
    CHECK(run({"frobnicate"}).code == cli::kExitUsage);
    CHECK(run({"verify", "--check", "even", "--M", "3"}).code == cli::kExitUsage);
    CHECK(run({"exponents", "--m", "3", "--format", "xml"}).code == cli::kExitUsage);
}

TEST_CASE("budget errors name the offending count") {
    const Run r = run({"verify", "--check", "signs", "--m", "12", "--n-grid", "40", "--trials", "1"});
    CHECK(r.code == cli::kExitUsage);
    CHECK(r.err.find("budget") != std::string::npos);
}

TEST_CASE("output is byte-deterministic and written atomically") {
    const std::vector<std::string> args = {"verify", "--check", "bds", "--m", "2", "--n", "3", "--trials", "3",
                                           "--r", "1.5", "--restarts", "6"};
    const Run a = run(args);
    const Run b = run(args);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);

    const fs::path out = fs::temp_directory_path() / "monconv_test_report.jsonl";
    fs::remove(out);
    auto with_out = args;
    with_out.insert(with_out.end(), {"--output", out.string()});
    const Run c = run(with_out);
    CHECK(c.code == 0);
    CHECK(c.out.empty());
    std::ifstream in(out);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == a.out);
    CHECK_FALSE(fs::exists(out.string() + ".tmp"));
}

TEST_CASE("formats") {
    const Run csv = run({"verify", "--check", "even", "--M", "2", "--N", "4", "--trials", "2", "--format", "csv"});
    REQUIRE(csv.code == 0);
    CHECK(csv.out.rfind("schema,check_name,params,", 0) == 0);
    const Run pretty = run({"exponents", "--m", "3", "--format", "pretty"});
    CHECK(pretty.out.find("q=1.2") != std::string::npos);
    const Run chi = run({"chi", "--m", "2", "--n-grid", "2,3,4", "--trials", "1", "--format", "csv"});
    REQUIRE(chi.code == 0);
    CHECK(chi.out.rfind("n,estimate,fitted_exponent,predicted_exponent\n2,", 0) == 0);
}

TEST_CASE("merge") {
    auto make = [](const std::string& name, std::uint64_t seed, Status st) {
        InequalityReport r;
        r.check_name = name;
        r.seed = seed;
        r.status = st;
        return dump_json(report_to_json(r)) + "\n";
    };
    const auto a = temp_file("a.jsonl", make("tetra", 3, Status::verified) + make("bds", 9, Status::violated));
    const auto b = temp_file("b.jsonl", make("bds", 1, Status::verified) + make("tetra", 2, Status::violated));

    const Run single = run({"merge", a.string()});
    CHECK(single.code == cli::kExitViolated);
    const auto m1 = temp_file("m1.jsonl", single.out);
    CHECK(run({"merge", m1.string()}).out == single.out);

    const Run both = run({"merge", a.string(), b.string()});
    const auto recs = lines(both.out);
    REQUIRE(recs.size() == 4);
    CHECK(recs[0]["check_name"] == "bds");
    CHECK(recs[0]["seed"] == 1);
    CHECK(recs[1]["seed"] == 9);
    CHECK(recs[2]["check_name"] == "tetra");
    CHECK(recs[2]["seed"] == 2);
    CHECK(count_status(both.out, "Violated") ==
          count_status(run({"merge", a.string()}).out, "Violated") + count_status(run({"merge", b.string()}).out, "Violated"));

    const auto bad = temp_file("bad.jsonl", R"({"schema":"v0","check_name":"x"})" "\n");
    CHECK(run({"merge", a.string(), bad.string()}).code == cli::kExitUsage);
}

TEST_CASE("fit, membership, multiplier, norms") {
    const Run f = run({"fit", "--points", "2:8,4:64,8:512"});
    REQUIRE(f.code == 0);
    CHECK(Json::parse(f.out)["exponent"].get<double>() == doctest::Approx(3.0));

    const Run m = run({"membership", "--family", "telescoping", "--r", "2"});
    REQUIRE(m.code == 0);
    CHECK(Json::parse(m.out)["verdict"] == "inside");

    const Run h = run({"membership", "--family", "harmonic", "--grid", "16,128,1024,8192,65536"});
    CHECK(Json::parse(h.out)["verdict"] == "outside");

    const Run mult = run({"multiplier", "--grid", "64,128,256"});
    REQUIRE(mult.code == 0);
    CHECK(lines(mult.out).size() == 4);

    const auto v = temp_file("v.txt", "3, 4");
    const Run n = run({"norms", "--vector-file", v.string(), "--r", "2"});
    REQUIRE(n.code == 0);
    CHECK(Json::parse(n.out)["ell_r"].get<double>() == doctest::Approx(5.0));
}
