#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "dlab/cli.hpp"

namespace {

int run_cli(const std::vector<std::string>& args, std::string* out_s = nullptr,
            std::string* err_s = nullptr) {
    std::ostringstream out, err;
    const int rc = dlab::cli::run(args, out, err);
    if (out_s) *out_s = out.str();
    if (err_s) *err_s = err.str();
    return rc;
}

std::vector<std::string> lines_of(const std::string& s) {
    std::vector<std::string> lines;
    std::istringstream in(s);
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    return lines;
}

}  // namespace

TEST_CASE("poly prints a single polynomial bare") {
    std::string out, err;
    CHECK(run_cli({"poly", "--family", "D", "--n", "2", "--h", "1"}, &out, &err) == 0);
    CHECK(out == "1 + 6*x + 6*x^2\n");
    CHECK(err.empty());
}

TEST_CASE("poly labels rows when a range is swept") {
    std::string out;
    CHECK(run_cli({"poly", "--family", "S", "--n", "1..2"}, &out) == 0);
    const auto lines = lines_of(out);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] == "S n=1 h=1 m=1: 1 + 1*x");
    CHECK(lines[1] == "S n=2 h=1 m=1: 1 + 3*x + 2*x^2");
}

TEST_CASE("poly jsonl carries coefficients as decimal strings") {
    std::string out;
    CHECK(run_cli({"poly", "--family", "D", "--n", "1..3", "--h", "2", "--format", "jsonl"},
                  &out) == 0);
    const auto lines = lines_of(out);
    REQUIRE(lines.size() == 3);
    for (const auto& line : lines) {
        const auto j = nlohmann::json::parse(line);
        CHECK(j["family"] == "D");
        CHECK(j["h"] == 2);
        CHECK(j["degree"] == j["n"]);
        CHECK(j["coeffs"].is_array());
        CHECK(j["coeffs"].size() == static_cast<std::size_t>(j["n"].get<long long>() + 1));
        CHECK(j["coeffs"][0] == "1");
        CHECK(j["text"].is_string());
    }
}

TEST_CASE("coeff prints pinned table rows") {
    std::string out;
    CHECK(run_cli({"coeff", "--table", "newton", "--l", "2", "--a", "1"}, &out) == 0);
    CHECK(out == "newton l=2 a=1: 6 1\n");
    CHECK(run_cli({"coeff", "--table", "product", "--indices", "1,2"}, &out) == 0);
    CHECK(out == "product indices=1,2: 0 0 6 9\n");
    CHECK(run_cli({"coeff", "--table", "scaled-power-product", "--indices", "1", "--h", "2"},
                  &out) == 0);
    CHECK(out == "scaled-power-product indices=1 h=2: 0 1 3\n");
}

TEST_CASE("verify emits one jsonl record per spec") {
    std::string out;
    CHECK(run_cli({"verify", "--check", "delannoy-weighted", "--n", "1..10", "--h", "1..2",
                   "--m", "1..2", "--a", "1..2", "--eps", "both", "--format", "jsonl"},
                  &out) == 0);
    const auto lines = lines_of(out);
    REQUIRE(lines.size() == 160);
    for (const auto& line : lines) {
        const auto j = nlohmann::json::parse(line);
        CHECK(j["check"] == "delannoy-weighted");
        CHECK(j["family"] == "D");
        CHECK(j["pass"] == true);
        CHECK(j["witness"].is_null());
        CHECK(j["modulus"].is_string());
        CHECK(j["quotient_degree"].is_number());
        const long long n = j["n"].get<long long>();
        CHECK(n >= 1);
        CHECK(n <= 10);
    }
}

TEST_CASE("verify pretty output pins the modulus and degree") {
    std::string out;
    CHECK(run_cli({"verify", "--check", "schroder-weighted", "--n", "4", "--h", "1", "--m",
                   "1", "--a", "1", "--eps", "plus"},
                  &out) == 0);
    CHECK(out == "[ ok ] schroder-weighted family=S n=4 h=1 m=1 a=1 eps=1 modulus=60 deg=4\n");
    CHECK(run_cli({"verify", "--check", "order-one", "--family", "S", "--n", "3", "--h", "1",
                   "--m", "2", "--eps", "plus"},
                  &out) == 0);
    CHECK(out == "[ ok ] order-one family=S n=3 h=1 m=2 a=1 eps=1 modulus=60 deg=6\n");
}

TEST_CASE("lemma sweeps the parity checks") {
    std::string out;
    CHECK(run_cli({"lemma", "--id", "diagonal-parity", "--J", "1..32"}, &out) == 0);
    const auto lines = lines_of(out);
    REQUIRE(lines.size() == 32);
    for (const auto& line : lines) CHECK(line.rfind("[ ok ] diagonal-parity J=", 0) == 0);
}

TEST_CASE("probe reports sharpness witnesses and exits 1") {
    std::string out;
    CHECK(run_cli({"probe", "--check", "delannoy-weighted", "--n", "2", "--h", "1", "--m", "1",
                   "--a", "1", "--eps", "plus"},
                  &out) == 1);
    const auto lines = lines_of(out);
    REQUIRE(lines.size() == 1);
    CHECK(lines[0].find("[FAIL] delannoy-weighted-full-modulus") == 0);
    CHECK(lines[0].find("modulus=24") != std::string::npos);
    CHECK(lines[0].find("index=0") != std::string::npos);
    CHECK(lines[0].find("value=36") != std::string::npos);
    // odd n passes the undivided modulus, so no witness and exit 0
    CHECK(run_cli({"probe", "--check", "delannoy-weighted", "--n", "3", "--h", "1", "--m", "1",
                   "--a", "1", "--eps", "plus"},
                  &out) == 0);
    CHECK(out.empty());
}

TEST_CASE("usage and domain errors exit 2") {
    std::string out, err;
    CHECK(run_cli({"bogus"}, &out, &err) == 2);
    CHECK(run_cli({"poly", "--family", "X", "--n", "1"}, &out, &err) == 2);
    CHECK(run_cli({"poly", "--family", "D"}, &out, &err) == 2);  // --n is required
    CHECK(run_cli({"poly", "--family", "D", "--n", "5..3"}, &out, &err) == 2);
    CHECK(!err.empty());
    CHECK(run_cli({"verify", "--check", "delannoy-alternating", "--eps", "plus", "--n", "2"},
                  &out, &err) == 2);
    CHECK(run_cli({"verify", "--check", "order-one", "--a", "2"}, &out, &err) == 2);
    CHECK(run_cli({"verify", "--check", "delannoy-weighted", "--family", "S", "--n", "2"},
                  &out, &err) == 2);
    CHECK(run_cli({"lemma", "--id", "no-such-check"}, &out, &err) == 2);
    CHECK(run_cli({"coeff", "--table", "newton", "--l", "0..x"}, &out, &err) == 2);
}

TEST_CASE("help exits 0") {
    std::string out;
    CHECK(run_cli({"--help"}, &out) == 0);
    CHECK(out.find("poly") != std::string::npos);
    CHECK(run_cli({"verify", "--help"}, &out) == 0);
    CHECK(out.find("--check") != std::string::npos);
}

TEST_CASE("output does not depend on the worker count") {
    const std::vector<std::string> base = {"verify",       "--check", "schroder-weighted",
                                           "--n",          "1..8",    "--h",
                                           "1..2",         "--m",     "1..2",
                                           "--a",          "1",       "--eps",
                                           "both",         "--format", "jsonl"};
    std::string one, four;
    auto with_jobs = [&](const std::string& jobs) {
        auto args = base;
        args.push_back("--jobs");
        args.push_back(jobs);
        return args;
    };
    CHECK(run_cli(with_jobs("1"), &one) == 0);
    CHECK(run_cli(with_jobs("4"), &four) == 0);
    CHECK(one == four);
    CHECK(lines_of(one).size() == 64);
}

TEST_CASE("fail-fast truncates at the lowest failing index, deterministically") {
    const std::vector<std::string> base = {"probe", "--check", "delannoy-weighted", "--n",
                                           "1..6",  "--h",     "1",    "--m", "1",
                                           "--a",   "1",       "--eps", "plus", "--ci"};
    std::string one, four, all;
    auto with_jobs = [&](const std::string& jobs) {
        auto args = base;
        args.push_back("--jobs");
        args.push_back(jobs);
        return args;
    };
    CHECK(run_cli(with_jobs("1"), &one) == 1);
    CHECK(run_cli(with_jobs("4"), &four) == 1);
    CHECK(one == four);
    REQUIRE(lines_of(one).size() == 1);
    CHECK(one.find(" n=2 ") != std::string::npos);
    // without --ci every even n is reported, in order
    std::vector<std::string> noci(base.begin(), base.end() - 1);
    CHECK(run_cli(noci, &all) == 1);
    const auto lines = lines_of(all);
    REQUIRE(lines.size() == 3);
    CHECK(lines[0].find(" n=2 ") != std::string::npos);
    CHECK(lines[1].find(" n=4 ") != std::string::npos);
    CHECK(lines[2].find(" n=6 ") != std::string::npos);
}

TEST_CASE("csv output starts with the report header") {
    std::string out;
    CHECK(run_cli({"verify", "--check", "prefix", "--family", "D", "--n", "1..3", "--h", "1",
                   "--m", "1", "--a", "1", "--eps", "plus", "--format", "csv"},
                  &out) == 0);
    const auto lines = lines_of(out);
    REQUIRE(lines.size() == 4);
    CHECK(lines[0] == "check,params,modulus,pass,witness_index,witness_value,quotient_degree");
    CHECK(lines[1] == "prefix,family=D;n=1;h=1;m=1;a=1;eps=1,1,true,,,-1");
}
