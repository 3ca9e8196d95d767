#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "cli_app.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    args.push_back("--quiet");
    const int code = primerecip::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("bit-census") {
    auto r = run({"bit-census", "--max-width", "5", "--mode", "constant"});
    CHECK(r.code == 0);
    CHECK(r.out == "width,zeros,ones,total\n2,1,3,4\n3,4,8,12\n4,10,14,24\n5,23,32,55\n");

    r = run({"bit-census", "--max-width", "2", "--mode", "variable"});
    CHECK(r.code == 0);
    CHECK(r.out == "width,zeros,ones,total\n2,1,3,4\n");

    r = run({"bit-census", "--max-width", "1"});
    CHECK(r.code == 2);
    CHECK(r.out.empty());

    r = run({"bit-census", "--max-width", "3", "--series"});
    CHECK(r.out == "width,ones_fraction\n2,0.75\n3,0.66666666666666663\n");
}

TEST_CASE("bit-census budget skips widths") {
    const auto r = run({"bit-census", "--max-width", "32", "--budget", "0.05"});
    CHECK(r.code == 4);
    CHECK(r.err.find("warning: skipping widths") != std::string::npos);
    CHECK(r.out.rfind("width,zeros,ones,total\n2,1,3,4\n", 0) == 0);
}

TEST_CASE("recip-census") {
    auto r = run({"recip-census", "--lo", "16", "--hi", "16"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "lo,hi,base,prime_count,zeros_exceed,ones_exceed,equal,max_length,excluded\n"
          "16,16,2,0,0,0,0,0,0\n");

    r = run({"recip-census", "--lo", "50000", "--hi", "60000", "--threads", "2"});
    CHECK(r.out ==
          "lo,hi,base,prime_count,zeros_exceed,ones_exceed,equal,max_length,excluded\n"
          "50000,60000,2,924,245,35,644,340,0\n");

    r = run({"recip-census", "--lo", "10", "--hi", "5"});
    CHECK(r.code == 2);
}

TEST_CASE("recip-census budget exceeded emits nothing") {
    const auto r = run({"recip-census", "--lo", "3", "--hi", "1000000", "--budget", "0.001"});
    CHECK(r.code == 4);
    CHECK(r.out.empty());
}

TEST_CASE("expand") {
    auto r = run({"expand", "--p", "7", "--base", "2", "--digits", "6"});
    CHECK(r.code == 0);
    CHECK(r.out == "001001\nperiod=3,max_length=false,half_complement=false\n");

    r = run({"expand", "--p", "7", "--base", "10", "--digits", "6", "--rule", "expansion"});
    CHECK(r.out == "142857\nperiod=6,max_length=true,half_complement=true\n");

    r = run({"expand", "--p", "7", "--base", "10", "--digits", "3", "--rule", "residue"});
    CHECK(r.out.rfind("326\n", 0) == 0);

    r = run({"expand", "--p", "17", "--base", "16"});
    CHECK(r.out == "0,15\nperiod=2,max_length=false,half_complement=true\n");

    r = run({"expand", "--p", "2", "--base", "2", "--digits", "4"});
    CHECK(r.code == 3);
    CHECK(r.err.find("terminating expansion") != std::string::npos);

    r = run({"expand", "--p", "9", "--base", "2"});
    CHECK(r.code == 2);

    r = run({"expand", "--p", "11", "--format", "json"});
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["digits"] == "0001011101");
    CHECK(j["period"] == 10);
    CHECK(j["max_length"] == true);
}

TEST_CASE("runs") {
    auto r = run({"runs", "--lo", "11", "--hi", "13", "--min-len", "1"});
    CHECK(r.code == 0);
    CHECK(r.out == "start_prime,end_prime,length,boundary_truncated\n");

    r = run({"runs", "--lo", "970000", "--hi", "971000", "--min-len", "6"});
    CHECK(r.out ==
          "start_prime,end_prime,length,boundary_truncated\n"
          "970261,970391,8,false\n970927,970969,6,false\n");

    r = run({"runs", "--lo", "970000", "--hi", "971000", "--min-len", "0"});
    CHECK(r.code == 2);
}

TEST_CASE("zeta") {
    auto r = run({"zeta", "--form", "sum", "--s", "1", "--cutoff", "4"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("s,cutoff_kind,cutoff,value,log_value\n1,terms,4,2.08333333333333", 0) == 0);

    r = run({"zeta", "--form", "mobius-sum", "--s", "1", "--cutoff", "6"});
    CHECK(r.out.find("\n1,terms,6,0.13333333333333") != std::string::npos);

    r = run({"zeta", "--form", "product", "--s", "2", "--cutoff", "1000000", "--format", "json"});
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["cutoff_kind"] == "prime_bound");
    CHECK(std::abs(j["value"].get<double>() - 0.60792710) < 1e-6);

    r = run({"zeta", "--form", "log", "--s", "1", "--cutoff", "2"});
    CHECK(r.out == "s,cutoff_kind,cutoff,value,log_value\n1,prime_bound,2,-0.69314718055994529,nan\n");

    for (const char* bad : {"0", "-2", "1+2i", "0.5j", "abc"}) {
        r = run({"zeta", "--form", "sum", "--s", bad, "--cutoff", "4"});
        CHECK(r.code == 2);
        CHECK(r.err.find("out of scope") != std::string::npos);
    }
}

TEST_CASE("digit-totals") {
    auto r = run({"digit-totals", "--lo", "7", "--hi", "7", "--base", "10"});
    CHECK(r.out == "digit,count\n0,0\n1,1\n2,1\n3,0\n4,1\n5,1\n6,0\n7,1\n8,1\n9,0\n# excluded,0\n");

    r = run({"digit-totals", "--lo", "3", "--hi", "7", "--base", "2"});
    CHECK(r.out == "digit,count\n0,5\n1,4\n# excluded,0\n");

    r = run({"digit-totals", "--lo", "2", "--hi", "5", "--base", "10", "--format", "json"});
    CHECK(r.out.find("{\"excluded\":2}") != std::string::npos);
}

TEST_CASE("mobius") {
    auto r = run({"mobius", "--limit", "6"});
    CHECK(r.out == "n,mu\n1,1\n2,-1\n3,-1\n4,0\n5,-1\n6,1\n");
    r = run({"mobius", "--n", "30"});
    CHECK(r.out == "n,mu\n30,-1\n");
    r = run({"mobius"});
    CHECK(r.code == 2);
}

TEST_CASE("table format") {
    const auto r = run({"bit-census", "--max-width", "3", "--format", "table"});
    CHECK(r.out == "width  zeros  ones  total\n    2      1     3      4\n    3      4     8     12\n");
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == 2);
    CHECK(run({"no-such-command"}).code == 2);
    CHECK(run({"bit-census", "--max-width", "5", "--format", "xml"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}
