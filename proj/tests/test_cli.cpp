#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "valinv/cli.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace valinv;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result call(std::vector<std::string> args) {
    args.insert(args.begin(), "valinv");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> v;
    std::istringstream is(s);
    for (std::string l; std::getline(is, l);) v.push_back(l);
    return v;
}

std::string temp_file(const std::string& name, const std::string& body) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << body;
    return path.string();
}

}  // namespace

TEST_CASE("invariants on the projective plane") {
    const auto r = call({"invariants", "--model", "pn:2", "--anticanonical", "--p", "1,2"});
    REQUIRE(r.code == 0);
    const auto l = lines(r.out);
    REQUIRE(l.size() == 3);
    CHECK(l[0] == "p,delta_upper,argmin,alpha_upper,threshold,verdict");
    CHECK(l[1].starts_with("1,1,"));
    CHECK(l[1].ends_with(",1/3,1,borderline"));
    CHECK(l[2].ends_with("below-threshold"));
}

TEST_CASE("invariants json carries exact powers and the table") {
    const auto r = call({"invariants", "--model", "p2-anticanonical", "--p", "2", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["rows"][0]["delta_pow"] == "2/3");
    CHECK(j["rows"][0]["verdict"] == "below-threshold");
    CHECK(j["rows"][0]["table"].size() > 10);
    CHECK(j["violations"].empty());
}

TEST_CASE("product of lines and non-Fano polarizations") {
    auto r = call({"invariants", "--model", "p1xp1"});
    REQUIRE(r.code == 0);
    CHECK(lines(r.out)[1].starts_with("1,2,"));
    r = call({"invariants", "--model", "hirzebruch-1"});
    REQUIRE(r.code == 0);
    CHECK(lines(r.out)[1].ends_with(",,"));
}

TEST_CASE("exit codes") {
    CHECK(call({"invariants", "--model", "/nonexistent/model.json"}).code == cli::input_error);
    CHECK(call({"invariants", "--model", "p7"}).code == cli::input_error);
    CHECK(call({"invariants", "--bogus"}).code == cli::input_error);
    CHECK(call({"invariants", "--p", "0.5"}).code == cli::input_error);
    CHECK(call({"scan", "--kind", "nothing"}).code == cli::input_error);
    CHECK(call({"--help"}).code == cli::ok);

    const auto pyramid =
        temp_file("valinv_pyramid.json", R"({"dim":3,"vertices":[[0,0,0],[1,-1,1],[-1,-1,1],[1,2,1],[-1,2,1]]})");
    auto r = call({"invariants", "--model", pyramid});
    CHECK(r.code == cli::unsupported_model);
    r = call({"scan", "--model", pyramid, "--format", "json"});
    CHECK(r.code == cli::unsupported_model);
    CHECK(nlohmann::json::parse(r.err)["error"]["kind"] == "unsupported");
}

TEST_CASE("verify flags a mutant curve with its witness") {
    const auto mutant = temp_file("valinv_mutant.json", R"({"dim":2,"breakpoints":[0,1,2],"pieces":[[4,-3],[2,-1]]})");
    const auto r = call({"verify", "--curve", mutant});
    CHECK(r.code == cli::invariant_violation);
    CHECK(r.out.find("volume-curve,fail,") != std::string::npos);
    CHECK(r.out.find("x=1") != std::string::npos);

    const auto good = temp_file("valinv_good.json", R"({"dim":2,"breakpoints":[0,1],"pieces":[["1","-2","1"]]})");
    CHECK(call({"verify", "--curve", good}).code == cli::ok);
}

TEST_CASE("verify is deterministic per seed") {
    const auto a = call({"verify", "--seed", "11"});
    const auto b = call({"verify", "--seed", "11"});
    CHECK(a.code == cli::ok);
    CHECK(a.out == b.out);
    CHECK(lines(a.out).size() == 10);
}

TEST_CASE("scans") {
    auto r = call({"scan", "--kind", "delta", "--p", ""});
    REQUIRE(r.code == 0);
    CHECK(r.out == "p,delta_upper,argmin\n");

    r = call({"scan", "--kind", "moments", "--model", "p2", "--p", "1,2"});
    REQUIRE(r.code == 0);
    CHECK(lines(r.out)[1].starts_with("1,1/3,"));

    r = call({"scan", "--kind", "continuity", "--model", "p1xp1", "--t", "0,1/2"});
    REQUIRE(r.code == 0);
    const auto l = lines(r.out);
    REQUIRE(l.size() == 3);
    CHECK(l[1].starts_with("0,2,"));
}

TEST_CASE("output file") {
    const auto path = (std::filesystem::temp_directory_path() / "valinv_out.csv").string();
    const auto r = call({"scan", "--kind", "delta", "--p", "1", "--out", path});
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::string header;
    std::getline(in, header);
    CHECK(header == "p,delta_upper,argmin");
}
