#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "stefan/cli.hpp"
#include "stefan/errors.hpp"

#include "json.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

using namespace stefan;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

std::size_t count_lines(const std::string& s) { return lines(s).size(); }

}  // namespace

TEST_CASE("parse_sweep") {
    CHECK(cli::parse_sweep("0.5") == std::vector<double>{0.5});
    CHECK(cli::parse_sweep("1,10,100") == std::vector<double>{1, 10, 100});
    const auto r = cli::parse_sweep("0.1:1.0:0.1");
    REQUIRE(r.size() == 10);
    CHECK(r[2] == 0.3);
    CHECK(r[9] == 1.0);
    CHECK(cli::parse_sweep("1,10:100:10").size() == 11);
    CHECK_THROWS_AS(cli::parse_sweep(""), DomainError);
    CHECK_THROWS_AS(cli::parse_sweep("1,,2"), DomainError);
    CHECK_THROWS_AS(cli::parse_sweep("abc"), DomainError);
    CHECK_THROWS_AS(cli::parse_sweep("1:2"), DomainError);
    CHECK_THROWS_AS(cli::parse_sweep("2:1:0.1"), DomainError);
    CHECK_THROWS_AS(cli::parse_sweep("1:2:0"), DomainError);
    CHECK_THROWS_AS(cli::parse_sweep("1:2:-1"), DomainError);
}

TEST_CASE("solve") {
    const auto r = run({"solve", "--method", "exact", "--alpha", "0", "--ste", "0.5"});
    REQUIRE(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["nu"].get<double>() == doctest::Approx(0.4648).epsilon(1e-4));
    CHECK(doc["A"].get<double>() == 1.0);
    CHECK(doc.contains("B"));

    const auto c = run({"solve", "--method", "p4h", "--alpha", "0", "--ste", "0.02", "--bi", "3", "--format", "csv"});
    REQUIRE(c.code == 0);
    CHECK(lines(c.out)[0] == "method,nu,A,B,multiple_roots,hypothesis_violated");
    CHECK(lines(c.out)[1].rfind("p4h,0.0467627,", 0) == 0);
}

TEST_CASE("validation errors exit with status 2") {
    const auto neg = run({"solve", "--method", "p2", "--alpha", "0", "--ste", "-1"});
    CHECK(neg.code == 2);
    CHECK(neg.err.find("Ste") != std::string::npos);
    CHECK(count_lines(neg.err) == 1);
    CHECK(neg.out.empty());

    CHECK(run({"solve", "--method", "p9", "--ste", "0.5"}).code == 2);
    CHECK(run({"solve", "--method", "p2", "--alpha", "-1"}).code == 2);
    CHECK(run({"solve", "--method", "p2h", "--ste", "0.5", "--bi", "0"}).code == 2);
    CHECK(run({"solve", "--method", "p2h", "--ste", "0.5"}).code == 2);
    CHECK(run({"solve", "--method", "p2", "--ste", "0.5", "--bi", "3"}).code == 2);
    CHECK(run({"solve", "--ste", "0.5"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"table", "--ste", "0.1:1.0", "--methods", "p1"}).code == 2);
    CHECK(run({"table", "--ste", "0.5", "--methods", "exact"}).code == 2);
    CHECK(run({"table", "--ste", "0.5", "--methods", "p2h"}).code == 2);
    CHECK(run({"table", "--ste", "0.1,0.2", "--bi", "1,2", "--methods", "p2h"}).code == 2);
    CHECK(run({"converge", "--method", "p2h", "--ste", "0.5"}).code == 2);
    CHECK(run({"converge", "--method", "p2", "--ste", "0.5", "--bi", "1,2"}).code == 2);
    CHECK(run({"converge", "--method", "p2h", "--ste", "0.5", "--bi", "10,1"}).code == 2);
    CHECK(run({"field", "--method", "exact", "--t", "0:1"}).code == 2);
    CHECK(run({"field", "--method", "exact", "--nx", "1"}).code == 2);
    CHECK(run({"solve", "--method", "p2", "--format", "xml"}).code == 2);
    for (const auto& args : std::vector<std::vector<std::string>>{{"solve", "--method", "p9"}, {"table", "--ste", "x"}}) {
        const auto r = run(args);
        CHECK(r.code == 2);
        CHECK(count_lines(r.err) == 1);
    }
}

TEST_CASE("solver failures exit with status 1") {
    const auto r = run({"solve", "--method", "p1h", "--alpha", "0", "--ste", "6", "--bi", "1"});
    CHECK(r.code == 1);
    CHECK(r.err.find("no root") != std::string::npos);

    const auto t = run({"table", "--alpha", "0", "--ste", "6", "--bi", "1,2", "--methods", "p1h,p2h"});
    CHECK(t.code == 1);
    CHECK(t.err.find("row Bi=1") != std::string::npos);
    CHECK(count_lines(t.out) == 3);
}

TEST_CASE("table") {
    const auto r = run({"table", "--alpha", "0", "--ste", "0.1:1.0:0.1", "--methods", "p1,p2,p3"});
    REQUIRE(r.code == 0);
    const auto ls = lines(r.out);
    REQUIRE(ls.size() == 11);
    CHECK(ls[0] == "sweep,nu_exact,p1_nu,p1_pct,p2_nu,p2_pct,p3_nu,p3_pct,note");
    CHECK(ls[5].rfind("0.5,0.464786,0.486853,4.74777,0.472346,1.62663,0.480384,3.35607,", 0) == 0);

    const auto c = run({"table", "--alpha", "0", "--ste", "0.5", "--bi", "1,10:100:10", "--methods", "p2h,p4h"});
    REQUIRE(c.code == 0);
    CHECK(count_lines(c.out) == 12);
    CHECK(lines(c.out)[0] == "sweep,nu_exact,p2h_nu,p2h_pct,p4h_nu,p4h_pct,note");

    const auto j = run({"table", "--alpha", "0", "--ste", "0.5", "--methods", "p4", "--format", "json"});
    REQUIRE(j.code == 0);
    const auto doc = nlohmann::json::parse(j.out);
    CHECK(doc[0]["entries"][0]["method"] == "p4");
}

TEST_CASE("converge and field") {
    const auto c = run({"converge", "--method", "exacth", "--alpha", "0", "--ste", "0.5", "--bi", "1,10,100,1000"});
    REQUIRE(c.code == 0);
    CHECK(count_lines(c.out) == 5);
    CHECK(lines(c.out)[0] == "bi,nu_h,nu_limit,gap");

    const auto f = run({"field", "--method", "p2", "--alpha", "5", "--ste", "0.5", "--theta-inf", "30", "--x-max", "2",
                        "--t", "0.1:1", "--nx", "5", "--nt", "4"});
    REQUIRE(f.code == 0);
    const auto ls = lines(f.out);
    REQUIRE(ls.size() == 5);
    CHECK(ls[0] == "t/x,0,0.5,1,1.5,2,front_position");

    const auto fj = run({"field", "--method", "exacth", "--ste", "0.5", "--bi", "10", "--nx", "3", "--nt", "2", "--format", "json"});
    REQUIRE(fj.code == 0);
    CHECK(nlohmann::json::parse(fj.out)["method"] == "exacth");
}

TEST_CASE("output file and determinism") {
    const auto path = std::filesystem::temp_directory_path() / "stefan_cli_test.csv";
    const auto r = run({"table", "--alpha", "5", "--ste", "0.5", "--bi", "1:5:1", "--methods", "p1h,p2h,p3h", "--output", path.string()});
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    const auto again = run({"table", "--alpha", "5", "--ste", "0.5", "--bi", "1:5:1", "--methods", "p1h,p2h,p3h"});
    CHECK(buf.str() == again.out);
    std::filesystem::remove(path);
    CHECK(run({"solve", "--method", "p2", "--output", "/nonexistent-dir/x.json"}).code == 2);
}

TEST_CASE("format environment variable") {
    ::setenv("STEFAN_FORMAT", "csv", 1);
    const auto s = run({"solve", "--method", "p2"});
    CHECK(lines(s.out)[0].rfind("method,", 0) == 0);
    const auto explicit_json = run({"solve", "--method", "p2", "--format", "json"});
    CHECK(explicit_json.out.front() == '{');
    ::setenv("STEFAN_FORMAT", "yaml", 1);
    CHECK(run({"solve", "--method", "p2"}).code == 2);
    ::unsetenv("STEFAN_FORMAT");
}

TEST_CASE("binary exit codes") {
    const std::string bin = STEFAN_CLI_PATH;
    auto status = [&](const std::string& args) {
        const int raw = std::system((bin + " " + args + " >/dev/null 2>&1").c_str());
        return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    };
    CHECK(status("solve --method exact --alpha 0 --ste 0.5") == 0);
    CHECK(status("solve --method p2 --alpha 0 --ste -1") == 2);
    CHECK(status("solve --method p1h --alpha 0 --ste 6 --bi 1") == 1);
    CHECK(status("--help") == 0);
}
