#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <sstream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(QRR_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    RunResult r;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
    int status = pclose(p);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST_CASE("exit codes") {
    CHECK(run("verify --id t1-1 --order 200").exit_code == 0);
    CHECK(run("verify --lhs \"G(q)\" --rhs \"H(q)\" --order 100").exit_code == 1);
    CHECK(run("verify --lhs \"G(q\" --rhs \"H(q)\"").exit_code == 2);
    CHECK(run("expand \"Q(q)\"").exit_code == 2);
    CHECK(run("verify --lhs \"G(q)\"").exit_code == 2);
    CHECK(run("no-such-subcommand").exit_code == 2);
    CHECK(run("verify --id no-such-id").exit_code == 2);
    CHECK(run("list --group no-such-group").exit_code == 2);
    CHECK(run("partitions --max-n 60").exit_code == 0);
}

TEST_CASE("expand text output matches the fixture") {
    RunResult r = run("expand \"T(q)\" --order 50");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("q^0 : 1") != std::string::npos);
    CHECK(r.out.find("q^1 : -1") != std::string::npos);
    CHECK(r.out.find("q^4 : -1") != std::string::npos);
}

TEST_CASE("json output re-parses under the report schema") {
    RunResult r = run("expand \"R(q)\" --order 30 --format json");
    CHECK(r.exit_code == 0);
    json rep = json::parse(r.out);
    CHECK(rep["schema"] == "qrr-report/1");
    CHECK(rep["tool_version"].is_string());
    CHECK(rep["command"] == "expand");
    REQUIRE(rep["coefficients"].is_array());
    const auto& first = rep["coefficients"][0];
    CHECK(first["exponent_num"] == 1);
    CHECK(first["exponent_den"] == 5);
    CHECK(first["coefficient"] == "1");

    RunResult v = run("verify --id rrq5 --order 200 --format json");
    CHECK(v.exit_code == 0);
    json vr = json::parse(v.out);
    CHECK(vr["schema"] == "qrr-report/1");
    CHECK(vr["items"][0]["outcome"]["status"] == "ZERO");
    CHECK(vr["summary"]["zero"] == 1);

    RunResult f = run("verify --lhs \"G(q)\" --rhs \"H(q)\" --order 100 --format json");
    CHECK(f.exit_code == 1);
    json fr = json::parse(f.out);
    CHECK(fr["items"][0]["outcome"]["status"] == "NONZERO");
    CHECK(fr["items"][0]["outcome"]["first_nonzero_exponent_num"] == 1);
    CHECK(fr["items"][0]["outcome"]["first_nonzero_coefficient"] == "1");
}

TEST_CASE("csv output has the documented header and columns") {
    RunResult r = run("expand \"G(q)\" --order 25 --format csv");
    CHECK(r.exit_code == 0);
    std::istringstream in(r.out);
    std::string line;
    REQUIRE(std::getline(in, line));
    CHECK(line == "exponent_num,exponent_den,coefficient");
    REQUIRE(std::getline(in, line));
    CHECK(line == "0,1,1");
    REQUIRE(std::getline(in, line));
    CHECK(line == "1,1,1");
}

TEST_CASE("verify-all over a group") {
    RunResult r = run("verify-all --group lemma --order 200 --jobs 2 --format json");
    CHECK(r.exit_code == 0);
    json rep = json::parse(r.out);
    CHECK(rep["summary"]["total"].get<int64_t>() >= 5);
    CHECK(rep["summary"]["nonzero"] == 0);
}

TEST_CASE("dissect") {
    // class 2 mod 4 of f(q,q^5): exponents are 0,1 mod 4 only, so empty
    RunResult r = run("dissect \"f(q,q^5)\" 4 2 --order 80 --format json");
    CHECK(r.exit_code == 0);
    json rep = json::parse(r.out);
    CHECK(rep["coefficients"].empty());
}

TEST_CASE("partitions spec counts") {
    RunResult r = run("partitions --spec p1 --n 1 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("n,count") != std::string::npos);
    CHECK(r.out.find("1,1") != std::string::npos);
}
