#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sphereval/io.hpp"

#include <cstdio>
#include <filesystem>
#include <string>
#include <sys/wait.h>

using namespace sphereval;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(SPHEREVAL_CLI) + " " + args + " 2>/dev/null";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p);
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
    const int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string tmp(const char* name) { return (std::filesystem::temp_directory_path() / name).string(); }

} // namespace

TEST_CASE("multipliers") {
    const Run c = run("multipliers --transform cosine --n 3 --i 1 --kmax 4");
    CHECK(c.code == 0);
    CHECK(c.out.rfind("k,value\n", 0) == 0);
    CHECK(c.out.find("\n0,0.4999999999999") != std::string::npos);
    CHECK(c.out.find("\n2,0.1250000000000") != std::string::npos);
    CHECK(c.out.find("\n1,") == std::string::npos);

    const Run b = run("multipliers --transform box --n 3 --kmax 3");
    CHECK(b.code == 0);
    CHECK(b.out.find("\n1,0\n") != std::string::npos);

    const Run j = run("multipliers --transform radon-down --n 4 --i 1 --j 3 --kmax 4 --format json");
    CHECK(j.code == 0);
    const Json js = Json::parse(j.out);
    CHECK(js.at("rows").size() == 3);
}

TEST_CASE("usage errors exit with 2 and name the range") {
    CHECK(run("multipliers --transform cosine --n 3 --i 0").code == 2);
    const std::string cmd = std::string(SPHEREVAL_CLI) + " multipliers --transform cosine --n 3 --i 0 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    char buf[512] = {0};
    const std::size_t got = fread(buf, 1, sizeof buf - 1, p);
    pclose(p);
    CHECK(std::string(buf, got).find("1..2") != std::string::npos);
    CHECK(run("multipliers --transform sine --n 3").code == 2);
    CHECK(run("frobnicate").code == 2);
    CHECK(run("convert --to klain --in Pi_2").code == 2);
    CHECK(run("apply --op lambda --n 3 --in Pi_1").code == 2);
    CHECK(run("kappa --i -1").code == 2);
}

TEST_CASE("kappa") {
    const Run r = run("kappa --i 3");
    CHECK(r.code == 0);
    CHECK(std::stod(r.out) == doctest::Approx(4.18879020478639));
}

TEST_CASE("convert Pi_2 to klain passes the support check") {
    const auto path = tmp("sphereval_cli_klain.json");
    CHECK(run("convert --from generating --to klain --n 3 --in Pi_2 --out " + path).code == 0);
    const auto v = valuation_from_json(read_json_file(path), RepKind::Klain);
    CHECK(v.i == 2);
    CHECK(is_support_function(v.grass).ok);
    std::filesystem::remove(path);
}

TEST_CASE("apply lambda to Pi_2 gives the |t| expansion") {
    const Run r = run("apply --op lambda --n 3 --in Pi_2");
    CHECK(r.code == 0);
    const auto v = valuation_from_json(Json::parse(r.out), RepKind::Generating);
    const auto ab = expand_zonal(3, [](double t) { return std::abs(t); }, 32);
    CHECK(v.i == 1);
    CHECK(coeff_distance(v.generating.coeffs, ab.coeffs) < 1e-12);
}

TEST_CASE("apply fourier twice reproduces the input") {
    const auto in = tmp("sphereval_cli_f0.json"), out = tmp("sphereval_cli_f2.json");
    REQUIRE(run("convert --to klain --n 4 --in Pi_2 --out " + in).code == 0);
    REQUIRE(run("apply --op fourier --rep klain --power 2 --in " + in + " --out " + out).code == 0);
    const auto a = valuation_from_json(read_json_file(in), RepKind::Klain);
    const auto b = valuation_from_json(read_json_file(out), RepKind::Klain);
    CHECK(b.i == a.i);
    CHECK(coeff_distance(a.grass.coeffs, b.grass.coeffs) < 1e-9);
    std::filesystem::remove(in);
    std::filesystem::remove(out);
}

TEST_CASE("body eval") {
    const auto path = tmp("sphereval_cli_cube.json");
    write_json_file(path, Json::parse("[[0,0,0],[1,0,0],[0,1,0],[0,0,1],[1,1,0],[1,0,1],[0,1,1],[1,1,1]]"));
    const Run s = run("body eval --file " + path + " --op support --dir 1,0,0");
    CHECK(s.code == 0);
    CHECK(std::stod(s.out) == doctest::Approx(1.0));
    const Run p = run("body eval --file " + path + " --op projvol --dir 1,1,1");
    CHECK(std::stod(p.out) == doctest::Approx(std::sqrt(3.0)));
    CHECK(run("body eval --file " + path + " --op support --dir 1,0").code == 2);
    std::filesystem::remove(path);
}

TEST_CASE("verify with a tiny band limit fails on Berg truncation") {
    const Run r = run("verify --kmax 2 --criterion 10");
    CHECK(r.code == 1);
    const Json j = Json::parse(r.out);
    CHECK(j.at("status") == "fail");
    bool truncation = false;
    for (const auto& c : j.at("checks"))
        if (c.at("status") == "fail" && c.at("detail").get<std::string>().find("truncated") != std::string::npos)
            truncation = true;
    CHECK(truncation);
}

TEST_CASE("verify is deterministic in the seed") {
    const Run a = run("verify --seed 7 --criterion 3 --mc-samples 20000");
    const Run b = run("verify --seed 7 --criterion 3 --mc-samples 20000");
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
    const Run c = run("verify --seed 8 --criterion 3 --mc-samples 20000");
    CHECK(c.out != a.out);
}

TEST_CASE("verify default run passes") {
    const Run r = run("verify");
    CHECK(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j.at("status") == "pass");
    CHECK(j.at("checks").size() > 30);
    for (const auto& c : j.at("checks")) {
        CHECK(c.contains("residual"));
        CHECK(c.contains("tolerance"));
    }
}
