#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

std::string cli_path() {
    const char* p = std::getenv("HEAVYTAIL_CLI");
    REQUIRE_MESSAGE(p != nullptr, "HEAVYTAIL_CLI must point at the built binary");
    return p;
}

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string cmd = cli_path() + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buf.data(), buf.size(), pipe) != nullptr) r.out += buf.data();
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("bound command evaluates thm1") {
    auto r = run("bound --kind thm1 --v 1 --alpha 1 --n 10000 --eps 0.5");
    CHECK(r.exit_code == 0);
    auto j = json::parse(r.out);
    CHECK(j.at("value").get<double>() == doctest::Approx(0.0838905609893065).epsilon(1e-9));
    CHECK(j.at("kind") == "thm1");
    // emitted JSON re-parses to the same values (round-trip stability)
    auto again = json::parse(j.dump());
    CHECK(again == j);
}

TEST_CASE("expectation command") {
    auto r = run("expectation --dist geometric:0.5");
    CHECK(r.exit_code == 0);
    CHECK(std::stod(r.out) == doctest::Approx(2.0).epsilon(1e-9));
    auto rd = run("expectation --dist pareto:0.8:1.0");
    CHECK(rd.exit_code == 0);
    CHECK(rd.out == "divergent\n");
}

TEST_CASE("verify-membership command") {
    auto r = run("verify-membership --dist pareto:1:1 --kmax 200");
    CHECK(r.exit_code == 0);
    auto j = json::parse(r.out);
    CHECK(j.at("passed").get<bool>());
    auto r2 = run("verify-membership --dist geometric:0.5 "
                  "--spec '{\"alpha_r\":2,\"v\":1}' --kmax 50");
    CHECK(r2.exit_code == 0);
    auto j2 = json::parse(r2.out);
    CHECK_FALSE(j2.at("passed").get<bool>());
    CHECK(j2.at("first_violation_k").get<long long>() == 2);
}

TEST_CASE("lemma-grid command writes a CSV and exits zero") {
    const std::string out = "/tmp/heavytail_test_lemmas.csv";
    auto r = run("lemma-grid --alpha-list 1.0 --n-list 1000 --eps-list 0.5 --out " + out);
    CHECK(r.exit_code == 0);
    const std::string csv = slurp(out);
    CHECK(csv.find("lemma_id,alpha,n,epsilon,exact,bound,margin,pass") == 0);
    CHECK(csv.find("I1:pareto(a=1,v=1)") != std::string::npos);
    CHECK(csv.find("false") == std::string::npos);
    std::remove(out.c_str());
}

TEST_CASE("lemma-grid default grid passes everywhere") {
    const std::string out = "/tmp/heavytail_test_lemmas_default.csv";
    auto r = run("lemma-grid --grid default --out " + out);
    CHECK(r.exit_code == 0);
    const std::string csv = slurp(out);
    CHECK(csv.find("false") == std::string::npos);
    CHECK(std::count(csv.begin(), csv.end(), '\n') > 100);
    std::remove(out.c_str());
}

TEST_CASE("json output formats") {
    auto r = run("lemma-grid --alpha-list 1.0 --n-list 1000 --eps-list 0.5 --format json");
    CHECK(r.exit_code == 0);
    auto rows = json::parse(r.out);
    REQUIRE(rows.is_array());
    CHECK(rows.size() == 6); // one-sided pareto + its symmetric mixture
    for (const auto& row : rows) CHECK(row.at("pass").get<bool>());

    auto rs = run("simulate --dist pareto:0.8:1.0 --n 100 --eps 0.4 --side right "
                  "--trials 200 --seed 7 --format json");
    CHECK(rs.exit_code == 0);
    auto j = json::parse(rs.out);
    CHECK(j.at("estimate").at("trials").get<long long>() == 200);
    CHECK(j.at("comparisons").is_array());
}

TEST_CASE("simulate command is byte-stable across runs and worker counts") {
    const std::string args =
        "simulate --dist pareto:0.8:1.0 --n 100 --eps 0.4 --side right "
        "--trials 400 --seed 7";
    auto r1 = run(args + " --workers 1");
    auto r2 = run(args + " --workers 4");
    CHECK(r1.exit_code == 0);
    CHECK(r1.out == r2.out);
    CHECK(r1.out.find("bound_kind") != std::string::npos);
}

TEST_CASE("config file supplies defaults and flags override it") {
    const std::string cfg = "/tmp/heavytail_test_cfg.json";
    {
        std::ofstream out(cfg);
        out << R"({"kind":"thm1","v":1.0,"alpha":1.0,"n":10000,"eps":0.5})";
    }
    auto r = run("--config " + cfg + " bound");
    CHECK(r.exit_code == 0);
    CHECK(json::parse(r.out).at("value").get<double>() ==
          doctest::Approx(0.0838905609893065).epsilon(1e-9));
    // flag overrides the config's eps
    auto r2 = run("--config " + cfg + " bound --eps 0.25");
    auto v2 = json::parse(r2.out).at("value").get<double>();
    CHECK(v2 == doctest::Approx((1.0 + std::exp(2.0)) * std::pow(10000.0, -0.25))
                    .epsilon(1e-9));
    std::remove(cfg.c_str());
}

TEST_CASE("config accepts distribution specs as JSON objects and grid lists") {
    const std::string cfg = "/tmp/heavytail_test_dist_cfg.json";
    {
        std::ofstream out(cfg);
        out << R"({"dist":{"kind":"geometric","p":0.5},)"
            << R"("alpha_list":[1.0],"n_list":[1000],"eps_list":[0.5]})";
    }
    auto r = run("--config " + cfg + " expectation");
    CHECK(r.exit_code == 0);
    CHECK(std::stod(r.out) == doctest::Approx(2.0).epsilon(1e-9));
    auto rg = run("--config " + cfg + " lemma-grid --format json");
    CHECK(rg.exit_code == 0);
    CHECK(json::parse(rg.out).size() == 6);
    std::remove(cfg.c_str());
}

TEST_CASE("malformed config exits 1 with diagnostics") {
    const std::string cfg = "/tmp/heavytail_test_bad.json";
    {
        std::ofstream out(cfg);
        out << "{\"kind\": thm1"; // invalid JSON
    }
    auto r = run("--config " + cfg + " bound --v 1 --alpha 1 --n 100 --eps 0.5");
    CHECK(r.exit_code == 1);
    std::remove(cfg.c_str());
}

TEST_CASE("usage errors exit 1") {
    CHECK(run("bound --kind thm9 --v 1 --alpha 1 --n 100 --eps 0.5").exit_code == 1);
    CHECK(run("expectation").exit_code == 1);
    CHECK(run("no-such-command").exit_code == 1);
    CHECK(run("simulate --dist zipf:2 --n 10 --eps 0.1 --trials 100").exit_code == 1);
}

TEST_CASE("HEAVYTAIL_SEED environment override") {
    const std::string base =
        "simulate --dist pareto:0.8:1.0 --n 50 --eps 0.4 --side right --trials 200";
    auto with_env = [&](const std::string& env_seed, const std::string& extra) {
        const std::string cmd = "HEAVYTAIL_SEED=" + env_seed + " " + cli_path() + " " +
                                base + extra + " 2>/dev/null";
        std::array<char, 4096> buf{};
        std::string out;
        FILE* pipe = popen(cmd.c_str(), "r");
        REQUIRE(pipe != nullptr);
        while (fgets(buf.data(), buf.size(), pipe) != nullptr) out += buf.data();
        pclose(pipe);
        return out;
    };
    const std::string env9 = with_env("9", "");
    const std::string flag9 = run(base + " --seed 9").out;
    CHECK(env9 == flag9); // env seed equals the explicit flag
    // explicit flag wins over the environment
    const std::string env9_flag7 = with_env("9", " --seed 7");
    const std::string flag7 = run(base + " --seed 7").out;
    CHECK(env9_flag7 == flag7);
    CHECK(env9 != flag7);
}

TEST_CASE("full-report writes the four artifacts") {
    const std::string dir = "/tmp/heavytail_test_report";
    std::system(("rm -rf " + dir + " && mkdir -p " + dir).c_str());
    auto r = run("full-report --out-dir " + dir + " --trials 200 --seed 3 --workers 2");
    CHECK(r.exit_code == 0);
    auto summary = json::parse(slurp(dir + "/summary.json"));
    CHECK(summary.at("ok").get<bool>());
    CHECK(summary.contains("generated_at"));
    CHECK(summary.at("lemma_failures").get<long long>() == 0);
    CHECK(slurp(dir + "/lemmas.csv").find("lemma_id") == 0);
    CHECK(slurp(dir + "/simulations.csv").find("dist_id") == 0);
    CHECK(json::parse(slurp(dir + "/bounds.json")).is_array());
    std::system(("rm -rf " + dir).c_str());
}
