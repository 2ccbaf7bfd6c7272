// End-to-end checks of the command-line tool: spawns the built binary,
// captures stdout, and re-parses every JSON output under the published
// schemas.

#include "squeeze/json_io.hpp"

#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::string cli_path() {
    const char* p = std::getenv("SQUEEZE_KIT_BIN");
    REQUIRE_MESSAGE(p != nullptr, "SQUEEZE_KIT_BIN must point at the built binary");
    return p;
}

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = cli_path() + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

fs::path write_temp(const std::string& name, const std::string& content) {
    fs::path p = fs::temp_directory_path() / ("squeeze_kit_test_" + name);
    std::ofstream(p) << content;
    return p;
}

} // namespace

TEST_CASE("example subcommand reproduces the product-of-balls value") {
    RunResult r = run("example --n 4 --p 2,2");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j.at("lower").get<double>() == doctest::Approx(0.70710678118654746).epsilon(1e-15));
    CHECK(j.at("upper").get<double>() == doctest::Approx(0.70710678118654746).epsilon(1e-15));
    CHECK(j.at("provenance").is_array());
    CHECK(j.at("provenance").size() >= 3);
}

TEST_CASE("gauge subcommand") {
    auto dom = write_temp("ball2.json", R"({"type":"ball","dim":2,"radius":1})");
    auto origin = write_temp("origin.json", R"({"coords":[[0,0],[0,0]]})");
    auto z = write_temp("z.json", R"({"coords":[[0.3,0],[0.4,0]]})");

    RunResult r0 = run("gauge --domain " + dom.string() + " --point " + origin.string());
    CHECK(r0.exit_code == 0);
    json j0 = json::parse(r0.out);
    CHECK(j0.at("value").get<double>() == 0.0);
    CHECK(j0.at("method").get<std::string>() == "closed_form");

    RunResult r1 = run("gauge --domain " + dom.string() + " --point " + z.string());
    json j1 = json::parse(r1.out);
    CHECK(j1.at("value").get<double>() == doctest::Approx(0.5).epsilon(1e-14));

    RunResult r2 =
        run("gauge --domain " + dom.string() + " --point " + z.string() + " --d 1,2");
    json j2 = json::parse(r2.out);
    CHECK(j2.at("value").get<double>() > 0.0);
    CHECK(j2.at("residual").get<double>() <= 1e-12);
}

TEST_CASE("constants subcommand with the product-of-balls model") {
    auto dom = write_temp("epinf.json", R"({"type":"gen_ellipsoid","p":[1,1,1],"m":["inf","inf","inf"]})");
    RunResult r = run("constants --domain " + dom.string());
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j.at("alpha").get<double>() == 1.0);
    CHECK(j.at("R").get<double>() == doctest::Approx(std::sqrt(3.0)).epsilon(1e-15));
    CHECK(j.at("P").get<double>() == j.at("R").get<double>() + 1.0);
    CHECK(j.at("L").get<int>() == 1);
    CHECK(j.at("method").get<std::string>() == "analytic");
}

TEST_CASE("distance subcommand") {
    auto dom = write_temp("pd.json", R"({"type":"polydisk","radii":[1,1]})");
    auto z = write_temp("zz.json", R"({"coords":[[0.2,0],[0.7,0]]})");
    RunResult r = run("distance --domain " + dom.string() + " --point " + z.string());
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j.at("lower").get<double>() == doctest::Approx(0.7).epsilon(1e-14));
    CHECK(j.at("exact").get<bool>());

    RunResult rd = run("distance --domain " + dom.string() + " --point " + z.string() + " --d 1,2");
    json jd = json::parse(rd.out);
    CHECK(jd.at("lower").get<double>() <= jd.at("upper").get<double>());
    CHECK_FALSE(jd.at("exact").get<bool>());
}

TEST_CASE("bounds subcommand chains rules") {
    auto ball = write_temp("b3.json", R"({"type":"ball","dim":3,"radius":1})");
    auto model = write_temp("pb.json", R"({"type":"gen_ellipsoid","p":[1,2],"m":["inf","inf"]})");
    auto z = write_temp("origin3.json", R"({"coords":[[0,0],[0,0],[0,0]]})");
    RunResult r = run("bounds --target " + ball.string() + " --model " + model.string() +
                      " --point " + z.string() + " --rules exact_ball,prop21_backward");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j.at("lower").get<double>() == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
    CHECK(j.at("upper").get<double>() == 1.0);
    auto rules = j.at("provenance");
    CHECK(rules.back().at("rule").get<std::string>() == "Prop2.1(2)");

    // the homogeneous transfer needs an explicit certified constant
    RunResult rt = run("bounds --target " + ball.string() + " --model " + model.string() +
                       " --point " + z.string() +
                       " --rules exact_ball,thm35_transfer --transfer 0.7071,0.7072");
    CHECK(rt.exit_code == 0);
    json jt = json::parse(rt.out);
    CHECK(jt.at("lower").get<double>() == doctest::Approx(0.7071).epsilon(1e-12));
}

TEST_CASE("verify subcommand exit codes and report files") {
    fs::path report = fs::temp_directory_path() / "squeeze_kit_test_report.jsonl";
    fs::remove(report);
    RunResult r = run("verify --suite interval_sanity --samples 50 --seed 42 --out " +
                      report.string());
    CHECK(r.exit_code == 0);
    json line = json::parse(r.out);
    CHECK(line.at("suite").get<std::string>() == "interval_sanity");
    CHECK(line.at("passed").get<bool>());

    std::ifstream in(report);
    REQUIRE(in.good());
    std::string file_line;
    std::getline(in, file_line);
    CHECK(json::parse(file_line).at("suite").get<std::string>() == "interval_sanity");

    RunResult unknown = run("verify --suite foo --samples 5");
    CHECK(unknown.exit_code == 1);

    RunResult vacuous = run("verify --suite interval_sanity --samples 0");
    CHECK(vacuous.exit_code == 2);
}

TEST_CASE("usage errors exit with 64") {
    CHECK(run("gauge --domain only.json").exit_code == 64);
    CHECK(run("frobnicate").exit_code == 64);
    CHECK(run("verify --suite a --all").exit_code == 64);
}

TEST_CASE("validation errors exit with 1") {
    auto bad = write_temp("bad.json", R"({"type":"ball","dim":0,"radius":1})");
    auto z = write_temp("zv.json", R"({"coords":[[0,0]]})");
    CHECK(run("gauge --domain " + bad.string() + " --point " + z.string()).exit_code == 1);

    auto mismatch = write_temp("b5.json", R"({"type":"ball","dim":5,"radius":1})");
    CHECK(run("gauge --domain " + mismatch.string() + " --point " + z.string()).exit_code == 1);
}

TEST_CASE("csv output") {
    RunResult r = run("example --n 2 --p 1,1 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("lower,upper,provenance", 0) == 0);
    CHECK(r.out.find("0.7071067811865474") != std::string::npos);
}

TEST_CASE("seed can come from the environment") {
    auto dom = write_temp("wp.json", R"({"type":"weighted_power","c":[1,2],"s":[1,1.5]})");
    std::string base = "constants --domain " + dom.string() + " --oracle-directions 500";
    RunResult a = run(base + " --seed 9");
    std::string cmd = "SQUEEZE_KIT_SEED=9 " + cli_path() + " " + base + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
    pclose(pipe);
    CHECK(a.out == out);
}
