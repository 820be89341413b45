#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <sys/wait.h>

#include <cstdio>
#include <string>

#include "jointslab/io.hpp"

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_shell(const std::string& cmd) {
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

RunResult run(const std::string& args) {
    return run_shell(std::string("\"") + JOINTSLAB_CLI_PATH + "\" " + args + " 2>/dev/null");
}

RunResult run_env(const std::string& env, const std::string& args) {
    return run_shell(env + " \"" + JOINTSLAB_CLI_PATH + "\" " + args + " 2>/dev/null");
}

void drop(const std::string& path) { std::remove(path.c_str()); }

void make_grid(const std::string& path) {
    REQUIRE(run("gen grid --n 3 --m 2 --field 101 --out " + path).exit_code == 0);
}

void make_plane(const std::string& path) {
    REQUIRE(run("gen plane_with_verticals --field 5 --out " + path).exit_code == 0);
}

}  // namespace

TEST_CASE("gen writes reproducible files") {
    auto a = run("gen grid --n 3 --m 2 --field 101 --out cli_gen_a.json");
    auto b = run("gen grid --n 3 --m 2 --field 101 --out cli_gen_b.json");
    CHECK(a.exit_code == 0);
    CHECK(b.exit_code == 0);
    CHECK(jointslab::read_file("cli_gen_a.json") == jointslab::read_file("cli_gen_b.json"));

    auto doc = json::parse(jointslab::read_file("cli_gen_a.json"));
    CHECK(doc["lines"].size() == 12);
    CHECK(doc["field"]["char"] == 101);
    drop("cli_gen_a.json");
    drop("cli_gen_b.json");

    // Seeded families reproduce bit for bit too.
    auto s1 = run("gen star --n 3 --lines 6 --field 101 --seed 7");
    auto s2 = run("gen star --n 3 --lines 6 --field 101 --seed 7");
    CHECK(s1.exit_code == 0);
    CHECK(s1.output == s2.output);
    CHECK(json::parse(s1.output)["lines"].size() == 6);
}

TEST_CASE("gen rejects out-of-range parameters") {
    CHECK(run("gen grid --m 200 --field 101").exit_code == 2);
    CHECK(run("gen mystery --m 2 --field 7").exit_code == 2);
    CHECK(run("gen grid --m 2 --field 6").exit_code == 2);
    CHECK(run("gen grid --m 2 --field abc").exit_code == 2);
}

TEST_CASE("joints pipeline") {
    make_grid("cli_joints_in.json");
    auto r = run("joints cli_joints_in.json");
    CHECK(r.exit_code == 0);
    auto doc = json::parse(r.output);
    CHECK(doc["summary"]["joint_count"] == 8);
    CHECK(doc["summary"]["max_multiplicity"] == 6);
    CHECK(doc["joints"].size() == 8);
    drop("cli_joints_in.json");

    CHECK(run("joints nonexistent_file.json").exit_code == 2);
    jointslab::write_file_atomic("cli_broken.json", "{not json");
    CHECK(run("joints cli_broken.json").exit_code == 2);
    drop("cli_broken.json");
}

TEST_CASE("verify reports the sharp grid ratio") {
    for (int M = 1; M <= 5; ++M) {
        std::string base = "cli_sweep_" + std::to_string(M) + ".json";
        REQUIRE(run("gen grid --n 3 --m " + std::to_string(M) +
                    " --field 101 --out " + base)
                    .exit_code == 0);
        auto r = run("verify " + base);
        CHECK(r.exit_code == 0);
        auto doc = json::parse(r.output);
        CHECK(doc["pass"] == true);
        // M^3 joints from 3M^2 lines: (M^3)^2 / (3M^2)^3 = 1/27 exactly.
        CHECK(doc["ratio"]["exact"] == "1/27");
        CHECK(doc["ratio"]["power"] == 2);
        drop(base);
    }
}

TEST_CASE("verify with a multiplicity threshold") {
    make_plane("cli_verify_plane.json");
    auto r = run("verify cli_verify_plane.json --lambda 90");
    CHECK(r.exit_code == 0);
    auto doc = json::parse(r.output);
    CHECK(doc["j_lambda_count"] == "25");
    CHECK(doc["joint_count"] == "25");
    CHECK(doc["pass"] == true);
    // Thresholds below the usable range are an input error.
    CHECK(run("verify cli_verify_plane.json --lambda 1").exit_code == 2);
    drop("cli_verify_plane.json");
}

TEST_CASE("peel emits a trace with small parts") {
    make_grid("cli_peel_in.json");
    auto r = run("peel cli_peel_in.json");
    CHECK(r.exit_code == 0);
    auto doc = json::parse(r.output);
    CHECK(doc["initial_joint_count"] == 8);
    CHECK(doc["part_bound"] == 2);
    std::size_t total = 0;
    for (const auto& step : doc["steps"]) {
        CHECK(step["extracted"].size() <= 2);
        total += step["extracted"].size();
    }
    CHECK(total == 8);
    drop("cli_peel_in.json");
}

TEST_CASE("choose on a generic star") {
    REQUIRE(run("gen star --n 3 --lines 6 --field 101 --seed 42 --out cli_star.json")
                .exit_code == 0);
    auto r = run("choose cli_star.json --lambda 120");
    CHECK(r.exit_code == 0);
    auto doc = json::parse(r.output);
    CHECK(doc["chosen_lines"] == json::array({0, 1, 2, 3}));
    CHECK(doc["violations"].empty());

    CHECK(run("choose cli_star.json").exit_code == 2);  // --lambda is required
    drop("cli_star.json");
}

TEST_CASE("choose fails loudly on degenerate collections") {
    make_plane("cli_choose_plane.json");
    auto r = run("choose cli_choose_plane.json --lambda 1 --out cli_witness.json");
    CHECK(r.exit_code == 3);
    auto witness = json::parse(jointslab::read_file("cli_witness.json"));
    CHECK(witness["lines"].size() == 3);
    CHECK(witness["point"].size() == 3);
    drop("cli_witness.json");
    drop("cli_choose_plane.json");

    // Unchecked mode records the bound failure and signals it in the exit.
    REQUIRE(run("gen pencil --m 4 --field 0 --out cli_pencil.json").exit_code == 0);
    auto unchecked = run("choose cli_pencil.json --lambda 36 --allow-nongeneric");
    CHECK(unchecked.exit_code == 1);
    auto doc = json::parse(unchecked.output);
    CHECK(doc["violations"].size() == 1);
    CHECK(doc["chosen_lines"] == json::array({0}));
    drop("cli_pencil.json");
}

TEST_CASE("sample is bit-reproducible and thread-invariant") {
    REQUIRE(run("gen star --n 3 --lines 8 --field 101 --seed 2 --out cli_star8.json")
                .exit_code == 0);
    std::string flags = "sample cli_star8.json --lambda 336 --trials 20 --seed 5";
    auto a = run(flags + " --out cli_sample_a.json --csv cli_sample_a.csv");
    auto b = run(flags + " --out cli_sample_b.json --csv cli_sample_b.csv");
    CHECK(a.exit_code == 0);
    CHECK(b.exit_code == 0);
    CHECK(jointslab::read_file("cli_sample_a.json") ==
          jointslab::read_file("cli_sample_b.json"));
    CHECK(jointslab::read_file("cli_sample_a.csv") ==
          jointslab::read_file("cli_sample_b.csv"));
    CHECK(jointslab::read_file("cli_sample_a.csv")
              .rfind("trial,kept_lines,survivors\n", 0) == 0);

    // Capping the worker pool must not change the arithmetic.
    auto serial = run_env("JOINTS_LAB_THREADS=1", flags);
    CHECK(serial.exit_code == 0);
    CHECK(serial.output == jointslab::read_file("cli_sample_a.json"));

    CHECK(run("sample cli_star8.json --lambda 336 --seed 5").exit_code == 2);  // no trials
    drop("cli_star8.json");
    drop("cli_sample_a.json");
    drop("cli_sample_b.json");
    drop("cli_sample_a.csv");
    drop("cli_sample_b.csv");
}

TEST_CASE("vanish recovers the plane equation") {
    json pts = json::array();
    for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b)
            pts.push_back(json::array({std::to_string(a), std::to_string(b), "0"}));
    json doc{{"field", {{"char", 5}}}, {"n", 3}, {"points", pts}};
    jointslab::write_file_atomic("cli_pts.json", doc.dump() + "\n");
    auto r = run("vanish cli_pts.json");
    CHECK(r.exit_code == 0);
    auto out = json::parse(r.output);
    CHECK(out["degree"] == 1);
    REQUIRE(out["terms"].size() == 1);
    CHECK(out["terms"][0]["exps"] == json::array({0, 0, 1}));
    drop("cli_pts.json");
}

TEST_CASE("usage errors exit with the input-error code") {
    CHECK(run("frobnicate x.json").exit_code == 2);
    CHECK(run("").exit_code == 2);  // a subcommand is required
}
