// End-to-end tests of the command line tool: exit codes, stdout wording
// and JSON payloads. The binary path and the fixture directory come in
// as compile definitions.

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

struct RunResult {
    int exit_code;
    std::string output; // stdout and stderr merged
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string("\"") + ULTRATREE_CLI_PATH + "\" " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) output.append(buf, got);
    const int status = pclose(pipe);
    return RunResult{WEXITSTATUS(status), std::move(output)};
}

std::string data(const std::string& name) {
    return std::string("\"") + ULTRATREE_DATA_DIR + "/" + name + "\"";
}

std::string write_temp(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << content;
    return "\"" + path.string() + "\"";
}

} // namespace

TEST_CASE("validate") {
    const auto ok = run("validate " + data("quadruple.json"));
    CHECK(ok.exit_code == 0);
    CHECK(ok.output == "ultrametric: ok, n=4, diam=2\n");

    const auto broken = run("validate " + data("broken_triple.json"));
    CHECK(broken.exit_code == 2);
    CHECK(broken.output.find("x") != std::string::npos);
    CHECK(broken.output.find("z") != std::string::npos);

    CHECK(run("validate /no/such/file.json").exit_code == 1);
    CHECK(run("validate " + write_temp("garbage.json", "{oops")).exit_code == 1);
    CHECK(run("validate " + write_temp("badrat.json",
                                       R"({"points":["a"],"matrix":[["1e5"]]})")).exit_code == 1);
}

TEST_CASE("is-ugvl") {
    const auto yes = run("is-ugvl " + data("pyramid.json"));
    CHECK(yes.exit_code == 0);
    CHECK(yes.output == "UGVL: yes, delta=0\n");

    const auto no = run("is-ugvl " + data("quadruple.json"));
    CHECK(no.exit_code == 3);
    CHECK(no.output == "UGVL: no, delta=1\n");
}

TEST_CASE("generate-tree and eval-tree round-trip") {
    const auto gen = run("generate-tree " + data("pyramid.json"));
    CHECK(gen.exit_code == 0);
    const auto tree_json = nlohmann::json::parse(gen.output);
    CHECK(tree_json["vertices"].size() == 5);

    const auto tree_path = write_temp("pyramid_tree.json", gen.output);
    const auto eval = run("eval-tree " + tree_path);
    CHECK(eval.exit_code == 0);
    const auto space_json = nlohmann::json::parse(eval.output);
    const auto original = nlohmann::json::parse(
        std::ifstream(std::string(ULTRATREE_DATA_DIR) + "/pyramid.json"));
    CHECK(space_json == original);

    const auto dot = run("generate-tree --format dot " + data("pyramid.json"));
    CHECK(dot.exit_code == 0);
    CHECK(dot.output.find("graph T {") == 0);

    const auto refused = run("generate-tree " + data("quadruple.json"));
    CHECK(refused.exit_code == 3);
    CHECK(refused.output.find("not UGVL") != std::string::npos);
    CHECK(refused.output.find("x,y,z,t") != std::string::npos);
}

TEST_CASE("eval-tree") {
    const auto eval = run("eval-tree " + data("path3.json"));
    CHECK(eval.exit_code == 0);
    const auto j = nlohmann::json::parse(eval.output);
    CHECK(j["points"] == nlohmann::json::array({"y", "x", "z"}));
    CHECK(j["matrix"][0][2] == "2");
    CHECK(j["matrix"][1][2] == "1");

    const auto bad = run("eval-tree " + write_temp("zero_edge.json",
        R"({"vertices":[{"name":"a","label":"0"},{"name":"b","label":"0"}],"edges":[["a","b"]]})"));
    CHECK(bad.exit_code == 2);
}

TEST_CASE("representing-tree") {
    const auto j = run("representing-tree " + data("pyramid.json"));
    CHECK(j.exit_code == 0);
    const auto doc = nlohmann::json::parse(j.output);
    CHECK(doc["vertices"].size() == 8);
    CHECK(doc["root"] == "{x;y;z;t;w}");

    const auto dot = run("representing-tree --format dot " + data("quadruple.json"));
    CHECK(dot.exit_code == 0);
    CHECK(dot.output.find("digraph T {") == 0);
    CHECK(dot.output.find("2 | {x,y,z,t}") != std::string::npos);
}

TEST_CASE("extend and isometric") {
    const auto ext = run("extend " + data("quadruple.json"));
    CHECK(ext.exit_code == 0);
    const auto doc = nlohmann::json::parse(ext.output);
    CHECK(doc["space"]["points"].size() == 5);
    CHECK(doc["mapping"]["original"]["x"] == "x");
    REQUIRE(doc["mapping"]["added"].size() == 1);
    CHECK(doc["mapping"]["added"][0]["name"] == "w#1");
    CHECK(doc["mapping"]["added"][0]["for_ball"] == nlohmann::json::array({"x", "y", "z", "t"}));

    const auto ext_path = write_temp("quadruple_ext.json", doc["space"].dump());
    const auto same = run("isometric " + ext_path + " " + data("pyramid.json"));
    CHECK(same.exit_code == 0);
    CHECK(same.output == "isometric: yes\n");

    const auto differ = run("isometric " + data("quadruple.json") + " " + data("pyramid.json"));
    CHECK(differ.exit_code == 3);
    CHECK(differ.output == "isometric: no\n");
}

TEST_CASE("proptest is deterministic and honors ULTRATREE_SEED") {
    const auto a = run("proptest --trials 5 --max-points 5");
    const auto b = run("proptest --trials 5 --max-points 5");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(a.output.find("verdict=pass") != std::string::npos);
    CHECK(a.output.find("seed=12345") != std::string::npos);

    const std::string env_cmd = std::string("ULTRATREE_SEED=999 \"") + ULTRATREE_CLI_PATH +
                                "\" proptest --trials 5 --max-points 5 2>&1";
    FILE* pipe = popen(env_cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) output.append(buf, got);
    CHECK(WEXITSTATUS(pclose(pipe)) == 0);
    CHECK(output.find("seed=999") != std::string::npos);
}

TEST_CASE("argument errors") {
    CHECK(run("").exit_code != 0);
    CHECK(run("no-such-command").exit_code != 0);
    CHECK(run("validate").exit_code != 0);
}
