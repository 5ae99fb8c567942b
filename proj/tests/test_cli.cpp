#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "json.hpp"

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

/// Runs the reasoner binary with the given arguments through the shell and
/// captures stdout (and stderr too when `merge_stderr` is set).
RunResult run_cli(const std::string& args, bool merge_stderr = false) {
    std::string command = std::string(CONDASP_BINARY_PATH) + " " + args +
                          (merge_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    char buffer[4096];
    std::size_t read = 0;
    while ((read = fread(buffer, 1, sizeof(buffer), pipe)) > 0) {
        result.output.append(buffer, read);
    }
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string fixture_path(const std::string& name) {
    return std::string(CONDASP_FIXTURE_DIR) + "/" + name;
}

std::string temp_file(const std::string& name, const std::string& content) {
    std::filesystem::path path =
        std::filesystem::temp_directory_path() / ("condasp_test_" + name);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    REQUIRE(out.good());
    out << content;
    out.close();
    return path.string();
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string::npos) end = text.size();
        lines.push_back(text.substr(start, end - start));
        start = end + 1;
    }
    return lines;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("solve lists answer sets in canonical order") {
    std::string program = temp_file("choice.lp", "a. {b}.\n");
    RunResult r = run_cli("solve --program " + program);
    CHECK(r.exit_code == 0);
    CHECK(r.output == "a\na b\n");
}

TEST_CASE("solve reports an inconsistent program with exit 1") {
    std::string program = temp_file("inconsistent.lp", ":- not a.\n");
    RunResult text = run_cli("solve --program " + program);
    CHECK(text.exit_code == 1);
    CHECK(contains(text.output, "program inconsistent"));

    RunResult as_json = run_cli("solve --program " + program + " --format json");
    CHECK(as_json.exit_code == 1);
    json doc = json::parse(as_json.output);
    CHECK(doc.at("version") == 1);
    CHECK(doc.at("count") == 0);
    CHECK(doc.at("error") == "program inconsistent");
}

TEST_CASE("parse failures exit 2") {
    std::string program = temp_file("broken.lp", "a :- \n");
    RunResult r = run_cli("solve --program " + program, /*merge_stderr=*/true);
    CHECK(r.exit_code == 2);
    CHECK(contains(r.output, "error:"));

    RunResult missing = run_cli("solve --program /nonexistent/path.lp",
                                /*merge_stderr=*/true);
    CHECK(missing.exit_code == 2);
    CHECK(contains(missing.output, "cannot open"));
}

TEST_CASE("query without a knowledge base exits 3") {
    RunResult r = run_cli("query --program " + fixture_path("students.lp") +
                              " --query 'T(student) -> young'",
                          /*merge_stderr=*/true);
    CHECK(r.exit_code == 3);
    CHECK(contains(r.output, "--allow-no-kb"));
}

TEST_CASE("combining a ranked subject exits 4") {
    RunResult r = run_cli("query --program " + fixture_path("horses.lp") + " --kb " +
                              fixture_path("horses.kb") +
                              " --query 'T(horse & run_fast) -> has_tail'",
                          /*merge_stderr=*/true);
    CHECK(r.exit_code == 4);
    CHECK(contains(r.output, "error:"));
}

TEST_CASE("exceeding the answer set cap exits 5") {
    RunResult r = run_cli("solve --program " + fixture_path("students.lp") +
                              " --max-answer-sets 1",
                          /*merge_stderr=*/true);
    CHECK(r.exit_code == 5);
    CHECK(contains(r.output, "error:"));

    RunResult enough = run_cli("solve --program " + fixture_path("students.lp") +
                               " --max-answer-sets 2");
    CHECK(enough.exit_code == 0);
}

TEST_CASE("a non-entailed query exits 10 and shows the first counterexample") {
    RunResult r = run_cli("query --program " + fixture_path("students.lp") + " --kb " +
                          fixture_path("students.kb") + " --query 'T(student) -> has_boss'");
    CHECK(r.exit_code == 10);
    std::vector<std::string> lines = lines_of(r.output);
    REQUIRE(!lines.empty());
    CHECK(lines[0] == "NOT ENTAILED");
    CHECK(contains(r.output, "counterexample: {"));
    CHECK(contains(r.output, "T(student): maxw = 170"));
}

TEST_CASE("an entailed query exits 0 in both formats") {
    std::string base = "query --program " + fixture_path("students.lp") + " --kb " +
                       fixture_path("students.kb") + " --query 'T(student) -> young'";

    RunResult text = run_cli(base);
    CHECK(text.exit_code == 0);
    std::vector<std::string> lines = lines_of(text.output);
    REQUIRE(!lines.empty());
    CHECK(lines[0] == "ENTAILED");
    CHECK_FALSE(contains(text.output, "counterexample"));

    RunResult as_json = run_cli(base + " --format json");
    CHECK(as_json.exit_code == 0);
    json doc = json::parse(as_json.output);
    CHECK(doc.at("version") == 1);
    CHECK(doc.at("verdict") == "ENTAILED");
    CHECK(doc.at("entailed") == true);
    CHECK(doc.at("counterexample").is_null());
    REQUIRE(doc.at("typ_witnesses").size() == 1);
    const json& witness = doc.at("typ_witnesses")[0];
    CHECK(witness.at("subject") == "student");
    CHECK(witness.at("max_weight") == 170);
    REQUIRE(witness.at("typical_worlds").size() == 1);
    std::size_t index = witness.at("typical_worlds")[0].get<std::size_t>();
    const json& world = doc.at("worlds").at(index);
    bool has_young = false;
    for (const json& atom : world) has_young = has_young || atom == "young";
    CHECK(has_young);
}

TEST_CASE("model emits the weight table as json") {
    RunResult r = run_cli("model --program " + fixture_path("students.lp") + " --kb " +
                          fixture_path("students.kb") + " --format json");
    REQUIRE(r.exit_code == 0);
    json doc = json::parse(r.output);
    CHECK(doc.at("version") == 1);
    REQUIRE(doc.at("worlds").size() == 2);
    // Canonical world order puts the has_boss world first.
    CHECK(doc.at("weights").at("student") == json::array({-80, 170}));
    CHECK(doc.at("weights").at("employee") == json::array({100, -120}));
    CHECK(doc.at("max") == 170);
    CHECK(doc.at("min") == -120);
}

TEST_CASE("model includes ranked satisfaction counts") {
    RunResult r = run_cli("model --program " + fixture_path("horses.lp") + " --kb " +
                          fixture_path("horses.kb") + " --format json");
    REQUIRE(r.exit_code == 0);
    json doc = json::parse(r.output);
    CHECK(doc.at("worlds").size() == 16);
    REQUIRE(doc.contains("ranks"));
    const json& horse = doc.at("ranks").at("horse");
    REQUIRE(horse.contains("0"));
    REQUIRE(horse.contains("1"));
    CHECK(horse.at("0").size() == 16);
    CHECK(horse.at("1").size() == 16);
}

TEST_CASE("model runs without a knowledge base when allowed") {
    RunResult r = run_cli("model --program " + fixture_path("students.lp") +
                          " --allow-no-kb");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "S0 = {"));
    CHECK(contains(r.output, "S1 = {"));
}

TEST_CASE("solve output is deterministic across runs") {
    std::string args = "solve --program " + fixture_path("cinema.lp");
    RunResult first = run_cli(args);
    RunResult second = run_cli(args);
    CHECK(first.exit_code == 0);
    CHECK(first.output == second.output);
    CHECK(contains(first.output, "go_to_cinema(mary)"));
}

TEST_CASE("queries can be read from a file") {
    std::string query = temp_file("query.txt", "T(student) -> young\n");
    RunResult r = run_cli("query --program " + fixture_path("students.lp") + " --kb " +
                          fixture_path("students.kb") + " --query-file " + query);
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "ENTAILED"));

    RunResult no_query = run_cli("query --program " + fixture_path("students.lp") +
                                     " --kb " + fixture_path("students.kb"),
                                 /*merge_stderr=*/true);
    CHECK(no_query.exit_code == 2);
    CHECK(contains(no_query.output, "no query given"));
}

TEST_CASE("unknown format values are rejected by argument parsing") {
    RunResult r = run_cli("solve --program " + fixture_path("students.lp") +
                              " --format yaml",
                          /*merge_stderr=*/true);
    CHECK(r.exit_code != 0);
}

TEST_CASE("dump-ground writes the ground program to stderr only") {
    std::string args = "solve --program " + fixture_path("students.lp") + " --dump-ground";
    RunResult stdout_only = run_cli(args);
    CHECK(stdout_only.exit_code == 0);
    CHECK_FALSE(contains(stdout_only.output, ":-"));

    RunResult merged = run_cli(args, /*merge_stderr=*/true);
    CHECK(merged.exit_code == 0);
    CHECK(contains(merged.output, ":-"));
}

TEST_CASE("verify-klm is deterministic and reports its verdict") {
    std::string args = "verify-klm --seeds 2 --trials 3 --format json";
    RunResult first = run_cli(args);
    RunResult second = run_cli(args);
    CHECK(first.output == second.output);
    CHECK((first.exit_code == 0 || first.exit_code == 6));

    json doc = json::parse(first.output);
    CHECK(doc.at("version") == 1);
    CHECK(doc.at("seeds") == 2);
    CHECK(doc.at("trials_per_seed") == 3);
    CHECK(doc.at("applications").get<std::size_t>() >= 6);
    REQUIRE(doc.at("violations").is_array());
    if (doc.at("violations").empty()) {
        CHECK(first.exit_code == 0);
    } else {
        CHECK(first.exit_code == 6);
    }
}
