#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <sys/wait.h>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(TREEW_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    std::array<char, 4096> buffer{};
    std::size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
        result.out.append(buffer.data(), got);
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string fixture(const std::string& name) {
    return std::string(FIXTURE_DIR) + "/" + name;
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("kweights on the three-leaf star") {
    const auto r = run("kweights --tree " + fixture("tree_star3.json") + " --k 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"1,2\": \"5\"") != std::string::npos);
    CHECK(r.out.find("\"1,3\": \"4\"") != std::string::npos);
    CHECK(r.out.find("\"2,3\": \"3\"") != std::string::npos);
}

TEST_CASE("kweights exit codes") {
    CHECK(run("kweights --tree " + fixture("tree_star3.json") + " --k 7")
              .exit_code == 1);
    CHECK(run("kweights --tree " + fixture("malformed.json") + " --k 2")
              .exit_code == 2);
    CHECK(run("kweights --tree /nonexistent.json --k 2").exit_code == 2);
}

TEST_CASE("check reports the classification") {
    const auto r = run("check --family " + fixture("fam_one_equality3.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"status\": \"one_equality\"") != std::string::npos);
    CHECK(r.out.find("\"c\": 3") != std::string::npos);
    CHECK(r.out.find("\"M\": 1") != std::string::npos);
}

TEST_CASE("check reports four-point failures") {
    const auto r = run("check --family " + fixture("fam_two_notreelike4.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"status\": \"not_treelike\"") != std::string::npos);
}

TEST_CASE("reconstruct errors outside the simplex") {
    const auto r = run("reconstruct --family " + fixture("fam_allstrict4.json") +
                       " --topology " + fixture("topo_caterpillar4.json") +
                       " --coords 3");
    CHECK(r.exit_code == 1);
}

TEST_CASE("op rejects contracting a twig") {
    const auto r = run("op --tree " + fixture("tree_caterpillar4.json") +
                       " --contract 1,5 --r 1");
    CHECK(r.exit_code == 1);
}

TEST_CASE("identical runs produce identical bytes") {
    const std::string args =
        "moduli --family " + fixture("fam_allstrict4.json") + " --topology " +
        fixture("topo_caterpillar4.json");
    const auto first = run(args);
    const auto second = run(args);
    CHECK(first.exit_code == 0);
    CHECK(first.out == second.out);
}

TEST_SUITE_END();
