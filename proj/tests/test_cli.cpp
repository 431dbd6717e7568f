#include <json.hpp>

#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + " " + EXKAT_BIN + " " + args + " 2>/dev/null";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
    const int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::filesystem::path scratch(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / "exkat_cli_test";
    std::filesystem::create_directories(dir);
    return dir / name;
}

} // namespace

TEST_CASE("verify on the pentagon passes") {
    const Run r = run("verify --gen cluster-a:2 --subcat \"13,14\" --suite additivity");
    CHECK(r.code == 0);
    CHECK(r.out.find("pass  additivity/cluster-a:2/{13,14}") != std::string::npos);
}

TEST_CASE("validate reports a corrupted table") {
    const auto good = scratch("good.json"), broken = scratch("broken.json");
    REQUIRE(run("gen --gen cluster-a:2 --out " + good.string()).code == 0);
    CHECK(run("validate --table " + good.string()).code == 0);

    nlohmann::ordered_json j;
    {
        std::ifstream f(good);
        j = nlohmann::ordered_json::parse(f);
    }
    bool changed = false;
    for (auto& e : j["comp"]) {
        if (e["a"] == "13" && e["b"] == "13" && e["c"] == "35") {
            e["constants"][0] = "3/1";
            changed = true;
            break;
        }
    }
    REQUIRE(changed);
    {
        std::ofstream f(broken);
        f << j.dump(1);
    }
    const Run r = run("validate --format json --table " + broken.string());
    CHECK(r.code == 1);
    const auto report = nlohmann::json::parse(r.out);
    CHECK_FALSE(report["ok"].get<bool>());
    bool assoc = false;
    for (const auto& i : report["issues"]) assoc = assoc || i["kind"] == "associativity";
    CHECK(assoc);
}

TEST_CASE("k0 of the hexagon category") {
    const Run r = run("k0 --gen cluster-a:3 --structure full --format json");
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["group"]["free_rank"] == 1);
    CHECK(j["group"]["torsion"].empty());
}

TEST_CASE("index and check subcommands") {
    Run r = run("index --gen pentagon --subcat 24,25 --object 35");
    CHECK(r.code == 0);
    CHECK(r.out.find("[35] =") != std::string::npos);
    r = run("check --gen cluster-a:2 --predicate thick --structure n-right --subcat 14,13");
    CHECK(r.code == 1);
    CHECK(r.out.find("cocone 24 not in N") != std::string::npos);
    r = run("check --gen cluster-a:2 --predicate extension-closed --structure n-right --subcat 14,13");
    CHECK(r.code == 0);
}

TEST_CASE("exit codes") {
    CHECK(run("").code == 64);
    CHECK(run("verify --gen cluster-a:2 --subcat 13 --suite nonsense").code == 64);
    CHECK(run("verify --gen cluster-a:2 --suite theta").code == 64);
    CHECK(run("k0 --gen triangle:3").code == 64);
    CHECK(run("k0 --gen cluster-a:2 --table x.json").code == 64);
    CHECK(run("verify --gen cluster-a:1 --subcat 13,24 --suite higher").code == 2);
    CHECK(run("k0 --gen cluster-a:40").code == 2);
    CHECK(run("verify --gen cluster-a:3 --subcat 13,35,15 --suite higher").code == 0);
}

TEST_CASE("reports are reproducible and record the seed") {
    const std::string args = "report --gen cluster-a:2 --all-triangulations --seed 9";
    const Run a = run(args + " --jobs 1"), b = run(args + " --jobs 1");
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
    const auto j = nlohmann::json::parse(a.out);
    CHECK(j["schema"] == "report-v1");
    CHECK(j["seed"] == 9);
    CHECK(j["summary"]["fail"] == 0);
    CHECK(j["checks"].size() == j["summary"]["total"]);

    const Run env = run(args + " --jobs 1", "EXKAT_SEED=123");
    CHECK(nlohmann::json::parse(env.out)["seed"] == 123);

    // parallel assembly gives the same bytes apart from the command line
    auto strip = [](std::string s) {
        auto j = nlohmann::ordered_json::parse(s);
        j.erase("command");
        return j.dump();
    };
    CHECK(strip(run(args + " --jobs 4").out) == strip(a.out));
}
