#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args, const std::string& env = {}) {
    const std::string cmd = (env.empty() ? "" : env + " ") + std::string(EQCOLOR_CLI_PATH) + " " + args + " 2>&1";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

class Cli : public ::testing::Test {
protected:
    void SetUp() override {
        const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
        dir_ = fs::temp_directory_path() / (std::string("eqcolor_cli_") + info->name() + "_" + std::to_string(::getpid()));
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string file(const std::string& name, const std::string& text = {}) {
        const fs::path p = dir_ / name;
        if (!text.empty()) std::ofstream(p) << text;
        return p.string();
    }

    static std::string slurp(const std::string& path) {
        std::ifstream in(path);
        std::ostringstream os;
        os << in.rdbuf();
        return os.str();
    }

    fs::path dir_;
};

const char* kCycle = "p edge 6 6\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 6\ne 1 6\n";

} // namespace

TEST_F(Cli, ComputeJson) {
    auto r = run("compute --parts 1,2 --n 3 --format json");
    ASSERT_EQ(r.code, 0) << r.out;
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["chi_eq"], 3);
    EXPECT_EQ(doc["chi_eq_star"], 3);
    EXPECT_EQ(doc["case"], "Case1");
    EXPECT_TRUE(doc["h_star"].is_null());
}

TEST_F(Cli, ComputeCaseTwo) {
    auto r = run("compute --parts 1,1 --n 4 --format json");
    ASSERT_EQ(r.code, 0) << r.out;
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["chi_eq_star"], 2);
    EXPECT_EQ(doc["case"], "Case2");
    EXPECT_EQ(doc["h_star"], 5);
}

TEST_F(Cli, ComputeEdgeless) {
    auto r = run("compute --parts 1 --n 5 --format json");
    ASSERT_EQ(r.code, 0) << r.out;
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["chi_eq"], 1);
    EXPECT_EQ(doc["chi_eq_star"], 1);
}

TEST_F(Cli, ComputeText) {
    auto r = run("compute --parts 1,2 --n 3");
    ASSERT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("χ=(G)  = 3"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("χ=*(G) = 3"), std::string::npos) << r.out;
}

TEST_F(Cli, ComputeOutOfScope) {
    auto r = run("compute --parts 2,2 --n 3");
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.out.find("OutOfScope"), std::string::npos);
    EXPECT_NE(r.out.find("--oracle"), std::string::npos);

    r = run("compute --parts 2,2 --n 3 --oracle --format json");
    ASSERT_EQ(r.code, 0) << r.out;
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["source"], "oracle");
    EXPECT_GE(doc["chi_eq_star"].get<int>(), doc["chi_eq"].get<int>());
}

TEST_F(Cli, UsageErrors) {
    EXPECT_EQ(run("compute --parts 1,x --n 3").code, 2);
    EXPECT_EQ(run("compute --parts 1,0 --n 3").code, 2);
    EXPECT_EQ(run("compute --n 3").code, 2);
    EXPECT_EQ(run("frobnicate").code, 2);
    EXPECT_EQ(run("--help").code, 0);
}

TEST_F(Cli, ConstructSixCycle) {
    auto r = run("construct --parts 1,1 --n 3 --k 2");
    ASSERT_EQ(r.code, 0) << r.out;
    std::istringstream in(r.out);
    std::string line;
    int lines = 0;
    int sizes[3] = {0, 0, 0};
    while (std::getline(in, line)) {
        int v = 0, c = 0;
        ASSERT_EQ(std::sscanf(line.c_str(), "s %d %d", &v, &c), 2) << line;
        ASSERT_TRUE(c == 1 || c == 2);
        ++sizes[c];
        ++lines;
    }
    EXPECT_EQ(lines, 6);
    EXPECT_EQ(sizes[1], 3);
    EXPECT_EQ(sizes[2], 3);
}

TEST_F(Cli, ConstructInfeasible) {
    auto r = run("construct --parts 1,1,1 --n 3 --k 2");
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("infeasible"), std::string::npos);
    EXPECT_EQ(run("construct --parts 1,1,1 --n 3 --k 2 --oracle").code, 1);
}

TEST_F(Cli, ConstructEdgeless) {
    auto r = run("construct --parts 1 --n 4 --k 1 --format json");
    ASSERT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(r.out, "{\"k\":1,\"colors\":[1,1,1,1]}\n");
}

TEST_F(Cli, ConstructBudget) {
    auto r = run("construct --parts 1,1,1 --n 3 --k 2 --budget 1");
    EXPECT_EQ(r.code, 3) << r.out;
    EXPECT_NE(r.out.find("budget"), std::string::npos);
    r = run("construct --parts 1,1,1 --n 3 --k 2", "EQCOLOR_BUDGET=1");
    EXPECT_EQ(r.code, 3) << r.out;
}

TEST_F(Cli, RoundTrip) {
    const std::vector<std::string> cases = {"--parts 1,2 --n 3 --k 3", "--parts 1,1 --n 4 --k 3",
                                            "--parts 2,1,1 --n 5 --k 7", "--parts 1,1,1 --n 3 --k 4"};
    for (const auto& args : cases) {
        for (const char* format : {"dimacs", "json"}) {
            const std::string graph = file("g.col");
            const std::string coloring = file("c.txt");
            auto r = run("construct " + args + " --format " + format + " --graph-output " + graph + " -o " + coloring);
            ASSERT_EQ(r.code, 0) << args << ": " << r.out;
            r = run("verify " + graph + " " + coloring);
            EXPECT_EQ(r.code, 0) << args << " " << format << ": " << r.out;
            EXPECT_EQ(r.out, "ok\n");
        }
    }
}

TEST_F(Cli, GraphExport) {
    auto r = run("graph --parts 1,1 --n 3");
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "p edge 6 6\ne 1 5\ne 1 6\ne 2 4\ne 2 6\ne 3 4\ne 3 5\n");
    r = run("graph --parts 1,1 --n 2 --multipartite");
    EXPECT_EQ(r.out, "p edge 4 4\ne 1 3\ne 1 4\ne 2 3\ne 2 4\n");
}

TEST_F(Cli, VerifyVerdicts) {
    const std::string graph = file("c6.col", kCycle);
    auto r = run("verify " + graph + " " + file("alt.txt", "s 1 1\ns 2 2\ns 3 1\ns 4 2\ns 5 1\ns 6 2\n"));
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "ok\n");

    r = run("verify " + graph + " " + file("one.json", "{\"k\":1,\"colors\":[1,1,1,1,1,1]}"));
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.out, "ImproperEdge(1,2)\n");

    r = run("verify " + graph + " " + file("split.txt", "s 1 1\ns 2 2\ns 3 1\ns 4 2\ns 5 1\ns 6 3\n"));
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.out, "NotEquitable(3,2,1)\n");
}

TEST_F(Cli, VerifyParseErrors) {
    const std::string graph = file("c6.col", kCycle);
    auto r = run("verify " + file("bad.col", "p edge 3 1\ne 1 2\ne 1 x\n") + " " + file("c.txt", "s 1 1\n"));
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.out.find("line 3"), std::string::npos) << r.out;

    r = run("verify " + graph + " " + file("bad.txt", "s 1 1\ns 2 2\nq 3 1\n"));
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.out.find("line 3"), std::string::npos) << r.out;

    EXPECT_EQ(run("verify " + graph + " " + file("short.txt", "s 1 1\ns 2 2\n")).code, 2);
    EXPECT_EQ(run("verify " + graph + " /nonexistent/coloring").code, 2);
}

TEST_F(Cli, SweepSingleSpec) {
    auto r = run("sweep --parts 1,1 --n 3 --format json");
    ASSERT_EQ(r.code, 0) << r.out;
    const auto doc = nlohmann::json::parse(r.out);
    ASSERT_EQ(doc["rows"].size(), 6u);
    EXPECT_EQ(doc["rows"][0]["oracle"], false);
    for (std::size_t i = 1; i < 6; ++i) EXPECT_EQ(doc["rows"][i]["oracle"], true);
    EXPECT_EQ(doc["disagreements"], 0);
}

TEST_F(Cli, SweepDefaultsText) {
    auto r = run("sweep");
    ASSERT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("0 disagreements, 0 budget flags"), std::string::npos);
}
