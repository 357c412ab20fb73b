#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "fixtures.hpp"
#include "mvrcg/criteria.hpp"
#include "mvrcg/dataset.hpp"
#include "mvrcg/graph_io.hpp"

namespace fs = std::filesystem;
using namespace mvrcg;

namespace {

class Cli : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("mvrcg_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    int run(std::vector<std::string> args) {
        args.insert(args.begin(), "mvrcg");
        out_.str("");
        err_.str("");
        return cli::run(args, out_, err_);
    }
    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    fs::path dir_;
    std::ostringstream out_, err_;
};

}  // namespace

TEST_F(Cli, GenerateIsDeterministic) {
    ASSERT_EQ(run({"generate", "--p", "10", "--N", "2", "--seed", "1", "--out", path("a.graph")}), 0);
    ASSERT_EQ(run({"generate", "--p", "10", "--N", "2", "--seed", "1", "--out", path("b.graph")}), 0);
    EXPECT_EQ(read_file(path("a.graph")), read_file(path("b.graph")));
    const auto g = read_edge_list(path("a.graph"));
    EXPECT_EQ(g.size(), 10);
    EXPECT_FALSE(has_partially_directed_cycle(g));
    const auto m = nlohmann::json::parse(read_file(path("a.graph.manifest.json")));
    EXPECT_EQ(m["command"], "generate");
    EXPECT_EQ(m["seeds"]["graph"], 1);
    EXPECT_TRUE(m.contains("tool_version"));
    EXPECT_TRUE(m.contains("wall_clock_ms"));
}

TEST_F(Cli, GenerateSingleVertex) {
    ASSERT_EQ(run({"generate", "--p", "1", "--out", path("one.graph")}), 0);
    EXPECT_EQ(read_edge_list(path("one.graph")).size(), 1);
}

TEST_F(Cli, SampleDropsLatents) {
    write_file_atomic(path("g.graph"), "vertices: a,b,c\na <-> b\nb -> c\n");
    ASSERT_EQ(run({"sample", "--graph", path("g.graph"), "--n", "5", "--seed", "3", "--out", path("d.csv")}), 0);
    const auto d = read_csv(path("d.csv"));
    EXPECT_EQ(d.columns, (std::vector<std::string>{"a", "b", "c"}));
    EXPECT_EQ(d.sample_count(), 5);
    ASSERT_EQ(run({"sample", "--graph", path("g.graph"), "--n", "5", "--seed", "3", "--out", path("e.csv")}), 0);
    EXPECT_EQ(read_file(path("d.csv")), read_file(path("e.csv")));
    EXPECT_EQ(nlohmann::json::parse(read_file(path("d.csv.manifest.json")))["parameters"]["latent_count"], 1);
}

TEST_F(Cli, SampleRejectsUndirectedGraph) {
    write_file_atomic(path("g.graph"), "a -- b\n");
    EXPECT_EQ(run({"sample", "--graph", path("g.graph"), "--n", "5", "--out", path("d.csv")}), 2);
    EXPECT_FALSE(fs::exists(path("d.csv")));
}

TEST_F(Cli, LearnWithOracleIsMarkovEquivalent) {
    ASSERT_EQ(run({"generate", "--p", "8", "--seed", "4", "--out", path("t.graph")}), 0);
    ASSERT_EQ(run({"learn", "--oracle", path("t.graph"), "--variant", "stable-lmpc", "--out-prefix", path("r")}), 0);
    const auto truth = read_edge_list(path("t.graph"));
    const auto final_graph = read_edge_list(path("r.final.graph"));
    EXPECT_TRUE(markov_equivalent(final_graph, truth));
    const auto diag = nlohmann::json::parse(read_file(path("r.diagnostics.json")));
    EXPECT_EQ(diag["variant"], "stable-lmpc");
    EXPECT_TRUE(fs::exists(path("r.essential.graph")));
    EXPECT_TRUE(fs::exists(path("r.manifest.json")));
}

TEST_F(Cli, StableSkeletonIgnoresSeedOrdering) {
    ASSERT_EQ(run({"generate", "--p", "9", "--seed", "6", "--out", path("t.graph")}), 0);
    ASSERT_EQ(run({"sample", "--graph", path("t.graph"), "--n", "300", "--seed", "1", "--out", path("d.csv")}), 0);
    ASSERT_EQ(run({"learn", "--data", path("d.csv"), "--variant", "stable", "--order", "seed:1", "--alpha", "0.05",
                   "--out-prefix", path("s1")}), 0);
    ASSERT_EQ(run({"learn", "--data", path("d.csv"), "--variant", "stable", "--order", "seed:2", "--alpha", "0.05",
                   "--out-prefix", path("s2")}), 0);
    EXPECT_EQ(read_edge_list(path("s1.essential.graph")).skeleton(), read_edge_list(path("s2.essential.graph")).skeleton());
}

TEST_F(Cli, OrderFromFile) {
    write_file_atomic(path("g.graph"), "vertices: a,b,c\na -> b\nc -> b\n");
    write_file_atomic(path("order.txt"), "c, b\na\n");
    EXPECT_EQ(run({"learn", "--oracle", path("g.graph"), "--order", "file:" + path("order.txt"), "--out-prefix",
                   path("r")}), 0);
    const auto diag = nlohmann::json::parse(read_file(path("r.diagnostics.json")));
    EXPECT_EQ(diag["ordering"], nlohmann::json({"c", "b", "a"}));
    write_file_atomic(path("bad.txt"), "c b\n");
    EXPECT_EQ(run({"learn", "--oracle", path("g.graph"), "--order", "file:" + path("bad.txt"), "--out-prefix",
                   path("x")}), 2);
    EXPECT_EQ(run({"learn", "--oracle", path("g.graph"), "--order", "random", "--out-prefix", path("x")}), 2);
    EXPECT_FALSE(fs::exists(path("x.essential.graph")));
}

TEST_F(Cli, UsageAndInputErrors) {
    EXPECT_EQ(run({}), 1);
    EXPECT_EQ(run({"frobnicate"}), 1);
    EXPECT_EQ(run({"learn"}), 1);
    EXPECT_EQ(run({"generate", "--p", "x", "--out", path("a")}), 1);
    write_file_atomic(path("g.graph"), "a -> b\n");
    write_file_atomic(path("d.csv"), "a,b\n1,2\n");
    EXPECT_EQ(run({"learn", "--oracle", path("g.graph"), "--data", path("d.csv")}), 1);
    EXPECT_EQ(run({"learn", "--oracle", path("g.graph"), "--variant", "bogus"}), 2);
    EXPECT_EQ(run({"learn", "--oracle", path("g.graph"), "--variant", "stable-cpc", "--mpc-lo", "40"}), 2);
    EXPECT_EQ(run({"learn", "--data", path("missing.csv")}), 2);
    write_file_atomic(path("bad.csv"), "a,b\n1,oops\n");
    EXPECT_EQ(run({"learn", "--data", path("bad.csv"), "--out-prefix", path("q")}), 2);
    EXPECT_FALSE(fs::exists(path("q.essential.graph")));
    write_file_atomic(path("cyc.graph"), "a -> b\nb <-> c\nc -> a\n");
    EXPECT_EQ(run({"learn", "--oracle", path("cyc.graph")}), 2);
    EXPECT_EQ(run({"--version"}), 0);
}

TEST_F(Cli, BenchOracleGridAndRerun) {
    write_file_atomic(path("grid.json"), R"({"p":[6],"n":[100],"replicates":1,"variants":["original","stable-lmpc"],"oracle":true})");
    ASSERT_EQ(run({"bench", "--grid", path("grid.json"), "--out-prefix", path("b1"), "--deterministic"}), 0);
    ASSERT_EQ(run({"bench", "--grid", path("grid.json"), "--out-prefix", path("b2"), "--deterministic"}), 0);
    const auto csv = read_file(path("b1.csv"));
    EXPECT_EQ(csv, read_file(path("b2.csv")));
    EXPECT_EQ(read_file(path("b1.summary.json")), read_file(path("b2.summary.json")));
    std::istringstream lines(csv);
    std::string header, row;
    std::getline(lines, header);
    int rows = 0;
    while (std::getline(lines, row)) {
        ++rows;
        // shd column is the tenth field
        std::stringstream fields(row);
        std::string f;
        for (int i = 0; i < 10; ++i) std::getline(fields, f, ',');
        EXPECT_EQ(f, "0") << row;
    }
    EXPECT_EQ(rows, 2);
    write_file_atomic(path("bad.json"), R"({"p":[6],"replicates":0})");
    EXPECT_EQ(run({"bench", "--grid", path("bad.json"), "--out-prefix", path("b3")}), 2);
    EXPECT_FALSE(fs::exists(path("b3.csv")));
}
