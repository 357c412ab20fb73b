#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include <nlohmann/json.hpp>

#include "fixtures.hpp"
#include "mvrcg/evaluate.hpp"
#include "mvrcg/learner.hpp"
#include "mvrcg/simulate.hpp"

using namespace mvrcg;

TEST(LearnerConfig, VariantNamesRoundTrip) {
    for (const auto& name : known_variants()) {
        EXPECT_EQ(LearnerConfig::from_variant(name).variant_name(), name);
    }
    const auto c = LearnerConfig::from_variant("original-lcpc");
    EXPECT_EQ(c.skeleton, SkeletonMode::original);
    EXPECT_EQ(c.triples, TripleMode::conservative);
    EXPECT_EQ(c.rules, RuleMode::list);
    const auto d = LearnerConfig{};
    EXPECT_EQ(d.variant_name(), "stable-lmpc");
    EXPECT_DOUBLE_EQ(d.alpha, 0.005);
    EXPECT_THROW(LearnerConfig::from_variant("stable-xyz"), ConfigError);
    EXPECT_THROW(LearnerConfig::from_variant("pc"), ConfigError);
    EXPECT_THROW(LearnerConfig::from_variant("originallmpc"), ConfigError);
}

TEST(LearnerConfig, Validation) {
    LearnerConfig c;
    EXPECT_NO_THROW(c.validate(3));
    c.alpha = 0;
    EXPECT_THROW(c.validate(3), ConfigError);
    c = {};
    c.ordering = {0, 0, 1};
    EXPECT_THROW(c.validate(3), ConfigError);
    c = {};
    c.majority = {70, 30};
    EXPECT_THROW(c.validate(3), ConfigError);
    c = {};
    c.workers = 0;
    EXPECT_THROW(c.validate(3), ConfigError);
    EXPECT_EQ(LearnerConfig::from_variant("stable-cpc").thresholds().lo, 0.0);
}

TEST(Learn, OracleRecoversEssentialGraphForEveryVariant) {
    std::mt19937_64 rng(31);
    for (int rep = 0; rep < 25; ++rep) {
        const auto truth = random_mvr_cg({3 + rep % 5, 2.0, 1000 + static_cast<std::uint64_t>(rep), std::nullopt});
        const auto expected = essential_graph(truth);
        const OracleTester oracle(truth);
        auto o = identity_ordering(truth.size());
        std::shuffle(o.begin(), o.end(), rng);
        for (const auto& name : known_variants()) {
            SCOPED_TRACE(name + " rep " + std::to_string(rep));
            auto config = LearnerConfig::from_variant(name);
            config.ordering = o;
            const auto r = learn(oracle, truth.labels(), config);
            EXPECT_EQ(r.essential, expected);
            EXPECT_TRUE(markov_equivalent(r.skeleton, truth.skeleton()));
            ASSERT_TRUE(r.final_graph.has_value());
            EXPECT_TRUE(markov_equivalent(*r.final_graph, truth));
            EXPECT_TRUE(r.diagnostics.final_is_chain_graph);
            EXPECT_TRUE(r.ambiguous_triples.empty());
        }
    }
}

TEST(Learn, DiagnosticsJsonFields) {
    const auto g = fixtures::sepset_truth();
    const auto tester = fixtures::three_sepsets_tester();
    auto config = LearnerConfig::from_variant("stable-cpc");
    config.record_trace = true;
    const auto r = learn(*tester, g.labels(), config);
    EXPECT_FALSE(r.trace.empty());
    EXPECT_EQ(r.diagnostics.tests_performed, tester->call_count());
    const auto j = nlohmann::json::parse(diagnostics_json(r, config, g.labels()));
    EXPECT_EQ(j["variant"], "stable-cpc");
    EXPECT_EQ(j["ordering"], nlohmann::json({"a", "b", "c", "d", "e"}));
    EXPECT_EQ(j["ambiguous_triples"], nlohmann::json::parse(R"([["c","e","d"]])"));
    EXPECT_EQ(j["tests_performed"].get<std::size_t>(), r.diagnostics.tests_performed);
    for (const char* key : {"alpha", "removals_per_level", "runtime_ms"}) EXPECT_TRUE(j.contains(key)) << key;
}

TEST(Learn, NonChordalRemainderIsReportedNotThrown) {
    // A scripted tester that keeps exactly a 4-cycle with no colliders.
    const auto cycle = fixtures::graph("vertices: a,b,c,d\na -- b\nb -- c\nc -- d\nd -- a\n");
    std::vector<ScriptedAnswer> script;
    for (Vertex u = 0; u < 4; ++u)
        for (Vertex v = u + 1; v < 4; ++v) {
            if (cycle.adjacent(u, v)) continue;
            for (Vertex w = 0; w < 4; ++w)
                if (w != u && w != v) {
                    script.push_back({u, v, {}, false});
                    script.push_back({u, v, {w}, true});
                }
        }
    // every other query: dependent
    const ScriptedTester tester(std::make_shared<OracleTester>(MixedGraph::complete_undirected(cycle.labels())), script);
    const auto r = learn(tester, cycle.labels(), LearnerConfig::from_variant("stable-lmpc"));
    EXPECT_EQ(r.skeleton, cycle);
    EXPECT_FALSE(r.final_graph.has_value());
    EXPECT_FALSE(r.diagnostics.final_error.empty());
}

TEST(Learn, StableListVariantsIgnoreOrderingOnData) {
    const auto truth = random_mvr_cg({8, 2.0, 77, std::nullopt});
    const auto data = sample_gaussian(cg_to_dag_with_latents(truth, 1), 300, 2);
    const GaussianTester tester(SufficientStats::from_dataset(data), 0.05);
    std::mt19937_64 rng(5);
    for (const char* name : {"stable-lcpc", "stable-lmpc"}) {
        auto config = LearnerConfig::from_variant(name);
        const auto base = learn(tester, data.columns, config);
        for (int rep = 0; rep < 5; ++rep) {
            config.ordering = identity_ordering(8);
            std::shuffle(config.ordering.begin(), config.ordering.end(), rng);
            const auto r = learn(tester, data.columns, config);
            EXPECT_EQ(r.essential, base.essential);
            EXPECT_EQ(r.final_graph, base.final_graph);
        }
    }
}

TEST(Learn, WorkersDoNotChangeTheResult) {
    const auto truth = random_mvr_cg({9, 2.0, 5, std::nullopt});
    const auto data = sample_gaussian(cg_to_dag_with_latents(truth, 3), 500, 4);
    const GaussianTester tester(SufficientStats::from_dataset(data), 0.01);
    auto config = LearnerConfig::from_variant("stable-lmpc");
    const auto one = learn(tester, data.columns, config);
    config.workers = 3;
    const auto three = learn(tester, data.columns, config);
    EXPECT_EQ(one.essential, three.essential);
    EXPECT_EQ(one.sepsets, three.sepsets);
}
