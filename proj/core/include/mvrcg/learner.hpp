#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mvrcg/citest.hpp"
#include "mvrcg/rules.hpp"
#include "mvrcg/skeleton.hpp"
#include "mvrcg/triples.hpp"

namespace mvrcg {

enum class SkeletonMode { original, stable };
enum class TripleMode { plain, conservative, majority };

/// Selects one variant of the PC-like learner.
///
/// Named variants: "original" and "stable" use sepset-based v-structures and
/// sequential rules; "<skeleton>-cpc" / "<skeleton>-mpc" classify triples
/// conservatively / by majority; "<skeleton>-lcpc" / "<skeleton>-lmpc" add
/// list-based rules. "<skeleton>" is "original" or "stable".
struct LearnerConfig {
    SkeletonMode skeleton = SkeletonMode::stable;
    TripleMode triples = TripleMode::majority;
    RuleMode rules = RuleMode::list;
    double alpha = 0.005;  // recorded in diagnostics; the tester owns the actual test
    Ordering ordering;     // empty = declared variable order
    MajorityThresholds majority{};
    int workers = 1;
    bool record_trace = false;

    static LearnerConfig from_variant(std::string_view name);
    std::string variant_name() const;
    /// Thresholds actually used for triple labels (conservative forces 0/100).
    MajorityThresholds thresholds() const;
    void validate(int p) const;
};

/// All variant names accepted by LearnerConfig::from_variant.
std::vector<std::string> known_variants();

struct LearnDiagnostics {
    std::size_t tests_performed = 0;
    std::vector<int> removals_per_level;
    double runtime_ms = 0.0;
    bool final_is_chain_graph = false;
    std::string final_error;  // why the last stage could not orient, when it could not
};

struct LearnResult {
    MixedGraph skeleton;
    /// After v-structures and orientation rules; may hold all three edge kinds.
    MixedGraph essential;
    /// Every remaining undirected edge oriented. Absent when the undirected
    /// part of `essential` is not chordal (possible with sample errors).
    std::optional<MixedGraph> final_graph;
    SepsetMap sepsets;
    std::vector<TripleLabel> triple_labels;  // conservative / majority modes only
    std::vector<UnshieldedTriple> ambiguous_triples;
    std::vector<SkeletonTraceEntry> trace;
    LearnDiagnostics diagnostics;
};

LearnResult learn(const CITester& tester, const std::vector<std::string>& labels, const LearnerConfig& config);

/// {variant, alpha, ordering, tests_performed, removals_per_level,
///  ambiguous_triples, runtime_ms, ...} as pretty-printed JSON.
std::string diagnostics_json(const LearnResult& result, const LearnerConfig& config, const std::vector<std::string>& labels);

}  // namespace mvrcg
