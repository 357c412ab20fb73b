#include "mvrcg/learner.hpp"

#include <chrono>

#include <nlohmann/json.hpp>

#include "mvrcg/junction.hpp"

namespace mvrcg {

LearnerConfig LearnerConfig::from_variant(std::string_view name) {
    LearnerConfig c;
    std::string_view rest = name;
    if (rest.starts_with("original")) {
        c.skeleton = SkeletonMode::original;
        rest.remove_prefix(8);
    } else if (rest.starts_with("stable")) {
        c.skeleton = SkeletonMode::stable;
        rest.remove_prefix(6);
    } else {
        throw ConfigError("unknown variant '" + std::string(name) + "'");
    }
    if (rest.empty()) {
        c.triples = TripleMode::plain;
        c.rules = RuleMode::sequential;
    } else if (rest == "-cpc" || rest == "-mpc" || rest == "-lcpc" || rest == "-lmpc") {
        c.rules = rest.size() == 5 ? RuleMode::list : RuleMode::sequential;
        c.triples = rest.ends_with("cpc") ? TripleMode::conservative : TripleMode::majority;
    } else {
        throw ConfigError("unknown variant '" + std::string(name) + "'");
    }
    return c;
}

std::string LearnerConfig::variant_name() const {
    std::string name = skeleton == SkeletonMode::original ? "original" : "stable";
    if (triples == TripleMode::plain) {
        if (rules == RuleMode::list) name += "-lists";
        return name;
    }
    name += rules == RuleMode::list ? "-l" : "-";
    name += triples == TripleMode::conservative ? "cpc" : "mpc";
    return name;
}

std::vector<std::string> known_variants() {
    return {"original",      "stable",      "original-cpc", "original-mpc", "original-lcpc",
            "original-lmpc", "stable-cpc",  "stable-mpc",   "stable-lcpc",  "stable-lmpc"};
}

MajorityThresholds LearnerConfig::thresholds() const {
    return triples == TripleMode::conservative ? MajorityThresholds::conservative() : majority;
}

void LearnerConfig::validate(int p) const {
    if (!ordering.empty()) validate_ordering(ordering, p);
    if (!(alpha > 0.0 && alpha < 1.0)) throw ConfigError("alpha must lie in (0, 1)");
    if (workers < 1) throw ConfigError("workers must be at least 1");
    majority.validate();
}

LearnResult learn(const CITester& tester, const std::vector<std::string>& labels, const LearnerConfig& config) {
    const int p = static_cast<int>(labels.size());
    config.validate(p);
    const auto start = std::chrono::steady_clock::now();
    const std::size_t calls_before = tester.call_count();
    const Ordering ordering = config.ordering.empty() ? identity_ordering(p) : config.ordering;

    LearnResult result;
    const SkeletonOptions options{config.record_trace, config.workers};
    auto sk = config.skeleton == SkeletonMode::original ? skeleton_original(tester, labels, ordering, options)
                                                        : skeleton_stable(tester, labels, ordering, options);
    result.skeleton = sk.graph;
    result.sepsets = std::move(sk.sepsets);
    result.trace = std::move(sk.trace);
    result.diagnostics.removals_per_level = std::move(sk.removals_per_level);

    MixedGraph oriented;
    NoncolliderJudge judge;
    if (config.triples == TripleMode::plain) {
        oriented = vstructures_plain(result.skeleton, result.sepsets);
        judge = judge_from_sepsets(result.sepsets);
    } else {
        result.triple_labels = classify_triples(result.skeleton, tester, config.thresholds());
        for (const auto& l : result.triple_labels)
            if (l.label == TripleClass::ambiguous) result.ambiguous_triples.push_back(l.triple);
        oriented = orient_colliders(result.skeleton, result.triple_labels);
        judge = judge_from_labels(result.triple_labels);
    }

    result.essential = config.rules == RuleMode::list ? apply_rules_lists(std::move(oriented), judge)
                                                      : apply_rules_sequential(std::move(oriented), judge, ordering);

    try {
        result.final_graph = orient_remaining_undirected(result.essential);
        result.diagnostics.final_is_chain_graph = !has_partially_directed_cycle(*result.final_graph);
    } catch (const StructureError& e) {
        result.diagnostics.final_error = e.what();
    }

    result.diagnostics.tests_performed = tester.call_count() - calls_before;
    result.diagnostics.runtime_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return result;
}

std::string diagnostics_json(const LearnResult& result, const LearnerConfig& config, const std::vector<std::string>& labels) {
    const int p = static_cast<int>(labels.size());
    const Ordering ordering = config.ordering.empty() ? identity_ordering(p) : config.ordering;
    nlohmann::json j;
    j["variant"] = config.variant_name();
    j["alpha"] = config.alpha;
    auto& order = j["ordering"] = nlohmann::json::array();
    for (Vertex v : ordering) order.push_back(labels[static_cast<std::size_t>(v)]);
    if (config.triples == TripleMode::majority) j["majority_thresholds"] = {config.majority.lo, config.majority.hi};
    j["tests_performed"] = result.diagnostics.tests_performed;
    j["removals_per_level"] = result.diagnostics.removals_per_level;
    auto& amb = j["ambiguous_triples"] = nlohmann::json::array();
    for (const auto& t : result.ambiguous_triples)
        amb.push_back({labels[static_cast<std::size_t>(t.a)], labels[static_cast<std::size_t>(t.mid)],
                       labels[static_cast<std::size_t>(t.c)]});
    j["final_is_chain_graph"] = result.diagnostics.final_is_chain_graph;
    if (!result.diagnostics.final_error.empty()) j["final_error"] = result.diagnostics.final_error;
    j["runtime_ms"] = result.diagnostics.runtime_ms;
    return j.dump(2) + "\n";
}

}  // namespace mvrcg
