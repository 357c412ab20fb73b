#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "mvrcg/dataset.hpp"
#include "mvrcg/graph.hpp"

namespace mvrcg {

struct GeneratorParams {
    int p = 1;
    double N = 2.0;  // expected vertex degree
    std::uint64_t seed = 0;
    std::optional<int> k;  // chain components; drawn from 1..p when unset

    void validate() const;
};

/// Random MVR chain graph: Bernoulli(N/(p-1)) lower triangle, symmetrized,
/// vertices split into k consecutive near-equal blocks (first blocks take the
/// remainder). Pairs inside a block become bidirected, pairs across blocks
/// point from the earlier block to the later one.
MixedGraph random_mvr_cg(const GeneratorParams& params);

/// Sizes of the k consecutive blocks covering p vertices.
std::vector<int> component_sizes(int p, int k);

/// DAG over the observed vertices (indices 0..p-1, same labels) followed by
/// one latent per bidirected edge of the source graph.
struct LatentDag {
    MixedGraph dag;
    VertexSet observed;
    VertexSet latents;
    std::map<std::pair<Vertex, Vertex>, double> weights;  // (parent, child)
    std::vector<double> noise_variance;
};

/// Copies directed edges and replaces each a<->b by a fresh latent h with
/// h->a, h->b. Edge weights are uniform in +-[0.5, 1.5], noise variances 1.
/// Throws DomainError on undirected edges or a partially directed cycle.
LatentDag cg_to_dag_with_latents(const MixedGraph& g, std::uint64_t seed);

/// Ancestral sampling of the linear SEM; latent columns are dropped.
Dataset sample_gaussian(const LatentDag& ldag, long n, std::uint64_t seed);

/// Parent-before-child order of a DAG; DomainError if there is a cycle.
std::vector<Vertex> topological_order(const MixedGraph& dag);

}  // namespace mvrcg
