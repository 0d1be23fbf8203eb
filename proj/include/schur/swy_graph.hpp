#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "schur/amplitudes.hpp"
#include "schur/radical.hpp"
#include "schur/tableaux.hpp"

namespace schur {

using VertexId = std::size_t;

struct SwyVertex {
    VertexId id = 0;
    int level = 0;
    Partition shape;
    StandardWeylTableau tableau;

    friend bool operator==(const SwyVertex&, const SwyVertex&) = default;
};

struct SwyEdge {
    VertexId lower = 0;
    VertexId upper = 0;
    int added_entry = 1;  // letter in 1..d
    Radical amplitude;

    friend bool operator==(const SwyEdge&, const SwyEdge&) = default;
};

// The Schur-Weyl-Young multigraph up to level n_max. Each standard Weyl
// tableau is stored once; the repeated frame rows of the usual drawing are
// implied by the edges. Vertex ids are dense and follow the canonical order
// (level, then partition, then tableau). Immutable once built.
class SwyGraph {
public:
    static SwyGraph build(int d, int n_max, AmplitudeEngine engine = AmplitudeEngine::louck);
    // Reassembles a graph from stored vertices and edges, re-validating
    // ids, levels and adjacency.
    static SwyGraph from_parts(int d, int n_max, std::vector<SwyVertex> vertices, std::vector<SwyEdge> edges);

    int d() const { return d_; }
    int n_max() const { return n_max_; }
    const std::vector<SwyVertex>& vertices() const { return vertices_; }
    const std::vector<SwyEdge>& edges() const { return edges_; }
    const SwyVertex& vertex(VertexId id) const;
    // Ids of the vertices at one level, in canonical order.
    std::vector<VertexId> level_vertices(int level) const;
    std::optional<VertexId> find(const GelfandTsetlinPattern& pattern) const;

    std::vector<SwyEdge> up_edges(VertexId v, std::optional<int> k = std::nullopt) const;
    std::vector<SwyEdge> down_edges(VertexId v, std::optional<int> k = std::nullopt) const;

    friend bool operator==(const SwyGraph& a, const SwyGraph& b) {
        return a.d_ == b.d_ && a.n_max_ == b.n_max_ && a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
    }

private:
    void index();

    int d_ = 1;
    int n_max_ = 0;
    std::vector<SwyVertex> vertices_;
    std::vector<SwyEdge> edges_;
    std::vector<VertexId> level_start_;  // level i occupies [level_start_[i], level_start_[i+1])
    std::vector<std::vector<std::size_t>> up_;
    std::vector<std::vector<std::size_t>> down_;
    std::map<GelfandTsetlinPattern, VertexId> by_pattern_;
};

// Number of vertices per frame at one level, frames in canonical order.
std::vector<std::pair<Partition, std::size_t>> level_census(const SwyGraph& g, int level);

// Graphviz rendering: one cluster per (level, frame), edge labels carry the
// added letter and the exact amplitude. For d = 2 letters print as 0/1.
std::string to_dot(const SwyGraph& g);

}  // namespace schur
