#include "schur/swy_graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "schur/alphabet.hpp"
#include "schur/errors.hpp"

namespace schur {

SwyGraph SwyGraph::build(int d, int n_max, AmplitudeEngine engine) {
    if (d < 1 || n_max < 0) {
        throw std::invalid_argument("graph needs d >= 1 and n_max >= 0");
    }
    SwyGraph g;
    g.d_ = d;
    g.n_max_ = n_max;
    for (int level = 0; level <= n_max; ++level) {
        for (const auto& shape : partitions(level, d)) {
            for (const auto& pattern : enumerate_patterns(shape, d)) {
                VertexId id = g.vertices_.size();
                g.vertices_.push_back({id, level, shape, gt_to_weyl(pattern)});
            }
        }
    }
    std::map<GelfandTsetlinPattern, VertexId> ids;
    for (const auto& v : g.vertices_) {
        ids.emplace(v.tableau.pattern(), v.id);
    }
    for (const auto& v : g.vertices_) {
        if (v.level == n_max) {
            break;
        }
        const auto& lower = v.tableau.pattern();
        for (int k = 1; k <= d; ++k) {
            for (const auto& upper : upper_neighbors(lower, k)) {
                g.edges_.push_back({v.id, ids.at(upper), k, edge_amplitude(lower, upper, engine)});
            }
        }
    }
    g.index();
    return g;
}

SwyGraph SwyGraph::from_parts(int d, int n_max, std::vector<SwyVertex> vertices, std::vector<SwyEdge> edges) {
    if (d < 1 || n_max < 0) {
        throw std::invalid_argument("graph needs d >= 1 and n_max >= 0");
    }
    for (size_t i = 0; i < vertices.size(); ++i) {
        const auto& v = vertices[i];
        if (v.id != i) {
            throw InvariantViolation("dense vertex ids");
        }
        if (v.level < 0 || v.level > n_max || (i > 0 && v.level < vertices[i - 1].level)) {
            throw InvariantViolation("vertices grouped by level");
        }
        if (v.tableau.d() != d || v.tableau.shape() != v.shape || v.shape.size() != v.level) {
            throw InvariantViolation("vertex shape matches its tableau and level");
        }
    }
    for (const auto& e : edges) {
        if (e.lower >= vertices.size() || e.upper >= vertices.size()) {
            throw InvariantViolation("edge endpoints exist");
        }
        const auto ctx = transition_context(vertices[e.lower].tableau.pattern(), vertices[e.upper].tableau.pattern());
        if (ctx.k != e.added_entry) {
            throw InvariantViolation("edge letter matches the content difference");
        }
    }
    SwyGraph g;
    g.d_ = d;
    g.n_max_ = n_max;
    g.vertices_ = std::move(vertices);
    g.edges_ = std::move(edges);
    g.index();
    return g;
}

void SwyGraph::index() {
    level_start_.assign(n_max_ + 2, vertices_.size());
    for (auto it = vertices_.rbegin(); it != vertices_.rend(); ++it) {
        level_start_[it->level] = it->id;
    }
    for (int level = n_max_; level >= 0; --level) {
        level_start_[level] = std::min(level_start_[level], level_start_[level + 1]);
    }
    up_.assign(vertices_.size(), {});
    down_.assign(vertices_.size(), {});
    by_pattern_.clear();
    for (const auto& v : vertices_) {
        by_pattern_.emplace(v.tableau.pattern(), v.id);
    }
    for (size_t e = 0; e < edges_.size(); ++e) {
        up_[edges_[e].lower].push_back(e);
        down_[edges_[e].upper].push_back(e);
    }
    auto by_upper = [this](size_t a, size_t b) {
        return std::tie(edges_[a].added_entry, edges_[a].upper) < std::tie(edges_[b].added_entry, edges_[b].upper);
    };
    auto by_lower = [this](size_t a, size_t b) {
        return std::tie(edges_[a].added_entry, edges_[a].lower) < std::tie(edges_[b].added_entry, edges_[b].lower);
    };
    for (auto& list : up_) {
        std::sort(list.begin(), list.end(), by_upper);
    }
    for (auto& list : down_) {
        std::sort(list.begin(), list.end(), by_lower);
    }
}

const SwyVertex& SwyGraph::vertex(VertexId id) const {
    if (id >= vertices_.size()) {
        throw std::out_of_range("unknown vertex " + std::to_string(id));
    }
    return vertices_[id];
}

std::vector<VertexId> SwyGraph::level_vertices(int level) const {
    std::vector<VertexId> out;
    if (level < 0 || level > n_max_) {
        return out;
    }
    for (VertexId id = level_start_[level]; id < level_start_[level + 1]; ++id) {
        out.push_back(id);
    }
    return out;
}

std::optional<VertexId> SwyGraph::find(const GelfandTsetlinPattern& pattern) const {
    auto it = by_pattern_.find(pattern);
    if (it == by_pattern_.end()) {
        return std::nullopt;
    }
    return it->second;
}

std::vector<SwyEdge> SwyGraph::up_edges(VertexId v, std::optional<int> k) const {
    vertex(v);
    std::vector<SwyEdge> out;
    for (size_t e : up_[v]) {
        if (!k || edges_[e].added_entry == *k) {
            out.push_back(edges_[e]);
        }
    }
    return out;
}

std::vector<SwyEdge> SwyGraph::down_edges(VertexId v, std::optional<int> k) const {
    vertex(v);
    std::vector<SwyEdge> out;
    for (size_t e : down_[v]) {
        if (!k || edges_[e].added_entry == *k) {
            out.push_back(edges_[e]);
        }
    }
    return out;
}

std::vector<std::pair<Partition, std::size_t>> level_census(const SwyGraph& g, int level) {
    std::vector<std::pair<Partition, std::size_t>> out;
    for (VertexId id : g.level_vertices(level)) {
        const auto& shape = g.vertex(id).shape;
        if (out.empty() || out.back().first != shape) {
            out.emplace_back(shape, 0);
        }
        ++out.back().second;
    }
    return out;
}

std::string to_dot(const SwyGraph& g) {
    const int offset = external_letter_offset(g.d());
    std::ostringstream out;
    out << "digraph swy {\n";
    out << "  rankdir=BT;\n";
    out << "  node [shape=box, fontname=\"monospace\"];\n";
    size_t cluster = 0;
    for (int level = 0; level <= g.n_max(); ++level) {
        auto ids = g.level_vertices(level);
        for (size_t i = 0; i < ids.size();) {
            const Partition& shape = g.vertex(ids[i]).shape;
            out << "  subgraph cluster_" << cluster++ << " {\n";
            out << "    label=\"level " << level << " " << shape.to_string() << "\";\n";
            for (; i < ids.size() && g.vertex(ids[i]).shape == shape; ++i) {
                const auto& rows = g.vertex(ids[i]).tableau.rows();
                std::string label;
                for (const auto& row : rows) {
                    if (!label.empty()) {
                        label += "\\n";
                    }
                    for (size_t c = 0; c < row.size(); ++c) {
                        label += (c ? " " : "") + std::to_string(row[c] + offset);
                    }
                }
                out << "    v" << ids[i] << " [label=\"" << (label.empty() ? "empty" : label) << "\"];\n";
            }
            out << "  }\n";
        }
    }
    for (const auto& e : g.edges()) {
        out << "  v" << e.lower << " -> v" << e.upper << " [label=\"" << e.added_entry + offset << ": "
            << e.amplitude.to_string() << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace schur
