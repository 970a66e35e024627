#ifndef BIPERRON_GRAPH_HPP
#define BIPERRON_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "biperron/matrix.hpp"

namespace biperron {

/// Simple undirected graph on at most 64 vertices (desk scale).
struct Graph {
    int n = 0;
    std::vector<uint64_t> adj;  // adjacency bitsets

    Graph() = default;
    explicit Graph(int vertices) : n(vertices), adj(vertices, 0) {
        if (vertices < 0 || vertices > 64) throw std::invalid_argument("graph size out of range");
    }

    void add_edge(int u, int v);
    bool has_edge(int u, int v) const { return (adj[u] >> v) & 1u; }
    int edge_count() const;
    int degree(int v) const;
    std::vector<std::pair<int, int>> edges() const;  // sorted (u < v)
    bool is_connected() const;
    bool is_tree() const { return n > 0 && is_connected() && edge_count() == n - 1; }
    IntMat adjacency_matrix() const;

    bool operator==(const Graph& o) const { return n == o.n && adj == o.adj; }
    bool operator<(const Graph& o) const;  // canonical-encoding order
};

/// Two-coloring of a connected-or-not simple graph; part assignment is
/// deterministic: the lowest-index vertex of each component goes to part
/// one (a breadth-first sweep).
struct Bipartition {
    std::vector<int> side;     // 0 or 1 per vertex
    std::vector<int> part0, part1;
};

/// Odd cycle returned when the graph is not bipartite.
struct OddCycle {
    std::vector<int> vertices;
};

struct BipartitionResult {
    std::optional<Bipartition> parts;
    std::optional<OddCycle> odd_cycle;
    bool connected = false;
};

BipartitionResult bipartition(const Graph& g);

/// Canonical relabeling: the lexicographically smallest adjacency
/// encoding over all vertex permutations (branch-and-bound with twin
/// pruning). Deterministic tie-break for every search in the project.
Graph canonical_form(const Graph& g);
/// encoding key of canonical_form, usable as a map key
std::vector<uint64_t> canonical_key(const Graph& g);

/// All connected graphs on 1..max_vertices up to isomorphism, canonical
/// forms in canonical order.
std::vector<Graph> connected_graph_atlas(int max_vertices);
/// Connected bipartite subset of the atlas.
std::vector<Graph> connected_bipartite_atlas(int max_vertices);
/// All trees on 1..max_vertices up to isomorphism.
std::vector<Graph> tree_atlas(int max_vertices);

/// Named diagrams: "A<n>", "D<n>", "E6".."E10", "K<m>,<n>" (complete
/// bipartite), "path<n>", "star<n>" (K_{1,n}).
Graph named_graph(const std::string& name);

/// Text format: optional first line "n; a,b,c / d,e,f" (vertex count and
/// bipartition), then one "u-v" edge per line, 0-indexed.
Graph parse_graph_text(const std::string& text);
std::string graph_to_text(const Graph& g);

Graph complete_bipartite(int a, int b);
Graph path_graph(int n);
Graph star_graph(int leaves);

}  // namespace biperron

#endif
