#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace nutkit {

/// Simple undirected graph with sorted adjacency lists. Immutable once built;
/// values may be shared freely across threads.
class Graph {
public:
    Graph() = default;

    /// Builds from an edge list. Throws CoverNotSimple on self-loops or
    /// duplicate edges, std::out_of_range on bad vertex indices.
    static Graph from_edges(int vertex_count, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return static_cast<int>(adjacency_.size()); }
    std::size_t edge_count() const { return edge_count_; }

    const std::vector<int>& neighbors(int v) const { return adjacency_.at(static_cast<std::size_t>(v)); }
    const std::vector<std::vector<int>>& adjacency() const { return adjacency_; }

    bool has_edge(int u, int v) const;

    /// Sorted edge list (u < v), lexicographic.
    std::vector<std::pair<int, int>> edges() const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.adjacency_ == b.adjacency_; }

private:
    std::vector<std::vector<int>> adjacency_;
    std::size_t edge_count_ = 0;
};

/// True iff g has a single connected component; the empty graph counts as
/// connected.
bool is_connected(const Graph& g);

/// True iff g is 2-colorable.
bool is_bipartite(const Graph& g);

/// True iff every vertex has degree exactly 3 (vacuously true when empty).
bool is_cubic(const Graph& g);

/// Adjacency-list text form, one line per vertex: "v: n1 n2 n3".
std::string to_adjacency_text(const Graph& g);

} // namespace nutkit
