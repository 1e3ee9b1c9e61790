#include "nutkit/graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "nutkit/errors.hpp"

namespace nutkit {

Graph Graph::from_edges(int vertex_count, const std::vector<std::pair<int, int>>& edges) {
    if (vertex_count < 0) throw std::out_of_range("negative vertex count");
    Graph g;
    g.adjacency_.assign(static_cast<std::size_t>(vertex_count), {});
    for (const auto& [u, v] : edges) {
        if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
            throw std::out_of_range("edge endpoint out of range");
        if (u == v) throw CoverNotSimple("self-loop");
        g.adjacency_[static_cast<std::size_t>(u)].push_back(v);
        g.adjacency_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& nbrs : g.adjacency_) {
        std::sort(nbrs.begin(), nbrs.end());
        if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end())
            throw CoverNotSimple("duplicate edge");
    }
    g.edge_count_ = edges.size();
    return g;
}

bool Graph::has_edge(int u, int v) const {
    const auto& nbrs = neighbors(u);
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count_);
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : adjacency_[static_cast<std::size_t>(u)])
            if (u < v) out.emplace_back(u, v);
    return out;
}

bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return true;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::queue<int> queue;
    queue.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop();
        for (int v : g.neighbors(u)) {
            if (!seen[static_cast<std::size_t>(v)]) {
                seen[static_cast<std::size_t>(v)] = 1;
                ++reached;
                queue.push(v);
            }
        }
    }
    return reached == n;
}

bool is_bipartite(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    for (int start = 0; start < n; ++start) {
        if (color[static_cast<std::size_t>(start)] != -1) continue;
        color[static_cast<std::size_t>(start)] = 0;
        std::queue<int> queue;
        queue.push(start);
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop();
            for (int v : g.neighbors(u)) {
                auto& cv = color[static_cast<std::size_t>(v)];
                if (cv == -1) {
                    cv = 1 - color[static_cast<std::size_t>(u)];
                    queue.push(v);
                } else if (cv == color[static_cast<std::size_t>(u)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool is_cubic(const Graph& g) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.neighbors(v).size() != 3) return false;
    return true;
}

std::string to_adjacency_text(const Graph& g) {
    std::ostringstream out;
    for (int v = 0; v < g.vertex_count(); ++v) {
        out << v << ":";
        for (int w : g.neighbors(v)) out << " " << w;
        out << "\n";
    }
    return out.str();
}

} // namespace nutkit
