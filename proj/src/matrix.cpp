#include "nutkit/matrix.hpp"

namespace nutkit {

IntMatrix adjacency_matrix(const Graph& g) {
    const int n = g.vertex_count();
    IntMatrix m(n, n);
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u)) m(u, v) = 1;
    return m;
}

IntMatrix circulant_matrix(const std::vector<Int>& first_row) {
    const int n = static_cast<int>(first_row.size());
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = first_row[static_cast<std::size_t>((j - i + n) % n)];
    return m;
}

} // namespace nutkit
