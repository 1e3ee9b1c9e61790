#pragma once

// Test-only oracles, kept independent of the library code paths they check:
// families built straight from their edge-set definitions, ranks computed by
// plain rational elimination, and nullity recovered from the characteristic
// polynomial.

#include <random>
#include <set>
#include <utility>
#include <vector>

#include "nutkit/graph.hpp"
#include "nutkit/int.hpp"
#include "nutkit/matrix.hpp"
#include "nutkit/poly.hpp"
#include "nutkit/voltage.hpp"

namespace oracles {

using nutkit::Family;
using nutkit::Graph;
using nutkit::Int;
using nutkit::IntMatrix;
using nutkit::Rat;

using EdgeSet = std::set<std::pair<int, int>>;

inline void put_edge(EdgeSet& edges, int u, int v) {
    edges.emplace(std::min(u, v), std::max(u, v));
}

/// Edge set written out term by term from the family definitions; no voltage
/// machinery involved.
inline EdgeSet direct_family_edges(Family family, int n, int a, int b) {
    EdgeSet edges;
    auto x = [&](int j) { return ((j % n) + n) % n; };
    auto y = [&](int j) { return n + ((j % n) + n) % n; };
    auto z = [&](int j) { return 2 * n + ((j % n) + n) % n; };
    const int h = n / 2;
    for (int j = 0; j < n; ++j) {
        switch (family) {
            case Family::Circulant:
                put_edge(edges, x(j), x(j + a));
                put_edge(edges, x(j), x(j + h));
                break;
            case Family::B1:
                put_edge(edges, x(j), y(j));
                put_edge(edges, x(j), y(j + a));
                put_edge(edges, x(j), y(j + b));
                break;
            case Family::B2:
                put_edge(edges, x(j), x(j + h));
                put_edge(edges, x(j), y(j));
                put_edge(edges, x(j), y(j + a));
                put_edge(edges, y(j), y(j + h));
                break;
            case Family::B3:
                put_edge(edges, x(j), y(j));
                put_edge(edges, x(j), x(j + a));
                put_edge(edges, y(j), y(j + b));
                break;
            case Family::T1:
                put_edge(edges, x(j), y(j + a));
                put_edge(edges, x(j), y(j + b));
                put_edge(edges, x(j), z(j));
                put_edge(edges, y(j), z(j));
                put_edge(edges, z(j), z(j + h));
                break;
            case Family::T2:
                put_edge(edges, x(j), x(j + b));
                put_edge(edges, x(j), z(j));
                put_edge(edges, y(j), y(j + h));
                put_edge(edges, y(j), z(j));
                put_edge(edges, y(j), z(j - a));
                break;
            case Family::T3:
                put_edge(edges, x(j), x(j + h));
                put_edge(edges, x(j), y(j + a));
                put_edge(edges, x(j), z(j));
                put_edge(edges, y(j), y(j + h));
                put_edge(edges, y(j), z(j));
                put_edge(edges, z(j), z(j + h));
                break;
            case Family::T4:
                put_edge(edges, x(j), x(j + a));
                put_edge(edges, x(j), z(j));
                put_edge(edges, y(j), y(j + b));
                put_edge(edges, y(j), z(j));
                put_edge(edges, z(j), z(j + h));
                break;
        }
    }
    return edges;
}

inline EdgeSet edge_set(const Graph& g) {
    EdgeSet out;
    for (const auto& [u, v] : g.edges()) out.emplace(u, v);
    return out;
}

/// Rank by straightforward rational Gaussian elimination.
inline int rational_rank(const IntMatrix& m) {
    const int rows = m.rows(), cols = m.cols();
    std::vector<std::vector<Rat>> a(static_cast<std::size_t>(rows),
                                    std::vector<Rat>(static_cast<std::size_t>(cols)));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) a[i][j] = Rat(m(i, j));
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int i = rank; i < rows; ++i)
            if (a[i][c] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[static_cast<std::size_t>(rank)], a[static_cast<std::size_t>(pivot)]);
        for (int i = rank + 1; i < rows; ++i) {
            if (a[i][c] == 0) continue;
            Rat factor = a[i][c] / a[static_cast<std::size_t>(rank)][c];
            for (int j = c; j < cols; ++j) a[i][j] -= factor * a[static_cast<std::size_t>(rank)][j];
        }
        ++rank;
    }
    return rank;
}

/// Coefficients c_0..c_n of the characteristic polynomial det(xI - A) via the
/// Faddeev-LeVerrier recurrence in exact rationals.
inline std::vector<Rat> charpoly(const IntMatrix& m) {
    const int n = m.rows();
    std::vector<std::vector<Rat>> a(static_cast<std::size_t>(n),
                                    std::vector<Rat>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = Rat(m(i, j));
    std::vector<std::vector<Rat>> mk(static_cast<std::size_t>(n),
                                     std::vector<Rat>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i) mk[i][i] = 1;
    std::vector<Rat> coeff(static_cast<std::size_t>(n) + 1);
    coeff[static_cast<std::size_t>(n)] = 1;
    for (int k = 1; k <= n; ++k) {
        std::vector<std::vector<Rat>> prod(static_cast<std::size_t>(n),
                                           std::vector<Rat>(static_cast<std::size_t>(n)));
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l) {
                if (a[i][l] == 0) continue;
                for (int j = 0; j < n; ++j) prod[i][j] += a[i][l] * mk[l][j];
            }
        Rat trace = 0;
        for (int i = 0; i < n; ++i) trace += prod[i][i];
        Rat c = -trace / k;
        coeff[static_cast<std::size_t>(n - k)] = c;
        mk = prod;
        for (int i = 0; i < n; ++i) mk[i][i] += c;
    }
    return coeff;
}

/// Zero-root multiplicity of the characteristic polynomial. Equals the
/// nullity for symmetric matrices.
inline int charpoly_nullity(const IntMatrix& m) {
    const std::vector<Rat> c = charpoly(m);
    int k = 0;
    while (k < static_cast<int>(c.size()) && c[static_cast<std::size_t>(k)] == 0) ++k;
    return k;
}

inline nutkit::SparseIntPoly random_poly(std::mt19937& rng, int max_terms, int max_exp) {
    std::uniform_int_distribution<int> term_count(0, max_terms);
    std::uniform_int_distribution<int> exponent(0, max_exp);
    std::uniform_int_distribution<int> coefficient(-9, 9);
    nutkit::SparseIntPoly p;
    const int k = term_count(rng);
    for (int i = 0; i < k; ++i) p.add_term(exponent(rng), Int(coefficient(rng)));
    return p;
}

inline IntMatrix random_symmetric(std::mt19937& rng, int n, int max_abs) {
    std::uniform_int_distribution<int> entry(-max_abs, max_abs);
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            Int v(entry(rng));
            m(i, j) = v;
            m(j, i) = v;
        }
    return m;
}

} // namespace oracles
