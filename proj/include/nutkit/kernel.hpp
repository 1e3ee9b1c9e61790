#pragma once

#include <cstdint>
#include <vector>

#include "nutkit/graph.hpp"
#include "nutkit/int.hpp"
#include "nutkit/matrix.hpp"

namespace nutkit {

/// Exact basis of the null space of an integer matrix. Each vector is scaled
/// to coprime integer entries with a positive leading nonzero entry.
struct KernelBasis {
    std::vector<std::vector<Int>> vectors;

    int dimension() const { return static_cast<int>(vectors.size()); }
};

/// Computes the null space of a square matrix by fraction-free elimination
/// with deterministic pivoting (columns left to right, rows scanned top-down
/// for the first nonzero entry). Every returned vector is verified against
/// the input by exact multiplication before return.
/// Throws NotSquare.
KernelBasis kernel_basis(const IntMatrix& m);

std::int64_t nullity(const Graph& g);

/// True iff the basis certifies the nut property: dimension one and a kernel
/// vector with no zero entry.
bool is_nut_kernel(const KernelBasis& basis);

/// True iff the adjacency matrix has nullity one and the integer-scaled
/// kernel vector has no zero entry. The zero-vertex graph is not a nut graph.
bool is_nut(const Graph& g);

/// True iff the neighbor sum of v vanishes at every vertex of g.
/// Throws DimensionMismatch when |v| != |V(g)|.
bool verify_local_condition(const Graph& g, const std::vector<Rat>& v);
bool verify_local_condition(const Graph& g, const std::vector<Int>& v);

enum class OrbitProfile { Constant, Alternating, Neither };

/// Shape of v restricted to a cyclically ordered orbit x_0, ..., x_(k-1):
/// Constant if all entries agree, Alternating if k is even and
/// v(x_j) = (-1)^j v(x_0). Constant wins ties (e.g. the zero vector).
/// Throws std::out_of_range on bad indices.
OrbitProfile orbit_profile(const std::vector<Rat>& v, const std::vector<int>& orbit);
OrbitProfile orbit_profile(const std::vector<Int>& v, const std::vector<int>& orbit);

std::vector<Rat> to_rational(const std::vector<Int>& v);

} // namespace nutkit
