#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nutkit/graph.hpp"

namespace nutkit {

/// Arc of a base multigraph carrying a voltage in Z_n. Loops (tail == head)
/// and parallel arcs are allowed in the base.
struct VoltageArc {
    int tail = 0;
    int head = 0;
    int voltage = 0;
};

/// Base multigraph with Z_n voltages. The cyclic cover expands base vertex v
/// into the block v*n .. v*n + n - 1.
struct VoltageGraph {
    int base_vertex_count = 0;
    int modulus = 0;
    std::vector<VoltageArc> arcs;
};

/// Expands the cyclic cover: a non-loop arc (u, v, g) yields the edges
/// {u_j, v_(j+g)} for all j; a loop (v, v, g) yields {v_j, v_(j+g)} with each
/// such edge generated once (for 2g = 0 mod n the pairs coincide two by two).
/// Throws CoverNotSimple if any self-loop or parallel cover edge would arise,
/// InvalidParams on malformed input (including voltage 0 on a loop).
Graph expand_cyclic_cover(const VoltageGraph& vg);

enum class Family { Circulant, B1, B2, B3, T1, T2, T3, T4 };

std::string family_name(Family f);
std::optional<Family> family_from_string(const std::string& name);

/// True for the one-parameter families (circulant jump a with the implicit
/// n/2 jump, B2, T3).
bool family_is_single_parameter(Family f);

/// Parameter tuple selecting one constructible family member.
///
/// Accepted ranges (n even wherever an n/2 jump occurs, i.e. everywhere
/// except B1 and B3):
///   Circulant: jumps {a, n/2}, 1 <= a < n/2
///   B1: 0 < a < b < n          B2: 0 < a < n        B3: 0 < a <= b < n/2
///   T1: 0 <= a, b < n, a != b (stored sorted)
///   T2: 0 < a < n, 0 < b < n/2
///   T3: 0 <= a < n
///   T4: 1 <= a <= b < n/2 (stored sorted)
struct FamilyParams {
    Family family;
    std::int64_t n = 0;
    std::int64_t a = 0;
    std::optional<std::int64_t> b;

    /// Validates and normalizes (sorts a, b for the symmetric families).
    /// Throws InvalidParams.
    static FamilyParams make(Family family, std::int64_t n, std::int64_t a,
                             std::optional<std::int64_t> b = std::nullopt);

    std::string describe() const;
};

/// Builds the voltage diagram of the family (the base graph with X, Y, Z as
/// base vertices 0, 1, 2 for tricirculants; X, Y as 0, 1 for bicirculants;
/// a single base vertex for circulants).
VoltageGraph family_voltage_graph(const FamilyParams& params);

/// Constructs the family member by expanding its voltage diagram. The result
/// is always simple and cubic; parameter combinations that would create
/// multi-edges are rejected with InvalidParams.
Graph build_family(const FamilyParams& params);

} // namespace nutkit
