#include "nutkit/voltage.hpp"

#include <algorithm>
#include <sstream>

#include "nutkit/errors.hpp"
#include "nutkit/numtheory.hpp"

namespace nutkit {

Graph expand_cyclic_cover(const VoltageGraph& vg) {
    const int n = vg.modulus;
    if (n < 1) throw InvalidParams("expand_cyclic_cover: modulus must be positive");
    if (vg.base_vertex_count < 0) throw InvalidParams("expand_cyclic_cover: negative base vertex count");
    std::vector<std::pair<int, int>> edges;
    for (const auto& arc : vg.arcs) {
        if (arc.tail < 0 || arc.head < 0 || arc.tail >= vg.base_vertex_count ||
            arc.head >= vg.base_vertex_count)
            throw InvalidParams("expand_cyclic_cover: arc endpoint out of range");
        if (arc.voltage < 0 || arc.voltage >= n)
            throw InvalidParams("expand_cyclic_cover: voltage out of [0, n)");
        if (arc.tail == arc.head && arc.voltage == 0)
            throw InvalidParams("expand_cyclic_cover: loop with voltage 0 would create self-loops");
        const bool loop = arc.tail == arc.head;
        const bool involution = loop && (2 * arc.voltage) % n == 0;
        for (int j = 0; j < n; ++j) {
            int u = arc.tail * n + j;
            int v = arc.head * n + (j + arc.voltage) % n;
            if (loop) {
                // For an involutory loop voltage each undirected edge shows up
                // at j and at j + g; keep the copy with the smaller endpoint.
                if (involution && u > v) continue;
                if (u > v) std::swap(u, v);
            }
            edges.emplace_back(u, v);
        }
    }
    return Graph::from_edges(vg.base_vertex_count * n, edges);
}

std::string family_name(Family f) {
    switch (f) {
        case Family::Circulant: return "circulant";
        case Family::B1: return "b1";
        case Family::B2: return "b2";
        case Family::B3: return "b3";
        case Family::T1: return "t1";
        case Family::T2: return "t2";
        case Family::T3: return "t3";
        case Family::T4: return "t4";
    }
    return "?";
}

std::optional<Family> family_from_string(const std::string& name) {
    for (Family f : {Family::Circulant, Family::B1, Family::B2, Family::B3, Family::T1,
                     Family::T2, Family::T3, Family::T4})
        if (family_name(f) == name) return f;
    return std::nullopt;
}

bool family_is_single_parameter(Family f) {
    return f == Family::Circulant || f == Family::B2 || f == Family::T3;
}

namespace {

void require(bool condition, const std::string& message) {
    if (!condition) throw InvalidParams(message);
}

} // namespace

FamilyParams FamilyParams::make(Family family, std::int64_t n, std::int64_t a,
                                std::optional<std::int64_t> b) {
    FamilyParams p{family, n, a, b};
    if (family_is_single_parameter(family)) {
        require(!b.has_value(), family_name(family) + " takes a single parameter");
    } else {
        require(b.has_value(), family_name(family) + " needs parameters a and b");
    }
    require(n >= 1, "n must be positive");
    const bool needs_even = family != Family::B1 && family != Family::B3;
    if (needs_even) require(n % 2 == 0, family_name(family) + " requires even n");
    switch (family) {
        case Family::Circulant:
            require(a >= 1 && 2 * a < n, "circulant jump requires 1 <= a < n/2");
            break;
        case Family::B1:
            require(a >= 1 && *p.b >= 1 && a < *p.b && *p.b < n, "b1 requires 0 < a < b < n");
            break;
        case Family::B2:
            require(a >= 1 && a < n, "b2 requires 0 < a < n");
            break;
        case Family::B3:
            require(a >= 1 && a <= *p.b && 2 * *p.b < n, "b3 requires 0 < a <= b < n/2");
            break;
        case Family::T1:
            require(a >= 0 && *p.b >= 0 && a < n && *p.b < n && a != *p.b,
                    "t1 requires 0 <= a, b < n with a != b");
            if (*p.b < p.a) std::swap(p.a, *p.b);
            break;
        case Family::T2:
            require(a >= 1 && a < n && *p.b >= 1 && 2 * *p.b < n,
                    "t2 requires 0 < a < n and 0 < b < n/2");
            break;
        case Family::T3:
            require(a >= 0 && a < n, "t3 requires 0 <= a < n");
            break;
        case Family::T4:
            require(a >= 1 && *p.b >= 1 && 2 * a < n && 2 * *p.b < n,
                    "t4 requires 1 <= a, b < n/2");
            if (*p.b < p.a) std::swap(p.a, *p.b);
            break;
    }
    return p;
}

std::string FamilyParams::describe() const {
    std::ostringstream out;
    out << family_name(family) << "(" << n << ", " << a;
    if (b) out << ", " << *b;
    out << ")";
    return out.str();
}

VoltageGraph family_voltage_graph(const FamilyParams& params) {
    const int n = static_cast<int>(params.n);
    const int a = static_cast<int>(params.a);
    const int b = params.b ? static_cast<int>(*params.b) : 0;
    const int half = n / 2;
    // Base vertex order: X = 0, Y = 1, Z = 2 (bicirculants X = 0, Y = 1).
    switch (params.family) {
        case Family::Circulant:
            return {1, n, {{0, 0, a}, {0, 0, half}}};
        case Family::B1:
            return {2, n, {{0, 1, 0}, {0, 1, a}, {0, 1, b}}};
        case Family::B2:
            return {2, n, {{0, 0, half}, {0, 1, 0}, {0, 1, a}, {1, 1, half}}};
        case Family::B3:
            return {2, n, {{0, 1, 0}, {0, 0, a}, {1, 1, b}}};
        case Family::T1:
            return {3, n, {{0, 1, a}, {0, 1, b}, {0, 2, 0}, {1, 2, 0}, {2, 2, half}}};
        case Family::T2:
            return {3, n, {{0, 0, b}, {0, 2, 0}, {1, 1, half}, {1, 2, 0}, {2, 1, a}}};
        case Family::T3:
            return {3, n,
                    {{0, 0, half}, {0, 1, a}, {0, 2, 0}, {1, 1, half}, {1, 2, 0}, {2, 2, half}}};
        case Family::T4:
            return {3, n, {{0, 0, a}, {0, 2, 0}, {1, 1, b}, {1, 2, 0}, {2, 2, half}}};
    }
    throw InvalidParams("unknown family");
}

Graph build_family(const FamilyParams& params) {
    try {
        return expand_cyclic_cover(family_voltage_graph(params));
    } catch (const CoverNotSimple& e) {
        throw InvalidParams(params.describe() + ": parameters create a non-simple cover (" +
                            e.what() + ")");
    }
}

} // namespace nutkit
