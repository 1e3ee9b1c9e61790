#include "nutkit/classify.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "nutkit/cyclo.hpp"
#include "nutkit/errors.hpp"
#include "nutkit/kernel.hpp"
#include "nutkit/matrix.hpp"

namespace nutkit {

namespace {

void check_t1_range(std::int64_t n, std::int64_t a, std::int64_t b) {
    if (n < 2 || n % 2 != 0 || a < 0 || b < 0 || a >= n || b >= n || a == b)
        throw InvalidParams("t1 parameters require n even, 0 <= a, b < n, a != b");
}

// Failing t1 condition, or ReasonCode::None when all hold.
ReasonCode t1_failing_condition(std::int64_t n, std::int64_t a, std::int64_t b) {
    const std::int64_t half = n / 2;
    if (std::gcd(half, a) != 1 || std::gcd(half, b) != 1) return ReasonCode::T1Gcd;
    if (a % 2 == half % 2 || b % 2 == half % 2) return ReasonCode::T1Parity;
    if (v2(b - a) < v2(n)) return ReasonCode::T1TwoAdic;
    return ReasonCode::None;
}

ReasonCode t4_failing_condition(std::int64_t n, std::int64_t a, std::int64_t b) {
    const std::int64_t half = n / 2;
    if (gcd3(half, a, b) != 1) return ReasonCode::T4Gcd;
    if (n % 4 != 0 && a % 2 != 0 && b % 2 != 0) return ReasonCode::T4Parity;
    if (n % 4 == 0 && a % 2 == b % 2) return ReasonCode::T4Parity;
    if (n % 10 == 0 && a % 5 != 0 && b % 5 != 0 && (a - b) % 5 != 0 && (a + b) % 5 != 0)
        return ReasonCode::T4Five;
    return ReasonCode::None;
}

} // namespace

bool t1_predicate(std::int64_t n, std::int64_t a, std::int64_t b) {
    check_t1_range(n, a, b);
    return t1_failing_condition(n, a, b) == ReasonCode::None;
}

bool t4_predicate(std::int64_t n, std::int64_t a, std::int64_t b) {
    if (n < 2 || n % 2 != 0 || a < 1 || b < 1 || 2 * a >= n || 2 * b >= n)
        throw InvalidParams("t4 parameters require n even, 1 <= a, b < n/2");
    return t4_failing_condition(n, a, b) == ReasonCode::None;
}

bool t1_poly_criterion(std::int64_t n, std::int64_t a, std::int64_t b) {
    check_t1_range(n, a, b);
    const auto filter = cyclotomic_root_filter(t1_witness_poly(n, a, b), n);
    return filter.size() == 1 && *filter.begin() == 1;
}

bool t4_cyclotomic_criterion(std::int64_t n, std::int64_t a, std::int64_t b) {
    if (n < 2 || n % 2 != 0 || a < 1 || b < 1)
        throw InvalidParams("t4_cyclotomic_criterion requires n even and a, b >= 1");
    const SparseIntPoly q = q_poly(a, b);
    for (std::int64_t f : divisors(n / 2))
        if (f >= 2 && divides_cyclotomic(f, q)) return false;
    const SparseIntPoly r = r_poly(a, b);
    for (std::int64_t f : divisors(n))
        if ((n / f) % 2 != 0 && divides_cyclotomic(f, r)) return false;
    return true;
}

std::string NutVerdict::describe() const {
    std::ostringstream out;
    out << (is_nut ? "nut" : "not a nut graph");
    switch (method) {
        case Method::Predicate: out << " [predicate]"; break;
        case Method::Cyclotomic: out << " [cyclotomic]"; break;
        case Method::Kernel: out << " [kernel]"; break;
    }
    switch (reason) {
        case ReasonCode::None: break;
        case ReasonCode::T1Gcd: out << ": gcd(n/2, a) and gcd(n/2, b) must both be 1"; break;
        case ReasonCode::T1Parity: out << ": a and b must differ in parity from n/2"; break;
        case ReasonCode::T1TwoAdic: out << ": v2(b - a) >= v2(n) fails"; break;
        case ReasonCode::T4Gcd: out << ": gcd(n/2, a, b) must be 1"; break;
        case ReasonCode::T4Parity: out << ": parity condition on a, b fails"; break;
        case ReasonCode::T4Five: out << ": none of a, b, a-b, a+b divisible by 5"; break;
        case ReasonCode::Type2NeverNut: out << ": type-2 tricirculants are never nut graphs"; break;
        case ReasonCode::Type3NullityAtLeastTwo: out << ": type-3 nullity >= 2"; break;
        case ReasonCode::BicirculantNeverNut: out << ": cubic bicirculants are never nut graphs"; break;
        case ReasonCode::CirculantNeverNut: out << ": cubic circulants are never nut graphs"; break;
        case ReasonCode::WitnessRootOfUnity:
            out << ": witness has a root at a primitive " << detail << "-th root of unity";
            break;
        case ReasonCode::QDivisible: out << ": Phi_" << detail << " divides Q_{a,b}"; break;
        case ReasonCode::RDivisible: out << ": Phi_" << detail << " divides R_{a,b}"; break;
        case ReasonCode::NullityNotOne: out << ": nullity is " << detail; break;
        case ReasonCode::KernelZeroEntry: out << ": kernel vector vanishes at vertex " << detail; break;
    }
    return out.str();
}

NutVerdict classify(const FamilyParams& params) {
    NutVerdict verdict;
    verdict.method = Method::Predicate;
    switch (params.family) {
        case Family::T1: {
            verdict.reason = t1_failing_condition(params.n, params.a, *params.b);
            verdict.is_nut = verdict.reason == ReasonCode::None;
            break;
        }
        case Family::T4: {
            verdict.reason = t4_failing_condition(params.n, params.a, *params.b);
            verdict.is_nut = verdict.reason == ReasonCode::None;
            break;
        }
        case Family::T2:
            verdict.reason = ReasonCode::Type2NeverNut;
            break;
        case Family::T3:
            verdict.reason = ReasonCode::Type3NullityAtLeastTwo;
            break;
        case Family::B1:
        case Family::B2:
        case Family::B3:
            verdict.reason = ReasonCode::BicirculantNeverNut;
            break;
        case Family::Circulant:
            verdict.reason = ReasonCode::CirculantNeverNut;
            break;
    }
    return verdict;
}

NutVerdict classify_cyclotomic(const FamilyParams& params) {
    NutVerdict verdict;
    verdict.method = Method::Cyclotomic;
    if (params.family == Family::T1) {
        const auto filter = cyclotomic_root_filter(t1_witness_poly(params.n, params.a, *params.b), params.n);
        for (std::int64_t f : filter) {
            if (f != 1) {
                verdict.reason = ReasonCode::WitnessRootOfUnity;
                verdict.detail = f;
                return verdict;
            }
        }
        verdict.is_nut = true;
        return verdict;
    }
    if (params.family == Family::T4) {
        const SparseIntPoly q = q_poly(params.a, *params.b);
        for (std::int64_t f : divisors(params.n / 2)) {
            if (f >= 2 && divides_cyclotomic(f, q)) {
                verdict.reason = ReasonCode::QDivisible;
                verdict.detail = f;
                return verdict;
            }
        }
        const SparseIntPoly r = r_poly(params.a, *params.b);
        for (std::int64_t f : divisors(params.n)) {
            if ((params.n / f) % 2 != 0 && divides_cyclotomic(f, r)) {
                verdict.reason = ReasonCode::RDivisible;
                verdict.detail = f;
                return verdict;
            }
        }
        verdict.is_nut = true;
        return verdict;
    }
    throw InvalidParams("classify_cyclotomic: only the t1 and t4 families have a cyclotomic route");
}

NutVerdict classify_kernel(const Graph& g) {
    NutVerdict verdict;
    verdict.method = Method::Kernel;
    const KernelBasis basis = kernel_basis(adjacency_matrix(g));
    if (basis.dimension() != 1) {
        verdict.reason = ReasonCode::NullityNotOne;
        verdict.detail = basis.dimension();
        return verdict;
    }
    const auto& v = basis.vectors.front();
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) {
            verdict.reason = ReasonCode::KernelZeroEntry;
            verdict.detail = static_cast<std::int64_t>(i);
            return verdict;
        }
    }
    verdict.is_nut = true;
    return verdict;
}

std::tuple<std::int64_t, std::int64_t, std::int64_t> canonical_t1(std::int64_t n, std::int64_t a,
                                                                  std::int64_t b) {
    check_t1_range(n, a, b);
    const std::int64_t target = n % 4 == 0 ? 1 : 2;
    std::int64_t best_partner = -1;
    for (std::int64_t t : coprime_residues(n)) {
        const std::int64_t ta = mod_pos(t * a, n);
        const std::int64_t tb = mod_pos(t * b, n);
        if (ta == target && (best_partner < 0 || tb < best_partner)) best_partner = tb;
        if (tb == target && (best_partner < 0 || ta < best_partner)) best_partner = ta;
    }
    if (best_partner < 0) return {n, std::min(a, b), std::max(a, b)};
    return {n, target, best_partner};
}

std::tuple<std::int64_t, std::int64_t, std::int64_t> canonical_t4(std::int64_t n, std::int64_t a,
                                                                  std::int64_t b) {
    if (n < 2 || n % 2 != 0 || a < 1 || b < 1 || 2 * a >= n || 2 * b >= n)
        throw InvalidParams("t4 parameters require n even, 1 <= a, b < n/2");
    std::int64_t best_a = -1, best_b = -1;
    for (std::int64_t t : coprime_residues(n)) {
        std::int64_t ta = mod_pos(t * a, n);
        std::int64_t tb = mod_pos(t * b, n);
        ta = std::min(ta, n - ta);
        tb = std::min(tb, n - tb);
        if (ta > tb) std::swap(ta, tb);
        if (best_a < 0 || ta < best_a || (ta == best_a && tb < best_b)) {
            best_a = ta;
            best_b = tb;
        }
    }
    return {n, best_a, best_b};
}

std::set<std::pair<std::int64_t, std::int64_t>> divisibility_table(std::int64_t f, WitnessKind which) {
    if (f < 2) throw InvalidParams("divisibility_table requires f >= 2");
    std::set<std::pair<std::int64_t, std::int64_t>> table;
    for (std::int64_t a = 0; a < f; ++a) {
        for (std::int64_t b = 0; b < f; ++b) {
            const std::int64_t rep_a = a == 0 ? f : a;
            const std::int64_t rep_b = b == 0 ? f : b;
            SparseIntPoly p = which == WitnessKind::Q ? q_poly(rep_a, rep_b) : r_poly(rep_a, rep_b);
            if (divides_cyclotomic(f, reduce_exponents_mod(p, f))) table.emplace(a, b);
        }
    }
    return table;
}

} // namespace nutkit
