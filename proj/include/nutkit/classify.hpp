#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <tuple>
#include <utility>

#include "nutkit/numtheory.hpp"
#include "nutkit/voltage.hpp"

namespace nutkit {

/// Arithmetic characterization of the nut property for the first tricirculant
/// family: gcd(n/2, a) = gcd(n/2, b) = 1, neither a nor b has the parity of
/// n/2, and v2(b - a) >= v2(n).
/// Requires n even, 0 <= a, b < n, a != b (order of a, b irrelevant).
bool t1_predicate(std::int64_t n, std::int64_t a, std::int64_t b);

/// Arithmetic characterization for the fourth family: gcd(n/2, a, b) = 1;
/// when 4 does not divide n at least one of a, b is even; when 4 divides n
/// the parities of a and b differ; when 10 divides n at least one of
/// a, b, a-b, a+b is divisible by five.
/// Requires n even, 1 <= a, b < n/2.
bool t4_predicate(std::int64_t n, std::int64_t a, std::int64_t b);

/// Polynomial route for the first family: true iff the witness polynomial has
/// no n-th root of unity among its roots besides 1, i.e. the cyclotomic root
/// filter over the divisors of n returns exactly {1}.
bool t1_poly_criterion(std::int64_t n, std::int64_t a, std::int64_t b);

/// Cyclotomic route for the fourth family: true iff no Phi_f with f >= 2,
/// f | n/2 divides Q_{a,b}, and no Phi_f with f | n, n/f odd divides R_{a,b}.
/// Accepts any a, b >= 1 with n even (the conditions are well-defined beyond
/// the constructive parameter range).
bool t4_cyclotomic_criterion(std::int64_t n, std::int64_t a, std::int64_t b);

enum class Method { Predicate, Cyclotomic, Kernel };

enum class ReasonCode {
    None,                    // verdict is_nut = true
    T1Gcd,                   // t1 condition (i) failed
    T1Parity,                // t1 condition (ii) failed
    T1TwoAdic,               // t1 condition (iii) failed
    T4Gcd,                   // t4 condition (i) failed
    T4Parity,                // t4 condition (ii)/(iii) failed
    T4Five,                  // t4 condition (iv) failed
    Type2NeverNut,           // tricirculant type 2
    Type3NullityAtLeastTwo,  // tricirculant type 3
    BicirculantNeverNut,     // b1/b2/b3
    CirculantNeverNut,       // cubic circulant
    WitnessRootOfUnity,      // cyclotomic route, t1: offending divisor in detail
    QDivisible,              // cyclotomic route, t4: offending divisor in detail
    RDivisible,              // cyclotomic route, t4: offending divisor in detail
    NullityNotOne,           // kernel route: nullity in detail
    KernelZeroEntry,         // kernel route: vertex index in detail
};

struct NutVerdict {
    bool is_nut = false;
    Method method = Method::Predicate;
    ReasonCode reason = ReasonCode::None;
    std::int64_t detail = 0;  // offending f, condition-specific value, or nullity

    std::string describe() const;
};

/// Dispatches on the family: the two families with arithmetic
/// characterizations run their predicates; every other constructible family
/// is never a nut graph and the verdict carries the structural reason.
/// Throws InvalidParams.
NutVerdict classify(const FamilyParams& params);

/// Cyclotomic-method verdict for the t1/t4 families, with the offending
/// divisor recorded on failure. Throws InvalidParams for other families.
NutVerdict classify_cyclotomic(const FamilyParams& params);

/// Kernel-method verdict for any graph: nullity must be one and the
/// normalized kernel vector must have full support. The failure reason
/// carries the nullity, or the first vertex where the kernel vector vanishes.
NutVerdict classify_kernel(const Graph& g);

/// Canonical form of t1 parameters: multiplies (a, b) by units of Z_n to
/// reach a' = 1 when 4 | n (a' = 2 otherwise) with the smallest partner;
/// returns the input when no unit reaches the target.
std::tuple<std::int64_t, std::int64_t, std::int64_t> canonical_t1(std::int64_t n, std::int64_t a,
                                                                  std::int64_t b);

/// Canonical form of t4 parameters: lexicographically smallest sorted pair of
/// min(ta mod n, n - ta mod n), min(tb mod n, n - tb mod n) over units t.
std::tuple<std::int64_t, std::int64_t, std::int64_t> canonical_t4(std::int64_t n, std::int64_t a,
                                                                  std::int64_t b);

enum class WitnessKind { Q, R };

/// All residue pairs (a mod f, b mod f) whose Q or R polynomial is divisible
/// by Phi_f, with exponents reduced mod f first. Residue 0 is represented by
/// the positive representative f so the polynomials stay well-formed.
/// Requires f >= 2.
std::set<std::pair<std::int64_t, std::int64_t>> divisibility_table(std::int64_t f, WitnessKind which);

} // namespace nutkit
