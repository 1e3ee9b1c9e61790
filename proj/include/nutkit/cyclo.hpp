#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "nutkit/poly.hpp"

namespace nutkit {

/// The f-th cyclotomic polynomial: monic, integer coefficients, degree
/// totient(f). Computed by dividing x^f - 1 by the product of the cyclotomic
/// polynomials of the proper divisors of f; results are memoized and the
/// memo table is safe for concurrent callers. Requires f >= 1.
SparseIntPoly cyclotomic(std::int64_t f);

/// True iff the f-th cyclotomic polynomial divides p exactly. The zero
/// polynomial is divisible by everything. The polynomial is tested as given;
/// no exponent reduction is applied on the caller's behalf.
bool divides_cyclotomic(std::int64_t f, const SparseIntPoly& p);

/// Q_{a,b} = x^(2a+b) + x^(a+2b) + x^a + x^b - x^(2a+2b) - x^(2a) - x^(2b) - 1.
/// Requires a, b >= 1. Colliding exponents are merged.
SparseIntPoly q_poly(std::int64_t a, std::int64_t b);

/// R_{a,b}: the same eight terms as Q_{a,b} with all signs positive.
SparseIntPoly r_poly(std::int64_t a, std::int64_t b);

/// Witness polynomial deciding the nut property of the first tricirculant
/// family: x^(2a+b) + x^(a+2b) + x^a + x^b
///         - x^(n/2+2a) - x^(n/2+2b) - 2*x^(n/2+a+b).
/// Requires n even, 0 <= a, b < n, a != b.
SparseIntPoly t1_witness_poly(std::int64_t n, std::int64_t a, std::int64_t b);

/// Witness polynomial for the fourth tricirculant family:
/// x^(2a+b) + x^(a+2b) + x^a + x^b
/// - x^(n/2+2a+2b) - x^(n/2+2a) - x^(n/2+2b) - x^(n/2).
/// Requires n even, 1 <= a, b < n/2.
SparseIntPoly t4_witness_poly(std::int64_t n, std::int64_t a, std::int64_t b);

/// All divisors f of n whose cyclotomic polynomial divides p.
std::set<std::int64_t> cyclotomic_root_filter(const SparseIntPoly& p, std::int64_t n);

/// Nullity of the n x n circulant matrix with the given first row: the sum of
/// totient(f) over divisors f of n whose cyclotomic polynomial divides the
/// representer polynomial sum_j row[j] * x^j. Exact; requires a nonempty row.
std::int64_t circulant_nullity(const std::vector<Int>& first_row);

} // namespace nutkit
