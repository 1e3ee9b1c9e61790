#pragma once

#include <cstdint>
#include <vector>

namespace nutkit {

/// 2-adic valuation of |x|: the largest k with 2^k dividing x.
/// Throws ZeroArgument for x = 0.
std::int64_t v2(std::int64_t x);

std::int64_t gcd3(std::int64_t a, std::int64_t b, std::int64_t c);

/// x mod m mapped into [0, m).
std::int64_t mod_pos(std::int64_t x, std::int64_t m);

/// Euler totient. Requires n >= 1.
std::int64_t totient(std::int64_t n);

/// All positive divisors of n in ascending order. Requires n >= 1.
std::vector<std::int64_t> divisors(std::int64_t n);

/// All t in [1, n) with gcd(t, n) = 1, ascending.
std::vector<std::int64_t> coprime_residues(std::int64_t n);

} // namespace nutkit
