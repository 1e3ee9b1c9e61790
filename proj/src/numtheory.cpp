#include "nutkit/numtheory.hpp"

#include <algorithm>
#include <numeric>

#include "nutkit/errors.hpp"

namespace nutkit {

std::int64_t v2(std::int64_t x) {
    if (x == 0) throw ZeroArgument("v2: argument must be nonzero");
    std::uint64_t m = x < 0 ? -static_cast<std::uint64_t>(x) : static_cast<std::uint64_t>(x);
    std::int64_t k = 0;
    while ((m & 1u) == 0) {
        m >>= 1;
        ++k;
    }
    return k;
}

std::int64_t gcd3(std::int64_t a, std::int64_t b, std::int64_t c) {
    return std::gcd(std::gcd(a, b), c);
}

std::int64_t mod_pos(std::int64_t x, std::int64_t m) {
    std::int64_t r = x % m;
    return r < 0 ? r + m : r;
}

std::int64_t totient(std::int64_t n) {
    if (n < 1) throw InvalidParams("totient: n must be positive");
    std::int64_t result = n;
    std::int64_t m = n;
    for (std::int64_t p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
    if (n < 1) throw InvalidParams("divisors: n must be positive");
    std::vector<std::int64_t> small, large;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

std::vector<std::int64_t> coprime_residues(std::int64_t n) {
    std::vector<std::int64_t> out;
    for (std::int64_t t = 1; t < n; ++t)
        if (std::gcd(t, n) == 1) out.push_back(t);
    return out;
}

} // namespace nutkit
