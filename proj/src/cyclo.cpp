#include "nutkit/cyclo.hpp"

#include <map>
#include <mutex>

#include "nutkit/errors.hpp"
#include "nutkit/numtheory.hpp"

namespace nutkit {

namespace {

std::mutex cyclo_mutex;
std::map<std::int64_t, SparseIntPoly> cyclo_cache;

SparseIntPoly x_power_minus_one(std::int64_t f) {
    SparseIntPoly p;
    p.add_term(f, 1);
    p.add_term(0, -1);
    return p;
}

} // namespace

SparseIntPoly cyclotomic(std::int64_t f) {
    if (f < 1) throw InvalidParams("cyclotomic: f must be positive");
    {
        std::lock_guard<std::mutex> lock(cyclo_mutex);
        auto it = cyclo_cache.find(f);
        if (it != cyclo_cache.end()) return it->second;
    }
    SparseIntPoly result;
    if (f == 1) {
        result = x_power_minus_one(1);
    } else {
        SparseIntPoly divisor_product = SparseIntPoly::constant(1);
        for (std::int64_t d : divisors(f))
            if (d != f) divisor_product = divisor_product * cyclotomic(d);
        PolyDivRem dr = poly_divrem(x_power_minus_one(f), divisor_product);
        // x^f - 1 factors exactly into the cyclotomics of the divisors of f.
        if (!dr.remainder.is_zero())
            throw std::logic_error("cyclotomic: nonzero remainder in defining division");
        result = dr.quotient;
    }
    std::lock_guard<std::mutex> lock(cyclo_mutex);
    return cyclo_cache.emplace(f, std::move(result)).first->second;
}

bool divides_cyclotomic(std::int64_t f, const SparseIntPoly& p) {
    if (p.is_zero()) return true;
    return poly_divrem(p, cyclotomic(f)).remainder.is_zero();
}

SparseIntPoly q_poly(std::int64_t a, std::int64_t b) {
    if (a < 1 || b < 1) throw InvalidParams("q_poly: a and b must be positive");
    SparseIntPoly p;
    p.add_term(2 * a + b, 1);
    p.add_term(a + 2 * b, 1);
    p.add_term(a, 1);
    p.add_term(b, 1);
    p.add_term(2 * a + 2 * b, -1);
    p.add_term(2 * a, -1);
    p.add_term(2 * b, -1);
    p.add_term(0, -1);
    return p;
}

SparseIntPoly r_poly(std::int64_t a, std::int64_t b) {
    if (a < 1 || b < 1) throw InvalidParams("r_poly: a and b must be positive");
    SparseIntPoly p;
    p.add_term(2 * a + b, 1);
    p.add_term(a + 2 * b, 1);
    p.add_term(a, 1);
    p.add_term(b, 1);
    p.add_term(2 * a + 2 * b, 1);
    p.add_term(2 * a, 1);
    p.add_term(2 * b, 1);
    p.add_term(0, 1);
    return p;
}

SparseIntPoly t1_witness_poly(std::int64_t n, std::int64_t a, std::int64_t b) {
    if (n < 2 || n % 2 != 0 || a < 0 || b < 0 || a >= n || b >= n || a == b)
        throw InvalidParams("t1_witness_poly: requires n even, 0 <= a, b < n, a != b");
    const std::int64_t h = n / 2;
    SparseIntPoly p;
    p.add_term(2 * a + b, 1);
    p.add_term(a + 2 * b, 1);
    p.add_term(a, 1);
    p.add_term(b, 1);
    p.add_term(h + 2 * a, -1);
    p.add_term(h + 2 * b, -1);
    p.add_term(h + a + b, -2);
    return p;
}

SparseIntPoly t4_witness_poly(std::int64_t n, std::int64_t a, std::int64_t b) {
    if (n < 2 || n % 2 != 0 || a < 1 || b < 1 || 2 * a >= n || 2 * b >= n)
        throw InvalidParams("t4_witness_poly: requires n even, 1 <= a, b < n/2");
    const std::int64_t h = n / 2;
    SparseIntPoly p;
    p.add_term(2 * a + b, 1);
    p.add_term(a + 2 * b, 1);
    p.add_term(a, 1);
    p.add_term(b, 1);
    p.add_term(h + 2 * a + 2 * b, -1);
    p.add_term(h + 2 * a, -1);
    p.add_term(h + 2 * b, -1);
    p.add_term(h, -1);
    return p;
}

std::set<std::int64_t> cyclotomic_root_filter(const SparseIntPoly& p, std::int64_t n) {
    if (n < 1) throw InvalidParams("cyclotomic_root_filter: n must be positive");
    std::set<std::int64_t> out;
    for (std::int64_t f : divisors(n))
        if (divides_cyclotomic(f, p)) out.insert(f);
    return out;
}

std::int64_t circulant_nullity(const std::vector<Int>& first_row) {
    if (first_row.empty()) throw InvalidParams("circulant_nullity: empty row");
    const std::int64_t n = static_cast<std::int64_t>(first_row.size());
    SparseIntPoly representer;
    for (std::int64_t j = 0; j < n; ++j) representer.add_term(j, first_row[static_cast<std::size_t>(j)]);
    std::int64_t nullity = 0;
    for (std::int64_t f : divisors(n))
        if (divides_cyclotomic(f, representer)) nullity += totient(f);
    return nullity;
}

} // namespace nutkit
