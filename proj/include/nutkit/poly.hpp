#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>

#include "nutkit/int.hpp"

namespace nutkit {

/// Integer polynomial stored sparsely as exponent -> nonzero coefficient.
/// The zero polynomial is the empty map; no zero coefficient is ever stored.
class SparseIntPoly {
public:
    using Terms = std::map<std::int64_t, Int>;

    SparseIntPoly() = default;

    static SparseIntPoly monomial(std::int64_t exp, Int coeff);
    static SparseIntPoly constant(Int value);
    static SparseIntPoly from_terms(std::initializer_list<std::pair<std::int64_t, Int>> terms);

    bool is_zero() const { return terms_.empty(); }

    /// Largest exponent. Throws std::logic_error on the zero polynomial.
    std::int64_t degree() const;

    /// Coefficient of x^exp (zero if the term is absent).
    Int coeff(std::int64_t exp) const;

    const Terms& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    /// Adds c*x^exp, merging with any existing term and dropping zeros.
    void add_term(std::int64_t exp, const Int& c);

    Int eval(const Int& x) const;

    /// Text form with descending exponents, e.g. "-x^6 + x^5 + x - 1".
    std::string to_string() const;

    friend bool operator==(const SparseIntPoly& a, const SparseIntPoly& b) {
        return a.terms_ == b.terms_;
    }

    friend SparseIntPoly operator+(const SparseIntPoly& a, const SparseIntPoly& b);
    friend SparseIntPoly operator-(const SparseIntPoly& a, const SparseIntPoly& b);
    friend SparseIntPoly operator*(const SparseIntPoly& a, const SparseIntPoly& b);

private:
    Terms terms_;
};

struct PolyDivRem {
    SparseIntPoly quotient;
    SparseIntPoly remainder;
};

/// Exact division with remainder: p = d*q + r with deg r < deg d or r = 0.
/// The divisor must be nonzero with leading coefficient +-1 so that all
/// intermediate coefficients stay integral.
/// Throws ZeroDivisor / NonMonicDivisor.
PolyDivRem poly_divrem(const SparseIntPoly& p, const SparseIntPoly& d);

/// Maps every term x^e to x^(e mod modulus), summing collisions.
/// Requires modulus >= 1.
SparseIntPoly reduce_exponents_mod(const SparseIntPoly& p, std::int64_t modulus);

/// Substitutes x -> x^k (multiplies every exponent by k). Requires k >= 1.
SparseIntPoly inflate_exponents(const SparseIntPoly& p, std::int64_t k);

} // namespace nutkit
