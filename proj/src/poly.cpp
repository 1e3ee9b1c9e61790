#include "nutkit/poly.hpp"

#include <sstream>
#include <stdexcept>

#include "nutkit/errors.hpp"

namespace nutkit {

SparseIntPoly SparseIntPoly::monomial(std::int64_t exp, Int coeff) {
    SparseIntPoly p;
    p.add_term(exp, coeff);
    return p;
}

SparseIntPoly SparseIntPoly::constant(Int value) { return monomial(0, std::move(value)); }

SparseIntPoly SparseIntPoly::from_terms(std::initializer_list<std::pair<std::int64_t, Int>> terms) {
    SparseIntPoly p;
    for (const auto& [e, c] : terms) p.add_term(e, c);
    return p;
}

std::int64_t SparseIntPoly::degree() const {
    if (terms_.empty()) throw std::logic_error("degree of zero polynomial is undefined");
    return terms_.rbegin()->first;
}

Int SparseIntPoly::coeff(std::int64_t exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Int(0) : it->second;
}

void SparseIntPoly::add_term(std::int64_t exp, const Int& c) {
    if (c == 0) return;
    if (exp < 0) throw std::logic_error("negative exponent");
    auto [it, inserted] = terms_.emplace(exp, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Int SparseIntPoly::eval(const Int& x) const {
    Int acc = 0;
    Int pw;
    for (const auto& [e, c] : terms_) {
        mpz_pow_ui(pw.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(e));
        acc += c * pw;
    }
    return acc;
}

std::string SparseIntPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        const bool negative = c < 0;
        Int mag = abs(c);
        if (first) {
            if (negative) out << "-";
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        if (e == 0) {
            out << mag.get_str();
        } else {
            if (mag != 1) out << mag.get_str() << "*";
            out << "x";
            if (e != 1) out << "^" << e;
        }
    }
    return out.str();
}

SparseIntPoly operator+(const SparseIntPoly& a, const SparseIntPoly& b) {
    SparseIntPoly out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e, c);
    return out;
}

SparseIntPoly operator-(const SparseIntPoly& a, const SparseIntPoly& b) {
    SparseIntPoly out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e, -c);
    return out;
}

SparseIntPoly operator*(const SparseIntPoly& a, const SparseIntPoly& b) {
    SparseIntPoly out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    return out;
}

PolyDivRem poly_divrem(const SparseIntPoly& p, const SparseIntPoly& d) {
    if (d.is_zero()) throw ZeroDivisor("poly_divrem: zero divisor");
    const std::int64_t dd = d.degree();
    const Int lead = d.coeff(dd);
    if (lead != 1 && lead != -1)
        throw NonMonicDivisor("poly_divrem: divisor leading coefficient must be +-1");

    PolyDivRem result;
    result.remainder = p;
    while (!result.remainder.is_zero() && result.remainder.degree() >= dd) {
        const std::int64_t shift = result.remainder.degree() - dd;
        // lead is +-1, so the factor stays integral.
        Int factor = result.remainder.coeff(result.remainder.degree()) * lead;
        result.quotient.add_term(shift, factor);
        for (const auto& [e, c] : d.terms()) result.remainder.add_term(e + shift, -factor * c);
    }
    return result;
}

SparseIntPoly reduce_exponents_mod(const SparseIntPoly& p, std::int64_t modulus) {
    if (modulus < 1) throw InvalidParams("reduce_exponents_mod: modulus must be positive");
    SparseIntPoly out;
    for (const auto& [e, c] : p.terms()) out.add_term(e % modulus, c);
    return out;
}

SparseIntPoly inflate_exponents(const SparseIntPoly& p, std::int64_t k) {
    if (k < 1) throw InvalidParams("inflate_exponents: k must be positive");
    SparseIntPoly out;
    for (const auto& [e, c] : p.terms()) out.add_term(e * k, c);
    return out;
}

} // namespace nutkit
