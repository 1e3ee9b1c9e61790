#include "nutkit/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "nutkit/errors.hpp"

namespace nutkit {

namespace {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

// Signals that the current fixed-width tier cannot certify the next value;
// the caller escalates to a wider scalar and reruns. Results are identical
// across tiers, so escalation never changes the outcome.
struct TierOverflow {};

int bitlen_u128(u128 x) {
    if (x == 0) return 0;
    u64 hi = static_cast<u64>(x >> 64);
    if (hi) return 128 - __builtin_clzll(hi);
    return 64 - __builtin_clzll(static_cast<u64>(x));
}

int ctz_u128(u128 x) {
    u64 lo = static_cast<u64>(x);
    if (lo) return __builtin_ctzll(lo);
    return 64 + __builtin_ctzll(static_cast<u64>(x >> 64));
}

u128 abs_u128(i128 v) { return v < 0 ? -static_cast<u128>(v) : static_cast<u128>(v); }

int bitlen_abs_i128(i128 v) { return bitlen_u128(abs_u128(v)); }

// 256-bit two's-complement value as a pair of unsigned 128-bit halves.
struct I256 {
    u128 lo, hi;
};

I256 negate256(I256 t) {
    I256 r{~t.lo + 1, ~t.hi};
    if (r.lo == 0) r.hi += 1;
    return r;
}

bool is_negative(const I256& t) { return (t.hi >> 127) != 0; }

I256 mul_full_i128(i128 a, i128 b) {
    const bool negative = (a < 0) != (b < 0);
    u128 ua = abs_u128(a);
    u128 ub = abs_u128(b);
    u64 al = static_cast<u64>(ua), ah = static_cast<u64>(ua >> 64);
    u64 bl = static_cast<u64>(ub), bh = static_cast<u64>(ub >> 64);
    u128 p0 = static_cast<u128>(al) * bl;
    u128 p1 = static_cast<u128>(al) * bh;
    u128 p2 = static_cast<u128>(ah) * bl;
    u128 p3 = static_cast<u128>(ah) * bh;
    u128 mid = (p0 >> 64) + static_cast<u64>(p1) + static_cast<u64>(p2);
    I256 r;
    r.lo = (static_cast<u128>(static_cast<u64>(p0))) | (mid << 64);
    r.hi = p3 + (p1 >> 64) + (p2 >> 64) + (mid >> 64);
    return negative ? negate256(r) : r;
}

I256 sub256(I256 a, I256 b) {
    I256 r;
    r.lo = a.lo - b.lo;
    r.hi = a.hi - b.hi - (a.lo < b.lo ? 1 : 0);
    return r;
}

int bitlen_abs256(I256 t) {
    if (is_negative(t)) t = negate256(t);
    if (t.hi) return 128 + bitlen_u128(t.hi);
    return bitlen_u128(t.lo);
}

// Arithmetic right shift; s in [0, 255].
I256 shr256(I256 t, int s) {
    if (s == 0) return t;
    const u128 sign_fill = is_negative(t) ? ~static_cast<u128>(0) : 0;
    I256 r;
    if (s < 128) {
        r.lo = (t.lo >> s) | (t.hi << (128 - s));
        r.hi = (t.hi >> s) | (sign_fill << (128 - s));
    } else {
        r.lo = s == 128 ? t.hi : (t.hi >> (s - 128)) | (sign_fill << (256 - s));
        r.hi = sign_fill;
    }
    return r;
}

// Inverse of an odd value modulo 2^128 by Newton iteration.
u128 inverse_mod_2_128(u128 d) {
    u128 x = d;  // correct to 3 bits for odd d
    for (int i = 0; i < 6; ++i) x *= 2 - d * x;
    return x;
}

Int int_from_i128(i128 v) {
    const bool negative = v < 0;
    u128 m = abs_u128(v);
    Int hi(static_cast<unsigned long>(static_cast<u64>(m >> 64)));
    Int out = (hi << 64) + Int(static_cast<unsigned long>(static_cast<u64>(m)));
    return negative ? Int(-out) : out;
}

// --- fixed-width scalar policies -----------------------------------------

// Entries certified below 2^62; temporaries fit __int128.
struct TierInt64 {
    using Scalar = i64;
    static constexpr i64 kLimit = i64(1) << 62;

    struct Sweep {
        i128 prev;
        explicit Sweep(i64 p) : prev(p) {}
    };

    static Scalar from_int(const Int& v) {
        if (!v.fits_slong_p()) throw TierOverflow{};
        i64 s = mpz_get_si(v.get_mpz_t());
        if (s >= kLimit || s <= -kLimit) throw TierOverflow{};
        return s;
    }
    static bool is_zero(Scalar v) { return v == 0; }
    static Int to_int(Scalar v) { return Int(static_cast<long>(v)); }

    static Scalar step(Scalar piv, Scalar aij, Scalar aik, Scalar akj, const Sweep& sweep) {
        i128 t = static_cast<i128>(piv) * aij - static_cast<i128>(aik) * akj;
        i128 q = t / sweep.prev;
        if (q >= kLimit || q <= -kLimit) throw TierOverflow{};
        return static_cast<Scalar>(q);
    }
};

// Entries certified below 2^126; temporaries carried in 256 bits, exact
// division done with the odd-part inverse modulo 2^128.
struct TierInt128 {
    using Scalar = i128;

    struct Sweep {
        int shift;
        int bitlen;
        u128 inv;
        explicit Sweep(i128 prev) {
            shift = ctz_u128(abs_u128(prev));
            bitlen = bitlen_abs_i128(prev);
            inv = inverse_mod_2_128(static_cast<u128>(prev >> shift));
        }
    };

    static Scalar from_int(const Int& v) {
        if (v == 0) return 0;
        if (mpz_sizeinbase(v.get_mpz_t(), 2) > 125) throw TierOverflow{};
        Int mag = abs(v);
        const u64 lo = mpz_get_ui(mag.get_mpz_t());  // least significant 64 bits
        Int high = mag >> 64;
        const u64 hi = mpz_get_ui(high.get_mpz_t());
        i128 s = static_cast<i128>((static_cast<u128>(hi) << 64) | lo);
        return v < 0 ? -s : s;
    }
    static bool is_zero(Scalar v) { return v == 0; }
    static Int to_int(Scalar v) { return int_from_i128(v); }

    static Scalar step(Scalar piv, Scalar aij, Scalar aik, Scalar akj, const Sweep& sweep) {
        I256 t = sub256(mul_full_i128(piv, aij), mul_full_i128(aik, akj));
        if (t.lo == 0 && t.hi == 0) return 0;
        if (bitlen_abs256(t) - sweep.bitlen + 1 > 126) throw TierOverflow{};
        I256 shifted = shr256(t, sweep.shift);
        return static_cast<i128>(shifted.lo * sweep.inv);
    }
};

// Arbitrary precision; never overflows. Uses fused GMP primitives with a
// reused temporary.
struct TierMpz {
    using Scalar = Int;

    struct Sweep {
        const Int& prev;
        explicit Sweep(const Int& p) : prev(p) {}
    };

    static Scalar from_int(const Int& v) { return v; }
    static bool is_zero(const Scalar& v) { return v == 0; }
    static Int to_int(const Scalar& v) { return v; }

    static void step_inplace(Scalar& aij, const Scalar& piv, const Scalar& aik, const Scalar& akj,
                             const Sweep& sweep, Int& tmp) {
        mpz_mul(tmp.get_mpz_t(), piv.get_mpz_t(), aij.get_mpz_t());
        mpz_submul(tmp.get_mpz_t(), aik.get_mpz_t(), akj.get_mpz_t());
        mpz_divexact(aij.get_mpz_t(), tmp.get_mpz_t(), sweep.prev.get_mpz_t());
    }
};

struct EchelonForm {
    int cols = 0;
    std::vector<int> pivot_cols;
    std::vector<int> free_cols;
    std::vector<std::vector<Int>> rows;  // one per pivot, full width
};

template <class Tier>
EchelonForm eliminate(const IntMatrix& m) {
    using S = typename Tier::Scalar;
    const int rows = m.rows(), cols = m.cols();
    std::vector<S> a(static_cast<std::size_t>(rows) * cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) a[static_cast<std::size_t>(i) * cols + j] = Tier::from_int(m(i, j));

    std::vector<int> row_of(static_cast<std::size_t>(rows));
    std::iota(row_of.begin(), row_of.end(), 0);
    auto at = [&](int i, int j) -> S& { return a[static_cast<std::size_t>(row_of[static_cast<std::size_t>(i)]) * cols + j]; };

    EchelonForm out;
    out.cols = cols;
    S prev = Tier::from_int(Int(1));
    int rank = 0;
    for (int c = 0; c < cols; ++c) {
        int pivot_row = -1;
        for (int i = rank; i < rows; ++i) {
            if (!Tier::is_zero(at(i, c))) {
                pivot_row = i;
                break;
            }
        }
        if (pivot_row < 0) {
            out.free_cols.push_back(c);
            continue;
        }
        std::swap(row_of[static_cast<std::size_t>(rank)], row_of[static_cast<std::size_t>(pivot_row)]);
        const S piv = at(rank, c);
        typename Tier::Sweep sweep(prev);
        if constexpr (std::is_same_v<Tier, TierMpz>) {
            Int tmp;
            for (int i = rank + 1; i < rows; ++i) {
                const S aik = at(i, c);
                for (int j = c + 1; j < cols; ++j)
                    Tier::step_inplace(at(i, j), piv, aik, at(rank, j), sweep, tmp);
                at(i, c) = 0;
            }
        } else {
            for (int i = rank + 1; i < rows; ++i) {
                const S aik = at(i, c);
                S* dst = &at(i, c);
                const S* src = &at(rank, c);
                for (int j = c + 1; j < cols; ++j)
                    dst[j - c] = Tier::step(piv, dst[j - c], aik, src[j - c], sweep);
                at(i, c) = 0;
            }
        }
        out.pivot_cols.push_back(c);
        prev = piv;
        ++rank;
    }
    out.rows.reserve(out.pivot_cols.size());
    for (int i = 0; i < rank; ++i) {
        std::vector<Int> row(static_cast<std::size_t>(cols));
        for (int j = out.pivot_cols[static_cast<std::size_t>(i)]; j < cols; ++j)
            row[static_cast<std::size_t>(j)] = Tier::to_int(at(i, j));
        out.rows.push_back(std::move(row));
    }
    return out;
}

EchelonForm eliminate_tiered(const IntMatrix& m) {
    // Hadamard-style estimate of minor sizes picks the starting tier; on a
    // certification failure the elimination reruns one tier wider.
    double hadamard_bits = 0.0;
    bool entries_fit_int64 = true;
    for (int i = 0; i < m.rows(); ++i) {
        double norm_sq = 0.0;
        for (int j = 0; j < m.cols(); ++j) {
            const Int& e = m(i, j);
            if (e != 0) {
                if (!e.fits_slong_p()) entries_fit_int64 = false;
                double d = std::abs(e.get_d());
                norm_sq += d * d;
            }
        }
        if (norm_sq > 0) hadamard_bits += 0.5 * std::log2(norm_sq);
    }
    int start = entries_fit_int64 ? (hadamard_bits <= 60.0 ? 0 : 1) : 2;
    if (start == 1 && hadamard_bits > 1000.0) start = 2;
    for (int tier = start; tier < 3; ++tier) {
        try {
            switch (tier) {
                case 0: return eliminate<TierInt64>(m);
                case 1: return eliminate<TierInt128>(m);
                default: return eliminate<TierMpz>(m);
            }
        } catch (const TierOverflow&) {
            continue;
        }
    }
    return eliminate<TierMpz>(m);
}

std::vector<Int> normalize_to_coprime(const std::vector<Rat>& v) {
    Int denom_lcm = 1;
    for (const Rat& x : v) mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), x.get_den().get_mpz_t());
    std::vector<Int> w(v.size());
    Int gcd_all = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        w[i] = v[i].get_num() * (denom_lcm / v[i].get_den());
        mpz_gcd(gcd_all.get_mpz_t(), gcd_all.get_mpz_t(), w[i].get_mpz_t());
    }
    if (gcd_all > 1)
        for (Int& x : w) x /= gcd_all;
    for (const Int& x : w) {
        if (x != 0) {
            if (x < 0)
                for (Int& y : w) y = -y;
            break;
        }
    }
    return w;
}

} // namespace

KernelBasis kernel_basis(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw NotSquare("kernel_basis: matrix must be square");
    const int n = m.cols();
    EchelonForm ech = eliminate_tiered(m);

    KernelBasis basis;
    for (int fc : ech.free_cols) {
        std::vector<Rat> v(static_cast<std::size_t>(n));
        v[static_cast<std::size_t>(fc)] = 1;
        for (int i = static_cast<int>(ech.pivot_cols.size()) - 1; i >= 0; --i) {
            const int pc = ech.pivot_cols[static_cast<std::size_t>(i)];
            const auto& row = ech.rows[static_cast<std::size_t>(i)];
            Rat sum = 0;
            for (int j = pc + 1; j < n; ++j)
                if (row[static_cast<std::size_t>(j)] != 0 && v[static_cast<std::size_t>(j)] != 0)
                    sum += Rat(row[static_cast<std::size_t>(j)]) * v[static_cast<std::size_t>(j)];
            v[static_cast<std::size_t>(pc)] = -sum / Rat(row[static_cast<std::size_t>(pc)]);
        }
        basis.vectors.push_back(normalize_to_coprime(v));
    }

    // Exact check of every vector against the input matrix.
    for (const auto& vec : basis.vectors) {
        for (int i = 0; i < n; ++i) {
            Int dot = 0;
            for (int j = 0; j < n; ++j) {
                const Int& e = m(i, j);
                if (e != 0) dot += e * vec[static_cast<std::size_t>(j)];
            }
            if (dot != 0) throw std::logic_error("kernel_basis: verification A*v = 0 failed");
        }
    }
    return basis;
}

std::int64_t nullity(const Graph& g) {
    return kernel_basis(adjacency_matrix(g)).dimension();
}

bool is_nut_kernel(const KernelBasis& basis) {
    if (basis.dimension() != 1) return false;
    for (const Int& x : basis.vectors.front())
        if (x == 0) return false;
    return true;
}

bool is_nut(const Graph& g) {
    if (g.vertex_count() == 0) return false;
    return is_nut_kernel(kernel_basis(adjacency_matrix(g)));
}

bool verify_local_condition(const Graph& g, const std::vector<Rat>& v) {
    if (static_cast<int>(v.size()) != g.vertex_count())
        throw DimensionMismatch("verify_local_condition: vector length must match vertex count");
    for (int x = 0; x < g.vertex_count(); ++x) {
        Rat sum = 0;
        for (int y : g.neighbors(x)) sum += v[static_cast<std::size_t>(y)];
        if (sum != 0) return false;
    }
    return true;
}

bool verify_local_condition(const Graph& g, const std::vector<Int>& v) {
    return verify_local_condition(g, to_rational(v));
}

OrbitProfile orbit_profile(const std::vector<Rat>& v, const std::vector<int>& orbit) {
    for (int idx : orbit)
        if (idx < 0 || static_cast<std::size_t>(idx) >= v.size())
            throw std::out_of_range("orbit_profile: orbit index out of range");
    const std::size_t k = orbit.size();
    bool constant = true;
    for (std::size_t j = 1; j < k && constant; ++j)
        constant = v[static_cast<std::size_t>(orbit[j])] == v[static_cast<std::size_t>(orbit[0])];
    if (constant) return OrbitProfile::Constant;
    if (k % 2 == 0) {
        bool alternating = true;
        for (std::size_t j = 0; j < k && alternating; ++j) {
            Rat expected = v[static_cast<std::size_t>(orbit[0])];
            if (j % 2 == 1) expected = -expected;
            alternating = v[static_cast<std::size_t>(orbit[j])] == expected;
        }
        if (alternating) return OrbitProfile::Alternating;
    }
    return OrbitProfile::Neither;
}

OrbitProfile orbit_profile(const std::vector<Int>& v, const std::vector<int>& orbit) {
    return orbit_profile(to_rational(v), orbit);
}

std::vector<Rat> to_rational(const std::vector<Int>& v) {
    std::vector<Rat> out;
    out.reserve(v.size());
    for (const Int& x : v) out.emplace_back(x);
    return out;
}

} // namespace nutkit
