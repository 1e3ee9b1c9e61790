#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace nutkit {

/// Arbitrary-precision integer. All exact computations in the library run on
/// this type (or on fixed-width fast paths that escalate to it).
using Int = mpz_class;

/// Arbitrary-precision rational, used for kernel back-substitution and the
/// local-condition check.
using Rat = mpq_class;

inline bool fits_int64(const Int& v) { return v.fits_slong_p(); }

inline std::int64_t to_int64(const Int& v) { return mpz_get_si(v.get_mpz_t()); }

inline std::string to_string(const Int& v) { return v.get_str(); }

} // namespace nutkit
