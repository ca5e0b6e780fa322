#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace hhcert {

using Int = mpz_class;
using Rat = mpq_class;

inline bool is_integer(const Rat& r) { return mpz_cmp_ui(r.get_den_mpz_t(), 1) == 0; }

inline std::optional<Int> as_integer(const Rat& r) {
    if (!is_integer(r)) return std::nullopt;
    return Int(r.get_num());
}

inline bool fits_i64(const Int& z) { return z.fits_slong_p(); }

inline std::int64_t to_i64(const Int& z) {
    if (!fits_i64(z)) throw std::overflow_error("integer does not fit in 64 bits");
    return z.get_si();
}

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// Exact integer square root test: returns sqrt if n is a perfect square.
inline std::optional<Int> exact_sqrt(const Int& n) {
    if (n < 0) return std::nullopt;
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

inline Rat rat_from_string(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    r.canonicalize();
    return r;
}

}  // namespace hhcert
