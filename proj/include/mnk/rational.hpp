#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace mnk {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Int rat_floor(const Rat& r) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

/// Representative of r mod 1 in [0, 1).
inline Rat rat_mod1(const Rat& r) {
    Rat m = r - Rat(rat_floor(r));
    m.canonicalize();
    return m;
}

inline bool rat_is_integer(const Rat& r) { return r.get_den() == 1; }

inline Int int_lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

inline Int int_gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

/// Exact square root if n is a perfect square, otherwise nullopt behavior via flag.
inline bool int_sqrt_exact(const Int& n, Int& root) {
    if (n < 0) return false;
    Int r, rem;
    mpz_sqrtrem(r.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
    if (rem != 0) return false;
    root = r;
    return true;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

/// Parses "p", "-p", "p/q". Throws std::invalid_argument on malformed input.
inline Rat parse_rat(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    r.canonicalize();
    return r;
}

inline long to_long(const Int& n) {
    if (!n.fits_slong_p()) throw std::overflow_error("integer out of long range");
    return n.get_si();
}

}  // namespace mnk
