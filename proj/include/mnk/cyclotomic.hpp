#pragma once

#include <map>
#include <optional>
#include <string>

#include "mnk/rational.hpp"

namespace mnk::exact {

/// Element of a cyclotomic field, stored as a rational combination of
/// normalized exponentials e(r) = exp(2*pi*i*r), r in Q/Z.
///
/// Exponents are kept in a canonical basis: writing r = sum_p k_p / p^{a_p}
/// by partial fractions, every k_p satisfies 0 <= k_p < phi(p^{a_p}); larger
/// k_p are rewritten with the cyclotomic relation 1 + x^{p^{a-1}} + ... +
/// x^{(p-1)p^{a-1}} = 0. Equality is then structural equality of term maps.
class Cyclotomic {
  public:
    Cyclotomic() = default;
    static Cyclotomic zero() { return {}; }
    static Cyclotomic one() { return from_rational(1); }
    static Cyclotomic from_rational(const Rat& c);
    /// e(r), canonicalized.
    static Cyclotomic root_of_unity(const Rat& r);

    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const;
    /// Rational value if the element lies in Q, otherwise nullopt.
    std::optional<Rat> as_rational() const;
    /// r with *this == e(r), if this is a single root of unity.
    std::optional<Rat> as_root_of_unity() const;

    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator-() const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Cyclotomic& o);
    bool operator==(const Cyclotomic& o) const { return terms_ == o.terms_; }
    bool operator!=(const Cyclotomic& o) const { return terms_ != o.terms_; }

    Cyclotomic scaled(const Rat& c) const;
    /// Complex conjugate, e(r) -> e(-r).
    Cyclotomic conj() const;
    /// Galois twist e(r) -> e(t*r); t must be coprime to the conductor.
    Cyclotomic galois(long t) const;
    /// Exact multiplicative inverse. Throws on zero.
    Cyclotomic inverse() const;
    Cyclotomic pow(long k) const;

    /// lcm of exponent denominators (1 for rationals).
    Int modulus() const;

    const std::map<Rat, Rat>& terms() const { return terms_; }

    /// Prints in the grammar `c0 + c1*e(p1/q1) + ...`; "0" for zero.
    std::string str() const;
    static Cyclotomic parse(const std::string& text);

  private:
    // exponent in [0,1), canonical-basis form -> nonzero rational coefficient
    std::map<Rat, Rat> terms_;

    void add_term(const Rat& exp_canonical, const Rat& coeff);
    void add_root_multiple(const Rat& r, const Rat& coeff);
};

inline Cyclotomic operator*(const Rat& c, const Cyclotomic& x) { return x.scaled(c); }

}  // namespace mnk::exact
