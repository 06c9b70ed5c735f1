#pragma once

#include <map>
#include <string>

#include "mnk/cyclotomic.hpp"

namespace mnk::fps {

using exact::Cyclotomic;

/// Formal series sum c_r q^r with rational exponents, lower-bounded support,
/// exact cyclotomic coefficients, and an explicit truncation order: exponents
/// >= truncation() are unknown. Binary operations intersect validity ranges.
class PuiseuxSeries {
  public:
    PuiseuxSeries() : trunc_(0) {}
    explicit PuiseuxSeries(Rat truncation) : trunc_(std::move(truncation)) {}

    static PuiseuxSeries monomial(const Rat& exp, Cyclotomic c, const Rat& truncation);
    static PuiseuxSeries constant(const Cyclotomic& c, const Rat& truncation) {
        return monomial(Rat(0), c, truncation);
    }

    const Rat& truncation() const { return trunc_; }
    const std::map<Rat, Cyclotomic>& terms() const { return terms_; }
    bool known_zero() const { return terms_.empty(); }

    /// Coefficient of q^r (zero if absent; throws if r is beyond the truncation).
    Cyclotomic coeff(const Rat& r) const;
    /// Smallest exponent with nonzero coefficient, if any.
    std::optional<Rat> leading_exponent() const;

    void set(const Rat& exp, Cyclotomic c);
    void add_term(const Rat& exp, const Cyclotomic& c);

    PuiseuxSeries operator+(const PuiseuxSeries& o) const;
    PuiseuxSeries operator-(const PuiseuxSeries& o) const;
    PuiseuxSeries operator*(const PuiseuxSeries& o) const;
    PuiseuxSeries scaled(const Cyclotomic& c) const;
    PuiseuxSeries shifted(const Rat& dexp) const;  // multiply by q^dexp
    /// Integer power (negative allowed when invertible).
    PuiseuxSeries pow(long k) const;
    /// Multiplicative inverse; leading coefficient must be invertible.
    PuiseuxSeries inverse() const;
    /// Substitute q -> q^{1/d} (exponents scale by 1/d), d >= 1.
    PuiseuxSeries stretch(const Rat& factor) const;
    PuiseuxSeries truncated(const Rat& new_trunc) const;

    bool operator==(const PuiseuxSeries& o) const {
        return trunc_ == o.trunc_ && terms_ == o.terms_;
    }

    /// Sorted `exponent<TAB>coefficient` rows.
    std::string str() const;

  private:
    std::map<Rat, Cyclotomic> terms_;
    Rat trunc_;
    void drop_unknown();
};

/// Generalized binomial coefficient binom(s, k) = s(s-1)...(s-k+1)/k!.
Rat binom(const Rat& s, long k);

/// (1 - x)^s = sum_{k<=order} binom(s,k) (-x)^k, as a series in the formal
/// variable x (exponent = power of x).
PuiseuxSeries binom_expand(const Rat& s, long order);

}  // namespace mnk::fps
