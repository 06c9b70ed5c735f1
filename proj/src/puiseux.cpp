#include "mnk/puiseux.hpp"

#include <sstream>
#include <stdexcept>

namespace mnk::fps {

PuiseuxSeries PuiseuxSeries::monomial(const Rat& exp, Cyclotomic c, const Rat& truncation) {
    PuiseuxSeries s(truncation);
    if (!c.is_zero() && exp < truncation) s.terms_.emplace(exp, std::move(c));
    return s;
}

Cyclotomic PuiseuxSeries::coeff(const Rat& r) const {
    if (r >= trunc_) throw std::out_of_range("coefficient beyond truncation order");
    auto it = terms_.find(r);
    return it == terms_.end() ? Cyclotomic::zero() : it->second;
}

std::optional<Rat> PuiseuxSeries::leading_exponent() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first;
}

void PuiseuxSeries::set(const Rat& exp, Cyclotomic c) {
    if (exp >= trunc_) return;
    if (c.is_zero())
        terms_.erase(exp);
    else
        terms_[exp] = std::move(c);
}

void PuiseuxSeries::add_term(const Rat& exp, const Cyclotomic& c) {
    if (exp >= trunc_ || c.is_zero()) return;
    auto it = terms_.find(exp);
    if (it == terms_.end()) {
        terms_.emplace(exp, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

void PuiseuxSeries::drop_unknown() {
    for (auto it = terms_.begin(); it != terms_.end();)
        if (it->first >= trunc_)
            it = terms_.erase(it);
        else
            ++it;
}

PuiseuxSeries PuiseuxSeries::operator+(const PuiseuxSeries& o) const {
    PuiseuxSeries r(std::min(trunc_, o.trunc_));
    r.terms_ = terms_;
    r.drop_unknown();
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

PuiseuxSeries PuiseuxSeries::operator-(const PuiseuxSeries& o) const {
    return *this + o.scaled(Cyclotomic::from_rational(-1));
}

PuiseuxSeries PuiseuxSeries::operator*(const PuiseuxSeries& o) const {
    // validity: a term q^e of one factor meets the other's unknown region at
    // e + other.trunc; the product is valid below the minimum over both sides.
    Rat t = trunc_ + o.trunc_;  // placeholder upper bound
    const Rat lead_a = terms_.empty() ? trunc_ : terms_.begin()->first;
    const Rat lead_b = o.terms_.empty() ? o.trunc_ : o.terms_.begin()->first;
    t = std::min(trunc_ + lead_b, o.trunc_ + lead_a);
    PuiseuxSeries r(t);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            if (e1 + e2 >= t) continue;
            r.add_term(e1 + e2, c1 * c2);
        }
    return r;
}

PuiseuxSeries PuiseuxSeries::scaled(const Cyclotomic& c) const {
    PuiseuxSeries r(trunc_);
    if (c.is_zero()) return r;
    for (const auto& [e, v] : terms_) {
        Cyclotomic p = v * c;
        if (!p.is_zero()) r.terms_.emplace(e, std::move(p));
    }
    return r;
}

PuiseuxSeries PuiseuxSeries::shifted(const Rat& dexp) const {
    PuiseuxSeries r(trunc_ + dexp);
    for (const auto& [e, v] : terms_) r.terms_.emplace(e + dexp, v);
    return r;
}

PuiseuxSeries PuiseuxSeries::pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    if (k == 0) {
        const Rat lead = terms_.empty() ? Rat(0) : terms_.begin()->first;
        return monomial(Rat(0), Cyclotomic::one(), trunc_ - lead);
    }
    PuiseuxSeries acc = *this;
    for (long i = 1; i < k; ++i) acc = acc * *this;
    return acc;
}

PuiseuxSeries PuiseuxSeries::inverse() const {
    if (terms_.empty()) throw std::domain_error("inverse of unknown-zero series");
    const Rat lead = terms_.begin()->first;
    const Cyclotomic c0inv = terms_.begin()->second.inverse();
    const Rat span = trunc_ - lead;
    if (span <= 0) throw std::domain_error("inverse with empty validity range");
    // place u = c0^{-1} q^{-lead} * this on the integer grid (1/m)Z
    Int m = Int(span.get_den());
    for (const auto& [e, v] : terms_) m = int_lcm(m, Int(Rat(e - lead).get_den()));
    const Rat step = Rat(1) / Rat(m);
    const long nmax = to_long(Int(Rat(span * Rat(m)).get_num()));  // span*m is integral
    std::vector<Cyclotomic> u(nmax + 1), b(nmax + 1);
    for (const auto& [e, v] : terms_) {
        const Rat idx = Rat((e - lead) * Rat(m));
        u[to_long(Int(idx.get_num()))] = c0inv * v;
    }
    b[0] = Cyclotomic::one();
    for (long i = 1; i <= nmax; ++i) {
        Cyclotomic s;
        for (long d = 1; d <= i; ++d)
            if (!u[d].is_zero() && !b[i - d].is_zero()) s += u[d] * b[i - d];
        b[i] = -s;
    }
    PuiseuxSeries out(span - lead);
    for (long i = 0; i <= nmax; ++i) {
        if (b[i].is_zero()) continue;
        const Rat e = Rat(i) * step - lead;
        if (e < out.trunc_) out.terms_.emplace(e, b[i] * c0inv);
    }
    return out;
}

PuiseuxSeries PuiseuxSeries::stretch(const Rat& factor) const {
    if (factor <= 0) throw std::invalid_argument("stretch factor must be positive");
    PuiseuxSeries r(trunc_ * factor);
    for (const auto& [e, v] : terms_) r.terms_.emplace(e * factor, v);
    return r;
}

PuiseuxSeries PuiseuxSeries::truncated(const Rat& new_trunc) const {
    PuiseuxSeries r(std::min(trunc_, new_trunc));
    r.terms_ = terms_;
    r.drop_unknown();
    return r;
}

std::string PuiseuxSeries::str() const {
    std::ostringstream os;
    for (const auto& [e, v] : terms_) os << rat_str(e) << "\t" << v.str() << "\n";
    return os.str();
}

Rat binom(const Rat& s, long k) {
    Rat num(1), den(1);
    for (long i = 0; i < k; ++i) {
        num *= (s - Rat(i));
        den *= Rat(i + 1);
    }
    return num / den;
}

PuiseuxSeries binom_expand(const Rat& s, long order) {
    PuiseuxSeries r(Rat(order + 1));
    for (long k = 0; k <= order; ++k) {
        Rat c = binom(s, k);
        if (k % 2) c = -c;
        if (c != 0) r.set(Rat(k), Cyclotomic::from_rational(c));
    }
    return r;
}

}  // namespace mnk::fps
