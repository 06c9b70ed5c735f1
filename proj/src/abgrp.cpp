#include "mnk/abgrp.hpp"

#include <sstream>
#include <stdexcept>

namespace mnk::abgrp {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<long> factors) : factors_(std::move(factors)) {
    if (factors_.empty()) throw std::invalid_argument("group needs at least one factor");
    order_ = 1;
    for (long n : factors_) {
        if (n < 1) throw std::invalid_argument("cyclic factor must be >= 1");
        order_ *= n;
    }
}

Elem FiniteAbelianGroup::reduce(const Elem& a) const {
    if (a.size() != factors_.size()) throw std::invalid_argument("element rank mismatch");
    Elem r(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        r[i] = a[i] % factors_[i];
        if (r[i] < 0) r[i] += factors_[i];
    }
    return r;
}

Elem FiniteAbelianGroup::add(const Elem& a, const Elem& b) const {
    Elem r(factors_.size());
    for (size_t i = 0; i < factors_.size(); ++i) r[i] = (a[i] + b[i]) % factors_[i];
    return r;
}

Elem FiniteAbelianGroup::neg(const Elem& a) const {
    Elem r(factors_.size());
    for (size_t i = 0; i < factors_.size(); ++i) r[i] = a[i] ? factors_[i] - a[i] : 0;
    return r;
}

long FiniteAbelianGroup::rank(const Elem& a) const {
    if (a.size() != factors_.size()) throw std::invalid_argument("element rank mismatch");
    long idx = 0;
    for (size_t i = 0; i < factors_.size(); ++i) {
        long c = a[i] % factors_[i];
        if (c < 0) c += factors_[i];
        idx = idx * factors_[i] + c;
    }
    return idx;
}

Elem FiniteAbelianGroup::unrank(long idx) const {
    Elem a(factors_.size());
    for (size_t i = factors_.size(); i-- > 0;) {
        a[i] = idx % factors_[i];
        idx /= factors_[i];
    }
    return a;
}

std::string FiniteAbelianGroup::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < factors_.size(); ++i) {
        if (i) os << ",";
        os << factors_[i];
    }
    return os.str();
}

FiniteAbelianGroup FiniteAbelianGroup::parse(const std::string& text) {
    std::vector<long> fs;
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        size_t pos = 0;
        long v = std::stol(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument("bad group literal: " + text);
        fs.push_back(v);
    }
    return FiniteAbelianGroup(fs);
}

std::string elem_str(const Elem& e) {
    std::ostringstream os;
    for (size_t i = 0; i < e.size(); ++i) {
        if (i) os << ",";
        os << e[i];
    }
    return os.str();
}

Elem parse_elem(const std::string& text) {
    Elem e;
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) e.push_back(std::stol(tok));
    return e;
}

GroupFun::GroupFun(FiniteAbelianGroup g, Cyclotomic fill)
    : group_(std::move(g)), vals_(group_.order(), std::move(fill)) {}

long group_dual_order(const FiniteAbelianGroup& g) { return g.order(); }

bool is_quadratic(const GroupFun& q) {
    const auto& g = q.group();
    const long n = g.order();
    // additive exponent table: Q(i) = e(r_i); the identities become integer
    // congruences after clearing denominators
    std::vector<Rat> rlog(n);
    Int lcm = 1;
    for (long i = 0; i < n; ++i) {
        const auto r = q.values()[i].as_root_of_unity();
        if (!r) throw std::invalid_argument("quadratic-function value is not a root of unity");
        rlog[i] = *r;
        lcm = int_lcm(lcm, Int(r->get_den()));
    }
    const long L = to_long(lcm);
    std::vector<long> rl(n);
    for (long i = 0; i < n; ++i) rl[i] = to_long(Int(Rat(rlog[i] * Rat(L)).get_num())) % L;

    // sum and negation tables by rank
    std::vector<long> neg(n);
    std::vector<long> add(n * n);
    for (long i = 0; i < n; ++i) {
        const Elem ei = g.unrank(i);
        neg[i] = g.rank(g.neg(ei));
        for (long j = 0; j < n; ++j) add[i * n + j] = g.rank(g.add(ei, g.unrank(j)));
    }
    for (long i = 0; i < n; ++i)
        if (rl[i] != rl[neg[i]]) return false;
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            const long ij = add[i * n + j];
            for (long k = 0; k < n; ++k) {
                const long s = rl[add[ij * n + k]] + rl[i] + rl[j] + rl[k] -
                               rl[ij] - rl[add[i * n + k]] - rl[add[j * n + k]];
                if (s % L != 0) return false;
            }
        }
    return true;
}

Cyclotomic associated_bilinear(const GroupFun& q, const Elem& i, const Elem& j) {
    const auto& g = q.group();
    return q.at(g.add(i, j)) * (q.at(i) * q.at(j)).inverse();
}

}  // namespace mnk::abgrp
