#include "mnk/lattice.hpp"

#include <array>
#include <stdexcept>

namespace mnk::lattice {

NHType NHType::parse(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty lattice type");
    NHType t;
    std::string body = text;
    const char last = body.back();
    if (last == '+' || last == '-') {
        t.sign = last == '+' ? +1 : -1;
        body.pop_back();
    }
    const auto bar = body.find('|');
    try {
        if (bar == std::string::npos) {
            t.n = std::stol(body);
            t.h = 1;
        } else {
            t.n = std::stol(body.substr(0, bar));
            t.h = std::stol(body.substr(bar + 1));
        }
    } catch (const std::exception&) {
        throw std::invalid_argument("bad lattice type literal: " + text);
    }
    if (t.n < 1 || t.h < 1 || t.n % t.h != 0)
        throw std::invalid_argument("lattice type requires h | n: " + text);
    return t;
}

std::string NHType::str() const {
    std::string s = std::to_string(n);
    if (h != 1) s += "|" + std::to_string(h);
    s += sign > 0 ? "+" : "-";
    return s;
}

std::pair<long, long> DiscriminantForm::dual_coords(const Elem& e) const {
    const long a = e[0], b = e[1];
    return {basis[0] * a + basis[1] * b, basis[2] * a + basis[3] * b};
}

std::pair<long, long> DiscriminantForm::section(const Elem& e) const {
    // dual-lattice point alpha*(1, -sign) + beta*(0, h) inside Z x Z
    const auto [alpha, beta] = dual_coords(e);
    return {alpha, beta * type.h - type.sign * alpha};
}

namespace {

// In dual-basis coordinates (alpha, beta), the discriminant group is
// Z^2 / <(n, w), (0, n)> with w = sign*2n/h. For h <= 2 the plain coordinate
// projection is a section; for larger h the relation couples the coordinates
// and a Smith reduction supplies the change of basis.
std::array<long, 4> section_basis(long n, long h, int sign, long n1) {
    if (h <= 2) return {1, 0, 0, 1};
    long w = (sign * 2 * n / h) % n;
    if (w < 0) w += n;
    // diagonalize M = [[n, 0], [w, n]] by unimodular row/column operations,
    // tracking the row transform U (y = U x are the canonical coordinates)
    long m00 = n, m01 = 0, m10 = w, m11 = n;
    long u00 = 1, u01 = 0, u10 = 0, u11 = 1;
    auto row_sub = [&](long q) {  // row1 -= q * row0
        m10 -= q * m00;
        m11 -= q * m01;
        u10 -= q * u00;
        u11 -= q * u01;
    };
    auto row_swap = [&]() {
        std::swap(m00, m10);
        std::swap(m01, m11);
        std::swap(u00, u10);
        std::swap(u01, u11);
    };
    while (m10 != 0) {
        if (std::abs(m10) < std::abs(m00) || m00 == 0) row_swap();
        if (m10 == 0) break;
        row_sub(m00 == 0 ? 0 : m10 / m00);
        if (m00 == 0) row_swap();
    }
    // clear the off-diagonal by a column operation (does not affect U);
    // m00 = gcd(n, w) always divides m01 here
    if (m00 == 0 || m01 % m00 != 0) throw std::logic_error("discriminant basis reduction failed");
    m01 = 0;
    // U is unimodular: invert it
    const long det = u00 * u11 - u01 * u10;
    long v00 = u11 * det, v01 = -u01 * det, v10 = -u10 * det, v11 = u00 * det;
    // y = U x with |y1| classes = |m00|, |y2| = |m11|; group coords are
    // (a mod n1, b mod n2) with n1 = nh/(h,2): align y2 <-> the n1 factor
    if (std::abs(m11) == n1) return {v01, v00, v11, v10};  // x = U^{-1} (b, a)
    return {v00, v01, v10, v11};                           // x = U^{-1} (a, b)
}

}  // namespace

DiscriminantForm build_discriminant(const NHType& t) {
    if (t.n % t.h != 0) throw std::invalid_argument("h does not divide n");
    const long h2 = t.h % 2 == 0 ? 2 : 1;  // (h, 2)
    const long n1 = t.n * t.h / h2;
    const long n2 = t.n * h2 / t.h;
    FiniteAbelianGroup g({n1, n2});
    GroupFun rho(g), rho_bar(g);
    const long nh = t.n * t.h;
    DiscriminantForm d{t, g, rho, rho_bar, section_basis(t.n, t.h, t.sign, n1)};
    for (long idx = 0; idx < g.order(); ++idx) {
        const Elem e = g.unrank(idx);
        const auto [alpha, beta] = d.dual_coords(e);
        // rho(alpha, beta) = e((alpha beta h - sign alpha^2)/nh)
        const Rat ex = Rat(alpha * beta * t.h - t.sign * alpha * alpha, nh);
        d.rho.set(e, Cyclotomic::root_of_unity(rat_mod1(ex)));
        d.rho_bar.set(e, Cyclotomic::root_of_unity(rat_mod1(-ex)));
    }
    return d;
}

bool shear_check(const NHType& t) {
    if (t.h != 1 && t.h != 2) throw std::invalid_argument("shear_check needs h in {1,2}");
    if (t.h == 1) {
        const DiscriminantForm d = build_discriminant(t);
        const auto& g = d.group;
        for (long idx = 0; idx < g.order(); ++idx) {
            const Elem e = g.unrank(idx);
            const long a = e[0], b = e[1];
            const Elem sheared = g.reduce({a, b + t.sign * a});
            const Rat hyp = rat_mod1(Rat(a * b, t.n));
            if (d.rho.at(sheared) != Cyclotomic::root_of_unity(hyp)) return false;
            if (d.rho_bar.at(sheared) != Cyclotomic::root_of_unity(rat_mod1(-Rat(a * b, t.n))))
                return false;
        }
        return true;
    }
    // h = 2: (a,b) -> (a, a+b) carries the n|2+ forms to the n|2- forms
    const DiscriminantForm dp = build_discriminant({t.n, 2, +1});
    const DiscriminantForm dm = build_discriminant({t.n, 2, -1});
    const auto& g = dp.group;
    for (long idx = 0; idx < g.order(); ++idx) {
        const Elem e = g.unrank(idx);
        const Elem sheared = g.reduce({e[0], e[0] + e[1]});
        if (dp.rho.at(sheared) != dm.rho.at(e)) return false;
        if (dp.rho_bar.at(sheared) != dm.rho_bar.at(e)) return false;
    }
    return true;
}

bool type_sum_check(const GroupFun& q1, const GroupFun& q2) {
    if (!(q1.group() == q2.group()))
        throw std::invalid_argument("type_sum_check needs a common group");
    GroupFun prod(q1.group());
    for (long i = 0; i < q1.group().order(); ++i) {
        const Elem e = q1.group().unrank(i);
        prod.set(e, q1.at(e) * q2.at(e));
    }
    return abgrp::is_quadratic(prod);
}

}  // namespace mnk::lattice
