#include "mnk/cyclotomic.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace mnk::exact {

namespace {

std::vector<std::pair<long, int>> factorize(long n) {
    std::vector<std::pair<long, int>> f;
    for (long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            int a = 0;
            while (n % d == 0) {
                n /= d;
                ++a;
            }
            f.emplace_back(d, a);
        }
    }
    if (n > 1) f.emplace_back(n, 1);
    return f;
}

long pow_long(long p, int a) {
    long r = 1;
    while (a-- > 0) r *= p;
    return r;
}

// e(k/p^a) reduced within its prime-power component: exponents k' < phi(p^a).
void reduce_prime_power(long p, int a, long k, std::map<long, Rat>& out, const Rat& coeff) {
    const long pa = pow_long(p, a);
    k %= pa;
    if (k < 0) k += pa;
    const long phi = pow_long(p, a - 1) * (p - 1);
    if (k < phi) {
        out[k] += coeff;
        return;
    }
    const long t = k - phi;
    const long step = pow_long(p, a - 1);
    for (long i = 0; i < p - 1; ++i) reduce_prime_power(p, a, t + i * step, out, -coeff);
}

}  // namespace

void Cyclotomic::add_term(const Rat& e, const Rat& c) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (c != 0) terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

// Adds coeff * e(r) in canonical form.
void Cyclotomic::add_root_multiple(const Rat& r, const Rat& coeff) {
    if (coeff == 0) return;
    const Rat rm = rat_mod1(r);
    const Int den = rm.get_den();
    if (den == 1) {
        add_term(Rat(0), coeff);
        return;
    }
    // split r = sum_p k_p / p^{a_p} and reduce each component
    std::map<Rat, Rat> parts{{Rat(0), Rat(1)}};  // running tensor product
    long den_l = to_long(den);
    long num_l = to_long(Int(rm.get_num()));
    for (auto [p, a] : factorize(den_l)) {
        const long pa = pow_long(p, a);
        const long rest = den_l / pa;
        // k ≡ num * inv(rest) mod pa
        Int inv;
        mpz_invert(inv.get_mpz_t(), Int(rest % pa).get_mpz_t(), Int(pa).get_mpz_t());
        long k = to_long(Int((Int(num_l) % pa * inv) % pa));
        if (k < 0) k += pa;
        std::map<long, Rat> comp;
        reduce_prime_power(p, a, k, comp, Rat(1));
        std::map<Rat, Rat> next;
        for (const auto& [e1, c1] : parts)
            for (const auto& [k2, c2] : comp) {
                Rat e = rat_mod1(e1 + Rat(Int(k2), Int(pa)));
                Rat c = c1 * c2;
                auto it = next.find(e);
                if (it == next.end())
                    next.emplace(e, c);
                else {
                    it->second += c;
                    if (it->second == 0) next.erase(it);
                }
            }
        parts = std::move(next);
    }
    for (const auto& [e, c] : parts) add_term(e, coeff * c);
}

Cyclotomic Cyclotomic::from_rational(const Rat& c) {
    Cyclotomic x;
    if (c != 0) x.terms_.emplace(Rat(0), c);
    return x;
}

Cyclotomic Cyclotomic::root_of_unity(const Rat& r) {
    Cyclotomic x;
    x.add_root_multiple(r, Rat(1));
    return x;
}

bool Cyclotomic::is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

std::optional<Rat> Cyclotomic::as_rational() const {
    if (terms_.empty()) return Rat(0);
    if (terms_.size() == 1 && terms_.begin()->first == 0) return terms_.begin()->second;
    return std::nullopt;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
    Cyclotomic r = *this;
    r += o;
    return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    Cyclotomic r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) r.add_root_multiple(e1 + e2, c1 * c2);
    return r;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
    *this = *this * o;
    return *this;
}

Cyclotomic Cyclotomic::scaled(const Rat& c) const {
    Cyclotomic r;
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
}

Cyclotomic Cyclotomic::conj() const {
    Cyclotomic r;
    for (const auto& [e, c] : terms_) r.add_root_multiple(-e, c);
    return r;
}

Cyclotomic Cyclotomic::galois(long t) const {
    Cyclotomic r;
    for (const auto& [e, c] : terms_) r.add_root_multiple(t * e, c);
    return r;
}

Int Cyclotomic::modulus() const {
    Int m = 1;
    for (const auto& [e, c] : terms_) m = int_lcm(m, Int(e.get_den()));
    return m;
}

std::optional<Rat> Cyclotomic::as_root_of_unity() const {
    if (terms_.empty()) return std::nullopt;
    // roots of unity in Q(zeta_m) form mu_m (m even) or mu_{2m} (m odd)
    Int m = modulus();
    if (m % 2 != 0) m *= 2;
    const long ml = to_long(m);
    for (long j = 0; j < ml; ++j) {
        const Rat r(Int(j), m);
        if (*this == root_of_unity(r)) return rat_mod1(r);
    }
    return std::nullopt;
}

Cyclotomic Cyclotomic::inverse() const {
    if (terms_.empty()) throw std::domain_error("division by zero cyclotomic");
    if (terms_.size() == 1) {
        const auto& [e, c] = *terms_.begin();
        return root_of_unity(-e).scaled(Rat(1) / c);
    }
    // norm trick: 1/x = (prod_{t != 1} sigma_t(x)) / N(x)
    const long m = to_long(modulus());
    Cyclotomic prod = one();
    for (long t = 2; t < m; ++t) {
        if (std::gcd(t, m) != 1) continue;
        prod *= galois(t);
    }
    const Cyclotomic norm = *this * prod;
    const auto n = norm.as_rational();
    if (!n || *n == 0) throw std::domain_error("cyclotomic norm failure");
    return prod.scaled(Rat(1) / *n);
}

Cyclotomic Cyclotomic::pow(long k) const {
    Cyclotomic base = k < 0 ? inverse() : *this;
    unsigned long e = k < 0 ? -(unsigned long)k : (unsigned long)k;
    Cyclotomic r = one();
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

std::string Cyclotomic::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rat a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (e == 0)
            os << rat_str(a);
        else if (a == 1)
            os << "e(" << rat_str(e) << ")";
        else
            os << rat_str(a) << "*e(" << rat_str(e) << ")";
    }
    return os.str();
}

namespace {

struct Scanner {
    const std::string& s;
    size_t i = 0;
    explicit Scanner(const std::string& t) : s(t) {}
    void ws() {
        while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
    }
    bool eat(char c) {
        ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    Rat rational() {
        ws();
        size_t j = i;
        if (j < s.size() && (s[j] == '+' || s[j] == '-')) ++j;
        size_t k = j;
        while (k < s.size() && std::isdigit((unsigned char)s[k])) ++k;
        if (k == j) throw std::invalid_argument("expected number in cyclotomic literal");
        if (k < s.size() && s[k] == '/') {
            ++k;
            while (k < s.size() && std::isdigit((unsigned char)s[k])) ++k;
        }
        Rat r = parse_rat(s.substr(i, k - i));
        i = k;
        return r;
    }
};

}  // namespace

Cyclotomic Cyclotomic::parse(const std::string& text) {
    Scanner sc(text);
    Cyclotomic out;
    bool first = true;
    while (true) {
        sc.ws();
        if (sc.i >= sc.s.size()) break;
        int sign = 1;
        if (sc.eat('+')) {
        } else if (sc.eat('-')) {
            sign = -1;
        } else if (!first) {
            throw std::invalid_argument("expected '+' or '-' in cyclotomic literal");
        }
        first = false;
        sc.ws();
        Rat coeff(sign);
        bool have_coeff = false;
        if (sc.i < sc.s.size() && (std::isdigit((unsigned char)sc.s[sc.i]))) {
            coeff = sign * sc.rational();
            have_coeff = true;
        }
        sc.ws();
        if (have_coeff && !sc.eat('*')) {
            out += from_rational(coeff);
            continue;
        }
        sc.ws();
        if (sc.i < sc.s.size() && sc.s[sc.i] == 'e') {
            ++sc.i;
            if (!sc.eat('(')) throw std::invalid_argument("expected '(' after e");
            Rat r = sc.rational();
            if (!sc.eat(')')) throw std::invalid_argument("expected ')' in e(...)");
            out += root_of_unity(r).scaled(coeff);
        } else if (have_coeff) {
            throw std::invalid_argument("dangling '*' in cyclotomic literal");
        } else {
            throw std::invalid_argument("expected term in cyclotomic literal");
        }
    }
    return out;
}

}  // namespace mnk::exact
