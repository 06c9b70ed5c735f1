#include "mnk/chars.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace mnk::chars {

long EtaTerm::weight2() const {
    long w = 0;
    for (const auto& [d, r] : eta) w += r;
    for (const auto& [d, s] : e4) w += 8 * s;
    return w;
}

bool EtaCombination::weight_zero() const {
    for (const auto& t : terms)
        if (t.weight2() != 0) return false;
    return true;
}

PuiseuxSeries euler_product(const Rat& hi) {
    PuiseuxSeries p = PuiseuxSeries::constant(Cyclotomic::one(), hi);
    for (long n = 1; Rat(n) < hi; ++n) {
        PuiseuxSeries f(hi);
        f.set(Rat(0), Cyclotomic::one());
        f.set(Rat(n), Cyclotomic::from_rational(-1));
        p = p * f;
    }
    return p.truncated(hi);
}

PuiseuxSeries eta_series(long order) {
    if (order < 1) throw std::invalid_argument("eta_series order must be >= 1");
    const Rat hi(order + 1);
    PuiseuxSeries p = PuiseuxSeries::constant(Cyclotomic::one(), hi);
    for (long i = 1; i <= order; ++i) {
        PuiseuxSeries f(hi);
        f.set(Rat(0), Cyclotomic::one());
        f.set(Rat(i), Cyclotomic::from_rational(-1));
        p = p * f;
    }
    return p.truncated(hi).shifted(make_rat(1, 24));
}

PuiseuxSeries e4_series(const Rat& hi) {
    PuiseuxSeries e(hi);
    e.set(Rat(0), Cyclotomic::one());
    for (long n = 1; Rat(n) < hi; ++n) {
        Int s3 = 0;
        for (long d = 1; d <= n; ++d)
            if (n % d == 0) s3 += Int(d) * d * d;
        e.set(Rat(n), Cyclotomic::from_rational(Rat(240) * Rat(s3)));
    }
    return e;
}

namespace {

/// eta/E4 factors with rational arguments: eta(a tau)^r resp. E4(a tau)^s.
struct GenTerm {
    std::vector<std::pair<Rat, long>> eta;
    std::vector<std::pair<Rat, long>> e4;
};

/// Expands the factor product as a q-series complete below `hi`.
PuiseuxSeries expand_gen_term(const GenTerm& t, const Rat& hi) {
    Rat shift(0);
    for (const auto& [a, r] : t.eta) shift += a * Rat(r) / Rat(24);
    // the product part must be complete below hi - shift
    Rat target = hi - shift;
    if (target < Rat(1)) target = Rat(1);
    PuiseuxSeries acc = PuiseuxSeries::constant(Cyclotomic::one(), target);
    for (const auto& [a, r] : t.eta) {
        PuiseuxSeries p = euler_product(target / a + Rat(1)).stretch(a);
        acc = (acc * p.pow(r)).truncated(target);
    }
    for (const auto& [a, s] : t.e4) {
        PuiseuxSeries p = e4_series(target / a + Rat(1)).stretch(a);
        acc = (acc * p.pow(s)).truncated(target);
    }
    return acc.shifted(shift).truncated(hi);
}

PuiseuxSeries expand_term(const EtaTerm& t, const Rat& hi) {
    GenTerm g;
    for (const auto& [d, r] : t.eta) g.eta.emplace_back(Rat(Int(d)), r);
    for (const auto& [d, s] : t.e4) g.e4.emplace_back(Rat(Int(d)), s);
    return expand_gen_term(g, hi);
}

PuiseuxSeries expand_term_inverted_args(const EtaTerm& t, const Rat& hi) {
    GenTerm g;
    for (const auto& [d, r] : t.eta) g.eta.emplace_back(Rat(1, d), r);
    for (const auto& [d, s] : t.e4) g.e4.emplace_back(Rat(1, d), s);
    return expand_gen_term(g, hi);
}

}  // namespace

PuiseuxSeries expand_eta_combination(const EtaCombination& e, const Rat& hi) {
    PuiseuxSeries out(hi);
    for (const auto& t : e.terms) {
        if (t.weight2() != 0)
            throw std::invalid_argument("eta combination term has nonzero weight");
        out = out + expand_term(t, hi).scaled(t.coef);
    }
    if (e.add_const != 0)
        out = out + PuiseuxSeries::constant(Cyclotomic::from_rational(e.add_const), hi);
    return out;
}

PuiseuxSeries s_transform(const EtaCombination& e, const Rat& hi) {
    PuiseuxSeries out(hi);
    for (const auto& t : e.terms) {
        if (t.weight2() != 0)
            throw std::invalid_argument("eta combination term has nonzero weight");
        // prefactor prod d^{-r_d/2} prod d^{-4 s_d}; must be rational
        Rat pref2(1);
        for (const auto& [d, r] : t.eta) {
            const Rat p = Rat(Int(d));
            for (long i = 0; i < std::abs(r); ++i) pref2 = r > 0 ? Rat(pref2 / p) : Rat(pref2 * p);
        }
        Rat pref;
        {
            Int num_root, den_root;
            pref2.canonicalize();
            if (!int_sqrt_exact(Int(pref2.get_num()), num_root) ||
                !int_sqrt_exact(Int(pref2.get_den()), den_root))
                throw std::invalid_argument("irrational S-transform prefactor");
            pref = Rat(num_root, den_root);
            pref.canonicalize();
        }
        for (const auto& [d, s] : t.e4) {
            const Rat p = Rat(Int(d));
            for (long i = 0; i < std::abs(4 * s); ++i) pref = s > 0 ? Rat(pref / p) : Rat(pref * p);
        }
        out = out + expand_term_inverted_args(t, hi).scaled(t.coef.scaled(pref));
    }
    if (e.add_const != 0)
        out = out + PuiseuxSeries::constant(Cyclotomic::from_rational(e.add_const), hi);
    return out;
}

PuiseuxSeries tau_shift(const PuiseuxSeries& f, long j) {
    PuiseuxSeries r(f.truncation());
    for (const auto& [e, c] : f.terms())
        r.set(e, c * Cyclotomic::root_of_unity(rat_mod1(Rat(j) * e)));
    return r;
}

namespace {

long mod_inverse(long a, long m) {
    Int inv;
    if (mpz_invert(inv.get_mpz_t(), Int(a).get_mpz_t(), Int(m).get_mpz_t()) == 0)
        throw std::invalid_argument("no modular inverse");
    return to_long(inv);
}

long pos_mod(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace

CharacterSeries fhat(const Dataset& ds, const ClassRecord& rec, long i, long j, const Rat& hi) {
    const long N = rec.level;
    i = pos_mod(i, N);
    j = pos_mod(j, N);

    if (i % rec.n == 0) {
        // V(g^{kn}) = V(1) (x) C_{e(sign k/h)}: untwisted series of g^j, phased
        const long k = (i / rec.n) % rec.h;
        const long d = j == 0 ? rec.n : std::gcd(j, rec.n);
        const ClassRecord& cls = d == 1 ? rec : ds.at(rec.powers.at(d));
        PuiseuxSeries base = expand_eta_combination(cls.series, hi);
        const Cyclotomic phase =
            Cyclotomic::root_of_unity(rat_mod1(Rat(rec.sign * j * k, rec.h)));
        return {base.scaled(phase), SeriesRole::FhatComponent};
    }
    if (std::gcd(i, N) == 1) {
        const long ibar = mod_inverse(i, N);
        return {tau_shift(s_transform(rec.series, hi), pos_mod(j * ibar, N)),
                SeriesRole::FhatComponent};
    }
    // remaining rows exist only for the 4|2 family (level 8): i ≡ 2 mod 4
    if (rec.twist && rec.n % 2 == 0 && pos_mod(i, rec.n) == rec.n / 2) {
        if (i > N / 2) {
            // F-hat is invariant under (i,j) -> (-i,-j)
            CharacterSeries s = fhat(ds, rec, N - i, pos_mod(-j, N), hi);
            return s;
        }
        if (j % 2 == 0) {
            // gcd (i,j) = 2: the g^2-family member at half indices
            const ClassRecord& sq = ds.at(rec.powers.at(2));
            return fhat(ds, sq, 1, (j / 2) % sq.level, hi);
        }
        PuiseuxSeries base = expand_eta_combination(*rec.twist, hi);
        return {tau_shift(base, (j - 1) / 2), SeriesRole::FhatComponent};
    }
    throw std::invalid_argument("unsupported F-hat component for class " + rec.name);
}

PuiseuxSeries heisenberg_char(const Rat& lambda_norm, long dim_v, long order) {
    if (dim_v < 0) throw std::invalid_argument("negative Heisenberg dimension");
    const Rat hi(order + 1);
    PuiseuxSeries s = PuiseuxSeries::constant(Cyclotomic::one(), hi);
    if (dim_v > 0) {
        PuiseuxSeries eta = euler_product(hi + Rat(2)).shifted(make_rat(1, 24));
        s = eta.pow(-dim_v).truncated(hi + Rat(2));
    }
    return s.shifted(lambda_norm / Rat(2)).truncated(hi + lambda_norm / Rat(2));
}

PuiseuxSeries verma_char(const Rat& h, long order) {
    const Rat hi(order + 1);
    return euler_product(hi).inverse().truncated(hi).shifted(h);
}

std::map<Rat, Rat> verma_decompose(const PuiseuxSeries& ch) {
    std::map<Rat, Rat> out;
    if (ch.terms().empty()) return out;
    const Rat lead = ch.terms().begin()->first;
    PuiseuxSeries p = euler_product(ch.truncation() - lead);
    PuiseuxSeries prod = ch * p;
    for (const auto& [e, c] : prod.terms()) {
        const auto r = c.as_rational();
        if (!r) throw std::invalid_argument("verma_decompose: non-rational coefficient");
        if (*r != 0) out[e] = *r;
    }
    return out;
}

namespace {

Int coeff_as_int(const Cyclotomic& c) {
    const auto r = c.as_rational();
    if (!r || !rat_is_integer(*r)) throw std::domain_error("non-integer dimension coefficient");
    return Int(r->get_num());
}

}  // namespace

Int quant_dim(const PuiseuxSeries& char_v, const Rat& p_norm) {
    return coeff_as_int(char_v.coeff(Rat(1) - p_norm));
}

Int quant_dim_zero_vector(const PuiseuxSeries& char_v) {
    return 2 * coeff_as_int(char_v.coeff(Rat(0))) + coeff_as_int(char_v.coeff(Rat(1)));
}

bool brst_euler_check(const PuiseuxSeries& char_v_shifted, const Rat& p_norm) {
    const PuiseuxSeries unshifted = char_v_shifted.shifted(Rat(1));
    const Int covariant = quant_dim(unshifted, p_norm);
    const Int brst = coeff_as_int(char_v_shifted.coeff(-p_norm));
    return covariant == brst;
}

// ---------------------------------------------------------------------------
// data file

namespace {

using nlohmann::json;

EtaCombination parse_comb(const json& jterms, const std::string& add_const) {
    EtaCombination comb;
    comb.add_const = parse_rat(add_const);
    for (const auto& jt : jterms) {
        EtaTerm t;
        t.coef = Cyclotomic::parse(jt.at("coef").get<std::string>());
        for (const auto& [k, v] : jt.at("factors").items())
            t.eta[std::stol(k)] = v.get<long>();
        if (jt.contains("e4"))
            for (const auto& [k, v] : jt.at("e4").items()) t.e4[std::stol(k)] = v.get<long>();
        comb.terms.push_back(std::move(t));
    }
    return comb;
}

}  // namespace

Dataset Dataset::from_json_text(const std::string& text) {
    Dataset ds;
    json root = json::parse(text);
    if (!root.is_array()) throw std::invalid_argument("data file: expected a top-level array");
    for (const auto& jr : root) {
        ClassRecord r;
        r.name = jr.at("class").get<std::string>();
        r.n = jr.at("order").get<long>();
        r.h = jr.at("h").get<long>();
        const std::string sgn = jr.at("sign").get<std::string>();
        if (sgn != "+" && sgn != "-") throw std::invalid_argument("sign must be '+' or '-'");
        r.sign = sgn == "+" ? +1 : -1;
        r.fricke = jr.at("fricke").get<bool>();
        r.level = jr.at("level").get<long>();
        r.series = parse_comb(jr.at("eta_terms"), jr.at("add_const").get<std::string>());
        if (jr.contains("twist_terms")) r.twist = parse_comb(jr.at("twist_terms"), "0");
        if (jr.contains("powers"))
            for (const auto& [k, v] : jr.at("powers").items())
                r.powers[std::stol(k)] = v.get<std::string>();
        for (const auto& c : jr.at("checksum")) r.checksum.push_back(parse_rat(c.get<std::string>()));
        ds.recs_.emplace(r.name, std::move(r));
    }
    return ds;
}

Dataset Dataset::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open data file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return from_json_text(ss.str());
}

const ClassRecord& Dataset::at(const std::string& name) const {
    auto it = recs_.find(name);
    if (it == recs_.end()) throw std::invalid_argument("unknown class record: " + name);
    return it->second;
}

std::vector<ValidationIssue> validate_data(const Dataset& ds) {
    std::vector<ValidationIssue> issues;
    for (const auto& [name, r] : ds.records()) {
        if (r.level != r.n * r.h)
            issues.push_back({name, "level mismatch: level != order*h"});
        if (r.n % r.h != 0) issues.push_back({name, "h does not divide order"});
        if (r.fricke != (r.sign > 0))
            issues.push_back({name, "fricke flag inconsistent with sign"});
        if (!r.series.weight_zero()) issues.push_back({name, "series term of nonzero weight"});
        for (const auto& [d, cls] : r.powers) {
            if (d <= 1 || r.n % d != 0)
                issues.push_back({name, "power-map key " + std::to_string(d) + " invalid"});
            else if (!ds.has(cls))
                issues.push_back({name, "power-map target " + cls + " missing"});
        }
        for (long d = 2; d <= r.n; ++d)
            if (r.n % d == 0 && !r.powers.count(d))
                issues.push_back({name, "power-map entry for divisor " + std::to_string(d) + " missing"});
        // checksum: ten consecutive coefficients from the leading exponent
        if (r.checksum.size() != 10) {
            issues.push_back({name, "checksum must list 10 coefficients"});
            continue;
        }
        PuiseuxSeries t;
        try {
            t = expand_eta_combination(r.series, Rat(10));
        } catch (const std::exception& ex) {
            issues.push_back({name, std::string("expansion failed: ") + ex.what()});
            continue;
        }
        const Rat lead = t.terms().empty() ? Rat(0) : t.terms().begin()->first;
        for (long k = 0; k < 10; ++k) {
            const auto c = t.coeff(lead + Rat(k)).as_rational();
            if (!c || *c != r.checksum[k]) {
                issues.push_back({name, "checksum mismatch at index " + std::to_string(k)});
                break;
            }
        }
    }
    return issues;
}

}  // namespace mnk::chars
