// Command-line surface for the exact moonshine kernel: cohomology verbs,
// embedding-diagram checks, discriminant forms, q-series characters, and the
// Borcherds-Kac-Moody root tables.
//
// Exit codes: 0 success, 1 a verification verb found a violation,
// 2 usage or data error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "mnk/bkm.hpp"
#include "mnk/emcoh.hpp"
#include "mnk/fps.hpp"
#include "mnk/lattice.hpp"

using namespace mnk;
using exact::Cyclotomic;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// cochain file format: header `group n1,n2,...`, then rows
// `i-coords[|j-coords[|k-coords]]<TAB>value`; omitted rows read as 1.

struct CochainFile {
    abgrp::FiniteAbelianGroup group{std::vector<long>{1}};
    // slot -> (coords tuple -> value); slot = number of coordinate groups
    std::map<int, std::map<std::vector<abgrp::Elem>, Cyclotomic>> rows;
};

CochainFile read_cochain_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open cochain file: " + path);
    CochainFile out;
    std::string line;
    bool have_group = false;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        if (!have_group) {
            if (line.rfind("group ", 0) != 0)
                throw UsageError(path + ": first line must be `group n1,n2,...`");
            out.group = abgrp::FiniteAbelianGroup::parse(line.substr(6));
            have_group = true;
            continue;
        }
        const auto tab = line.find('\t');
        if (tab == std::string::npos)
            throw UsageError(path + ":" + std::to_string(lineno) + ": expected TAB separator");
        const std::string lhs = line.substr(0, tab);
        const Cyclotomic value = Cyclotomic::parse(line.substr(tab + 1));
        std::vector<abgrp::Elem> coords;
        std::istringstream ls(lhs);
        std::string part;
        while (std::getline(ls, part, '|')) coords.push_back(abgrp::parse_elem(part));
        for (auto& c : coords) c = out.group.reduce(c);
        out.rows[(int)coords.size()][coords] = value;
    }
    if (!have_group) throw UsageError(path + ": missing `group` header");
    return out;
}

emcoh::Cochain1 as_cochain1(const CochainFile& f) {
    emcoh::Cochain1 phi(f.group);
    if (auto it = f.rows.find(1); it != f.rows.end())
        for (const auto& [coords, v] : it->second) phi.set(coords[0], v);
    return phi;
}

emcoh::Cochain2 as_cochain2(const CochainFile& f) {
    emcoh::Cochain2 c2(f.group);
    if (auto it = f.rows.find(2); it != f.rows.end())
        for (const auto& [coords, v] : it->second) c2.set(coords[0], coords[1], v);
    return c2;
}

emcoh::AbelianCocycle3 as_cocycle3(const CochainFile& f) {
    emcoh::AbelianCocycle3 c(f.group);
    if (auto it = f.rows.find(3); it != f.rows.end())
        for (const auto& [coords, v] : it->second) c.setF(coords[0], coords[1], coords[2], v);
    if (auto it = f.rows.find(2); it != f.rows.end())
        for (const auto& [coords, v] : it->second) c.setOm(coords[0], coords[1], v);
    return c;
}

void print_cochain2(const emcoh::Cochain2& c) {
    const auto& g = c.group();
    std::cout << "group " << g.str() << "\n";
    for (long i = 0; i < g.order(); ++i)
        for (long j = 0; j < g.order(); ++j) {
            const auto& v = c.at(g.unrank(i), g.unrank(j));
            if (v == Cyclotomic::one()) continue;
            std::cout << abgrp::elem_str(g.unrank(i)) << "|" << abgrp::elem_str(g.unrank(j))
                      << "\t" << v.str() << "\n";
        }
}

void print_cocycle3(const emcoh::AbelianCocycle3& c) {
    const auto& g = c.group();
    std::cout << "group " << g.str() << "\n";
    for (long i = 0; i < g.order(); ++i)
        for (long j = 0; j < g.order(); ++j)
            for (long k = 0; k < g.order(); ++k) {
                const auto& v = c.F(g.unrank(i), g.unrank(j), g.unrank(k));
                if (v == Cyclotomic::one()) continue;
                std::cout << abgrp::elem_str(g.unrank(i)) << "|" << abgrp::elem_str(g.unrank(j))
                          << "|" << abgrp::elem_str(g.unrank(k)) << "\t" << v.str() << "\n";
            }
    for (long i = 0; i < g.order(); ++i)
        for (long j = 0; j < g.order(); ++j) {
            const auto& v = c.Om(g.unrank(i), g.unrank(j));
            if (v == Cyclotomic::one()) continue;
            std::cout << abgrp::elem_str(g.unrank(i)) << "|" << abgrp::elem_str(g.unrank(j))
                      << "\t" << v.str() << "\n";
        }
}

void print_series(const fps::PuiseuxSeries& s) {
    for (const auto& [e, c] : s.terms()) std::cout << rat_str(e) << "\t" << c.str() << "\n";
}

void guard(bool ok, const std::string& msg) {
    if (!ok) throw UsageError(msg);
}

// ---------------------------------------------------------------------------

int run_coh(const std::string& sub, const std::string& in_path, const std::string& cocycle_path,
            const std::string& group_lit) {
    const CochainFile file = read_cochain_file(in_path);
    if (!group_lit.empty()) {
        const auto g = abgrp::FiniteAbelianGroup::parse(group_lit);
        guard(g == file.group, "--group disagrees with the file header");
    }
    guard(file.group.order() <= 64, "group order capped at 64 for cohomology verbs");

    if (sub == "d1") {
        print_cochain2(emcoh::d1(as_cochain1(file)));
        return kExitOk;
    }
    if (sub == "d2") {
        print_cocycle3(emcoh::d2(as_cochain2(file)));
        return kExitOk;
    }
    if (sub == "check") {
        const auto c = as_cocycle3(file);
        const auto bad = emcoh::find_cocycle_violation(c);
        if (!bad) {
            std::cout << "cocycle: ok\n";
            return kExitOk;
        }
        std::cout << "violation: " << bad->identity << " at";
        for (const auto& e : bad->args) std::cout << " (" << abgrp::elem_str(e) << ")";
        std::cout << "\n";
        return kExitCheckFailed;
    }
    if (sub == "trace") {
        const auto q = emcoh::trace(as_cocycle3(file));
        const auto& g = q.group();
        for (long i = 0; i < g.order(); ++i)
            std::cout << abgrp::elem_str(g.unrank(i)) << "\t" << q.values()[i].str() << "\n";
        return kExitOk;
    }
    if (sub == "trivialize") {
        guard(file.group.order() <= 12, "group order capped at 12 for trivialize");
        const auto c = as_cocycle3(file);
        const auto lambda = emcoh::trivialize(c);
        if (!lambda) {
            const auto q = emcoh::trace(c);
            const auto& g = q.group();
            for (long i = 0; i < g.order(); ++i) {
                if (q.values()[i] == Cyclotomic::one()) continue;
                std::cout << "no trivialization: trace Q(" << abgrp::elem_str(g.unrank(i))
                          << ") = " << q.values()[i].str() << "\n";
                return kExitCheckFailed;
            }
            std::cout << "no trivialization: cocycle is not a normalized representative\n";
            return kExitCheckFailed;
        }
        print_cochain2(*lambda);
        return kExitOk;
    }
    if (sub == "act") {
        guard(!cocycle_path.empty(), "act needs --cocycle");
        const CochainFile cfile = read_cochain_file(cocycle_path);
        guard(cfile.group == file.group, "cochain and cocycle live on different groups");
        print_cocycle3(emcoh::act_cochain(as_cochain2(file), as_cocycle3(cfile)));
        return kExitOk;
    }
    throw UsageError("unknown coh subcommand: " + sub +
                     " (expected d1|d2|check|trace|trivialize|act)");
}

int run_embed_check(const std::string& exponents, const std::string& diagram_lit, long order,
                    const std::string& path1, const std::string& path2, bool mutate) {
    guard(order >= 1 && order <= 10, "--order must be in [1, 10]");
    std::vector<Rat> ex;
    std::istringstream is(exponents);
    std::string tok;
    while (std::getline(is, tok, ',')) ex.push_back(parse_rat(tok));
    guard(ex.size() == 6, "--exponents needs six comma-separated rationals a,b,c,d,f,g");
    const fps::ExpParams p{ex[0], ex[1], ex[2], ex[3], ex[4], ex[5]};
    const fps::DiagramId d = fps::parse_diagram(diagram_lit);

    auto split_path = [](const std::string& s) {
        std::vector<std::string> out;
        std::istringstream ps(s);
        std::string part;
        while (std::getline(ps, part, '/')) out.push_back(part);
        return out;
    };

    if (!path1.empty() || !path2.empty()) {
        guard(!path1.empty() && !path2.empty(), "--path1 and --path2 must be given together");
        const auto r = fps::check_paths(p, d, split_path(path1), split_path(path2), order, mutate);
        std::cout << (r.ok ? "commutes" : "mismatch: " + r.detail) << "\n";
        return r.ok ? kExitOk : kExitCheckFailed;
    }
    bool all_ok = true;
    for (const auto& q : fps::quadrilaterals(d)) {
        const auto r = fps::check_paths(p, d, q.path1, q.path2, order, mutate);
        std::cout << q.name << "\t" << (r.ok ? "commutes" : "mismatch: " + r.detail) << "\n";
        all_ok = all_ok && r.ok;
    }
    return all_ok ? kExitOk : kExitCheckFailed;
}

int run_lattice(const std::string& type_lit) {
    const lattice::NHType t = lattice::NHType::parse(type_lit);
    guard(t.n <= 48 && 24 % t.h == 0, "lattice type capped at n <= 48 with h | 24");
    const lattice::DiscriminantForm d = lattice::build_discriminant(t);
    std::cout << "type\t" << t.str() << "\n";
    std::cout << "group\t" << d.group.str() << "\n";
    for (long i = 0; i < d.group.order(); ++i) {
        const auto e = d.group.unrank(i);
        std::cout << abgrp::elem_str(e) << "\t" << d.rho.at(e).str() << "\t"
                  << d.rho_bar.at(e).str() << "\n";
    }
    const bool quad = abgrp::is_quadratic(d.rho);
    bool product_one = true;
    for (long i = 0; i < d.group.order(); ++i) {
        const auto e = d.group.unrank(i);
        if (!(d.rho.at(e) * d.rho_bar.at(e) == Cyclotomic::one())) product_one = false;
    }
    const bool shear = t.h <= 2 ? lattice::shear_check(t) : true;
    std::cout << "check rho-quadratic\t" << (quad ? "pass" : "fail") << "\n";
    std::cout << "check rho*rho_bar=1\t" << (product_one ? "pass" : "fail") << "\n";
    if (t.h <= 2) std::cout << "check shear\t" << (shear ? "pass" : "fail") << "\n";
    return quad && product_one && shear ? kExitOk : kExitCheckFailed;
}

const chars::ClassRecord& find_class(const chars::Dataset& ds, const std::string& name) {
    if (!ds.has(name)) throw UsageError("unknown class: " + name);
    return ds.at(name);
}

int run_multtable(const chars::Dataset& ds, const std::string& cls, long amax, long bmax,
                  const std::string& format) {
    guard(amax >= 1 && amax <= 8, "--amax must be in [1, 8]");
    const auto& rec = find_class(ds, cls);
    if (bmax < 0) bmax = rec.level;  // default: one full period each way
    guard(bmax <= 64, "--bmax capped at 64");
    bkm::RootMultTable t;
    try {
        t = bkm::mult_table(ds, rec, amax, bmax);
    } catch (const std::domain_error& ex) {
        std::cout << "integrality violation: " << ex.what() << "\n";
        return kExitCheckFailed;
    }
    const bkm::TruncationReport rep = bkm::check_bkm_truncation(t);
    json summary = {{"class", cls},
                    {"level", t.level},
                    {"regular_element_ok", rep.regular_element_ok},
                    {"norms_bounded_ok", rep.norms_bounded_ok},
                    {"real_simple_ok", rep.real_simple_ok},
                    {"collinearity_ok", rep.collinearity_ok},
                    {"root_counts", rep.root_counts},
                    {"violations", rep.violations}};
    if (format == "json") {
        json rows = json::array();
        for (const auto& [ab, m] : t.entries)
            rows.push_back({{"a", ab.first}, {"b", ab.second}, {"mult", m.get_str()}});
        std::cout << json{{"rows", rows}, {"checks", summary}}.dump(2) << "\n";
    } else {
        for (const auto& [ab, m] : t.entries)
            std::cout << ab.first << "\t" << ab.second << "\t" << m.get_str() << "\n";
        std::cout << summary.dump() << "\n";
    }
    return rep.ok() ? kExitOk : kExitCheckFailed;
}

int run_denom(const chars::Dataset& ds, long order, const std::string& format) {
    guard(order >= 1 && order <= 8, "--order must be in [1, 8]");
    const bkm::DenominatorReport rep = bkm::denominator_check_1A(ds, order);
    if (format == "json") {
        json j = {{"order", order}, {"c0", rep.c0}, {"ok", rep.ok}};
        if (rep.first_mismatch) {
            const auto& [a, b, lhs, rhs] = *rep.first_mismatch;
            j["first_mismatch"] = {{"p", a}, {"q", b}, {"product", lhs.get_str()},
                                   {"target", rhs.get_str()}};
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "c0\t" << rep.c0 << "\n";
        if (rep.first_mismatch) {
            const auto& [a, b, lhs, rhs] = *rep.first_mismatch;
            std::cout << "mismatch at p^" << a << " q^" << b << ": " << lhs.get_str() << " vs "
                      << rhs.get_str() << "\n";
        }
        std::cout << "denominator identity through total degree " << order << ": "
                  << (rep.ok ? "pass" : "fail") << "\n";
    }
    return rep.ok ? kExitOk : kExitCheckFailed;
}

int run_hyp(const chars::Dataset& ds, const std::string& cls, const std::string& format) {
    const auto& rec = find_class(ds, cls);
    const bkm::HypothesisReport rep = bkm::hypothesis_checks(ds, rec);
    if (format == "json") {
        json checks = json::array();
        for (const auto& [what, ok] : rep.checks) checks.push_back({{"check", what}, {"ok", ok}});
        std::cout << json{{"class", cls}, {"checks", checks}, {"ok", rep.ok()}}.dump(2) << "\n";
    } else {
        for (const auto& [what, ok] : rep.checks)
            std::cout << (ok ? "pass" : "fail") << "\t" << what << "\n";
    }
    return rep.ok() ? kExitOk : kExitCheckFailed;
}

int run_validate(const std::string& file) {
    chars::Dataset ds;
    try {
        ds = chars::Dataset::load(file);
    } catch (const std::exception& ex) {
        std::cout << "data error: " << ex.what() << "\n";
        return kExitUsage;
    }
    const auto issues = chars::validate_data(ds);
    for (const auto& [name, rec] : ds.records()) {
        bool ok = true;
        for (const auto& issue : issues)
            if (issue.record == name) ok = false;
        std::cout << name << "\t" << (ok ? "pass" : "fail") << "\n";
    }
    for (const auto& issue : issues) std::cout << issue.record << "\t" << issue.message << "\n";
    return issues.empty() ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computational kernel for monstrous Lie algebra characters"};
    app.require_subcommand(1);
    std::string data_file = "moonshine.json";
    std::string format = "tsv";
    app.add_option("--data", data_file, "class-record data file")->capture_default_str();
    app.add_option("--format", format, "tsv|json")->check(CLI::IsMember({"tsv", "json"}));

    auto* coh = app.add_subcommand("coh", "Eilenberg-Mac Lane cochain operations");
    std::string coh_sub, coh_in, coh_cocycle, coh_group;
    coh->add_option("verb", coh_sub, "d1|d2|check|trace|trivialize|act")->required();
    coh->add_option("--in", coh_in, "input cochain/cocycle file")->required();
    coh->add_option("--cocycle", coh_cocycle, "cocycle file (for act)");
    coh->add_option("--group", coh_group, "group literal n1,n2,... (cross-checked)");

    auto* emb = app.add_subcommand("embed-check", "expansion-diagram commutativity");
    std::string emb_exps, emb_diagram = "star", emb_p1, emb_p2;
    long emb_order = 6;
    bool emb_mutate = false;
    emb->add_option("--exponents", emb_exps, "a,b,c,d,f,g")->required();
    emb->add_option("--diagram", emb_diagram, "star|oct1|oct2");
    emb->add_option("--order", emb_order, "comparison depth")->capture_default_str();
    emb->add_option("--path1", emb_p1, "slash-separated space labels");
    emb->add_option("--path2", emb_p2, "slash-separated space labels");
    emb->add_flag("--mutate-conv5", emb_mutate, "flip the sign convention (test hook)");

    auto* lat = app.add_subcommand("lattice", "discriminant form of a lattice type");
    std::string lat_type;
    lat->add_option("--type", lat_type, "n|h with sign, e.g. 4|2+")->required();

    auto* chr = app.add_subcommand("char", "McKay-Thompson series of a class");
    std::string chr_cls;
    long chr_order = 10;
    bool chr_twisted = false;
    chr->add_option("--class", chr_cls, "class name, e.g. 1A")->required();
    chr->add_option("--order", chr_order, "expansion order")->capture_default_str();
    chr->add_flag("--twisted", chr_twisted, "emit T_g(-1/tau) instead of T_g");

    auto* fh = app.add_subcommand("fhat", "vector-valued component F-hat_{i,j}");
    std::string fh_cls;
    long fh_i = 0, fh_j = 0, fh_order = 6;
    fh->add_option("--class", fh_cls)->required();
    fh->add_option("--i", fh_i)->required();
    fh->add_option("--j", fh_j)->required();
    fh->add_option("--order", fh_order)->capture_default_str();

    auto* vd = app.add_subcommand("verma-decompose",
                                  "Virasoro decomposition of a twisted character");
    std::string vd_cls;
    long vd_order = 10;
    vd->add_option("--class", vd_cls)->required();
    vd->add_option("--order", vd_order)->capture_default_str();

    auto* qn = app.add_subcommand("quant", "no-ghost dimension accounting");
    std::string qn_cls, qn_norm;
    bool qn_zero = false;
    long qn_order = 8;
    qn->add_option("--class", qn_cls)->required();
    qn->add_option("--p-norm", qn_norm, "norm (p,p) as a rational");
    qn->add_flag("--zero-vector", qn_zero, "p = 0 special case");
    qn->add_option("--order", qn_order)->capture_default_str();

    auto* mt = app.add_subcommand("multtable", "root multiplicity table of m_g");
    std::string mt_cls;
    long mt_amax = 4, mt_bmax = -1;
    mt->add_option("--class", mt_cls)->required();
    mt->add_option("--amax", mt_amax)->capture_default_str();
    mt->add_option("--bmax", mt_bmax, "defaults to the level N");

    auto* dn = app.add_subcommand("denom", "g = 1 denominator identity check");
    long dn_order = 6;
    dn->add_option("--order", dn_order)->capture_default_str();

    auto* hy = app.add_subcommand("hyp", "leading-term hypothesis checks");
    std::string hy_cls;
    hy->add_option("--class", hy_cls)->required();

    auto* vdt = app.add_subcommand("validate-data", "checksum and consistency validation");
    std::string vdt_file;
    vdt->add_option("--file", vdt_file, "data file (defaults to --data)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (coh->parsed()) return run_coh(coh_sub, coh_in, coh_cocycle, coh_group);
        if (emb->parsed())
            return run_embed_check(emb_exps, emb_diagram, emb_order, emb_p1, emb_p2, emb_mutate);
        if (lat->parsed()) return run_lattice(lat_type);
        if (vdt->parsed()) return run_validate(vdt_file.empty() ? data_file : vdt_file);

        const chars::Dataset ds = chars::Dataset::load(data_file);
        if (chr->parsed()) {
            guard(chr_order >= 1 && chr_order <= 64, "--order must be in [1, 64]");
            const auto& rec = find_class(ds, chr_cls);
            const fps::PuiseuxSeries s =
                chr_twisted ? chars::s_transform(rec.series, Rat(chr_order))
                            : chars::expand_eta_combination(rec.series, Rat(chr_order));
            print_series(s);
            return kExitOk;
        }
        if (fh->parsed()) {
            guard(fh_order >= 1 && fh_order <= 64, "--order must be in [1, 64]");
            const auto& rec = find_class(ds, fh_cls);
            print_series(chars::fhat(ds, rec, fh_i, fh_j, Rat(fh_order)).series);
            return kExitOk;
        }
        if (vd->parsed()) {
            guard(vd_order >= 1 && vd_order <= 64, "--order must be in [1, 64]");
            const auto& rec = find_class(ds, vd_cls);
            const fps::PuiseuxSeries ch =
                chars::s_transform(rec.series, Rat(vd_order)).shifted(Rat(1));
            bool all_ok = true;
            for (const auto& [h, m] : chars::verma_decompose(ch)) {
                std::cout << rat_str(h) << "\t" << rat_str(m) << "\n";
                if (m < 0 || !rat_is_integer(m) || h <= 0) all_ok = false;
            }
            return all_ok ? kExitOk : kExitCheckFailed;
        }
        if (qn->parsed()) {
            guard(qn_order >= 1 && qn_order <= 64, "--order must be in [1, 64]");
            guard(qn_zero != !qn_norm.empty(), "give exactly one of --p-norm or --zero-vector");
            const auto& rec = find_class(ds, qn_cls);
            const fps::PuiseuxSeries ch =
                chars::s_transform(rec.series, Rat(qn_order)).shifted(Rat(1));
            if (qn_zero) {
                std::cout << chars::quant_dim_zero_vector(ch).get_str() << "\n";
            } else {
                const Rat p = parse_rat(qn_norm);
                guard(Rat(1) - p < ch.truncation(), "--order too small for this norm");
                std::cout << chars::quant_dim(ch, p).get_str() << "\n";
            }
            return kExitOk;
        }
        if (mt->parsed()) return run_multtable(ds, mt_cls, mt_amax, mt_bmax, format);
        if (dn->parsed()) return run_denom(ds, dn_order, format);
        if (hy->parsed()) return run_hyp(ds, hy_cls, format);
    } catch (const UsageError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& ex) {
        std::cout << "check failed: " << ex.what() << "\n";
        return kExitCheckFailed;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
