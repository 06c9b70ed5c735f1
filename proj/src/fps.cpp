#include "mnk/fps.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace mnk::fps {

namespace {
const char* kCoordNames[6] = {"z", "w", "t", "z-w", "z-t", "w-t"};
}

Coord parse_coord(const std::string& text) {
    for (int i = 0; i < 6; ++i)
        if (text == kCoordNames[i]) return (Coord)i;
    throw std::invalid_argument("coordinate not in the convention table: " + text);
}

std::string coord_str(Coord c) { return kCoordNames[(int)c]; }

bool Exp6::operator<(const Exp6& o) const {
    for (int i = 0; i < 6; ++i) {
        const int c = cmp(v[i], o.v[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

std::string Exp6::str() const {
    std::ostringstream os;
    bool any = false;
    for (int i = 0; i < 6; ++i) {
        if (v[i] == 0) continue;
        if (any) os << " ";
        os << kCoordNames[i] << "^" << rat_str(v[i]);
        any = true;
    }
    return any ? os.str() : "1";
}

void MSeries::add(const Exp6& e, const Cyclotomic& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

MSeries MSeries::monomial(const Exp6& e, Cyclotomic c) {
    MSeries s;
    s.add(e, c);
    return s;
}

Rule rule_for(Coord target, Coord big, bool mutate_conv5) {
    using enum Coord;
    static const std::vector<Rule> table = {
        {ZW, Z, W, -1, 0},  {ZW, W, Z, -1, +1},  // conv 1
        {ZT, Z, T, -1, 0},  {ZT, T, Z, -1, +1},
        {WT, W, T, -1, 0},  {WT, T, W, -1, +1},
        {W, Z, ZW, -1, 0},  {Z, W, ZW, +1, 0},   // conv 3
        {T, Z, ZT, -1, 0},  {Z, T, ZT, +1, 0},
        {T, W, WT, -1, 0},  {W, T, WT, +1, 0},
        {ZT, WT, ZW, +1, 0},                      // remark: (z-t) = (w-t) + (z-w)
        {ZW, ZT, WT, -1, 0},                      // conv 4
        {WT, ZW, ZT, -1, -1},                     // conv 5 (the important sign)
        {WT, ZT, ZW, -1, 0},
        {ZT, ZW, WT, +1, 0},
        {ZW, WT, ZT, -1, +1},                     // negation partner of conv 5
    };
    for (const Rule& r : table)
        if (r.target == target && r.big == big) {
            Rule out = r;
            if (mutate_conv5 && out.target == WT && out.big == ZW) out.half = +1;
            return out;
        }
    throw std::invalid_argument("no licensed expansion of " + coord_str(target) + " with big " +
                                coord_str(big));
}

MSeries apply_rule(const MSeries& s, const Rule& r, long cap) {
    MSeries out;
    for (const auto& [e, c] : s.terms()) {
        const Rat sexp = e[r.target];
        if (sexp == 0) {
            out.add(e, c);
            continue;
        }
        Cyclotomic phase = Cyclotomic::one();
        if (r.half != 0)
            phase = Cyclotomic::root_of_unity(rat_mod1(Rat(r.half) * sexp / Rat(2)));
        for (long k = 0; k <= cap; ++k) {
            Rat bc = binom(sexp, k);
            if (bc == 0) break;  // integral exponent exhausted
            if (r.sign < 0 && (k % 2)) bc = -bc;
            Exp6 m = e;
            m[r.target] = Rat(0);
            m[r.big] += sexp - Rat(k);
            m[r.small] += Rat(k);
            out.add(m, (c * phase).scaled(bc));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// two-variable embeddings and taylor shift

PairFrame parse_pair_frame(const std::string& text) {
    if (text == "z-first") return PairFrame::ZFirst;
    if (text == "w-first") return PairFrame::WFirst;
    if (text == "z,z-w") return PairFrame::Z_ZW;
    if (text == "w,z-w") return PairFrame::W_ZW;
    throw std::invalid_argument("unknown pair frame: " + text +
                                " (expected z-first|w-first|z,z-w|w,z-w)");
}

MSeries embed_pair(const Rat& a, const Rat& b, const Rat& c, PairFrame frame, long order) {
    Exp6 e;
    e[Coord::Z] = a;
    e[Coord::W] = b;
    e[Coord::ZW] = c;
    MSeries m = MSeries::monomial(e);
    switch (frame) {
        case PairFrame::ZFirst:
            return apply_rule(m, rule_for(Coord::ZW, Coord::Z), order);
        case PairFrame::WFirst:
            return apply_rule(m, rule_for(Coord::ZW, Coord::W), order);
        case PairFrame::Z_ZW:
            return apply_rule(m, rule_for(Coord::W, Coord::Z), order);
        case PairFrame::W_ZW:
            return apply_rule(m, rule_for(Coord::Z, Coord::W), order);
    }
    throw std::logic_error("unreachable");
}

MSeries taylor_shift(const MSeries& f, bool forward, long order) {
    const Coord from = forward ? Coord::Z : Coord::W;
    const Coord to = forward ? Coord::W : Coord::Z;
    for (const auto& [e, c] : f.terms())
        for (int i = 0; i < 6; ++i)
            if (e.v[i] != 0 && (Coord)i != from && (Coord)i != Coord::ZW)
                throw std::invalid_argument(
                    "taylor_shift input must live in the {" + coord_str(from) + ", z-w} frame");
    return apply_rule(f, rule_for(from, to), order);
}

// ---------------------------------------------------------------------------
// diagrams

namespace {

struct Space {
    std::string label;
    std::vector<Coord> coords;       // allowed coordinates
    std::vector<Coord> frame_order;  // nonempty iff a terminal 3-coordinate frame
};

struct ArrowDef {
    std::string from, to;
    std::vector<std::pair<Coord, Coord>> rewrites;  // (expanded coordinate, big)
};

struct Diagram {
    std::string source = "ijkl";
    std::map<std::string, Space> spaces;
    std::vector<ArrowDef> arrows;
    std::vector<QuadSpec> quads;

    const ArrowDef& arrow(const std::string& from, const std::string& to) const {
        for (const auto& a : arrows)
            if (a.from == from && a.to == to) return a;
        throw std::invalid_argument("no arrow " + from + " -> " + to + " in this diagram");
    }
};

using enum Coord;

Diagram build_star() {
    Diagram d;
    auto sp = [&](const std::string& l, std::vector<Coord> cs, std::vector<Coord> fr = {}) {
        d.spaces[l] = Space{l, std::move(cs), std::move(fr)};
    };
    sp("ijkl", {Z, W, T, ZW, ZT, WT});
    sp("i(jkl)", {Z, W, T, WT});
    sp("ij(kl)", {Z, W, ZW, T});
    sp("i(jk)l", {Z, T, ZT, WT});
    sp("[(ij)k]l", {W, T, WT, ZW});
    sp("(ijk)l", {T, ZW, ZT, WT});
    sp("i(j(kl))", {Z, W, T}, {Z, W, T});
    sp("i((jk)l)", {Z, T, WT}, {Z, T, WT});
    sp("(ij)(kl)", {W, T, ZW}, {W, T, ZW});
    sp("(i(jk))l", {T, ZT, WT}, {T, ZT, WT});
    sp("((ij)k)l", {T, WT, ZW}, {T, WT, ZW});
    auto ar = [&](const std::string& f, const std::string& t,
                  std::vector<std::pair<Coord, Coord>> rw) {
        d.arrows.push_back({f, t, std::move(rw)});
    };
    ar("ijkl", "i(jkl)", {{ZW, Z}, {ZT, Z}});
    ar("ijkl", "ij(kl)", {{ZT, Z}, {WT, W}});
    ar("ijkl", "i(jk)l", {{W, T}, {ZW, ZT}});
    ar("ijkl", "[(ij)k]l", {{Z, W}, {ZT, WT}});
    ar("ijkl", "(ijk)l", {{Z, T}, {W, T}});
    ar("i(jkl)", "i(j(kl))", {{WT, W}});
    ar("ij(kl)", "i(j(kl))", {{ZW, Z}});
    ar("i(jkl)", "i((jk)l)", {{W, T}});
    ar("i(jk)l", "i((jk)l)", {{ZT, Z}});
    ar("ij(kl)", "(ij)(kl)", {{Z, W}});
    ar("[(ij)k]l", "(ij)(kl)", {{WT, W}});
    ar("i(jk)l", "(i(jk))l", {{Z, T}});
    ar("(ijk)l", "(i(jk))l", {{ZW, ZT}});
    ar("[(ij)k]l", "((ij)k)l", {{W, T}});
    ar("(ijk)l", "((ij)k)l", {{ZT, WT}});
    d.quads = {
        {"i(j(kl))", {"i(jkl)", "i(j(kl))"}, {"ij(kl)", "i(j(kl))"}},
        {"i((jk)l)", {"i(jkl)", "i((jk)l)"}, {"i(jk)l", "i((jk)l)"}},
        {"(ij)(kl)", {"ij(kl)", "(ij)(kl)"}, {"[(ij)k]l", "(ij)(kl)"}},
        {"(i(jk))l", {"i(jk)l", "(i(jk))l"}, {"(ijk)l", "(i(jk))l"}},
        {"((ij)k)l", {"[(ij)k]l", "((ij)k)l"}, {"(ijk)l", "((ij)k)l"}},
    };
    return d;
}

Diagram build_octagon1() {
    Diagram d;
    auto sp = [&](const std::string& l, std::vector<Coord> cs, std::vector<Coord> fr = {}) {
        d.spaces[l] = Space{l, std::move(cs), std::move(fr)};
    };
    sp("ijkl", {Z, W, T, ZW, ZT, WT});
    sp("j(ki)l", {Z, W, ZW, ZT});
    sp("j([ik]l)", {Z, T, ZT, W});
    sp("j(ik)l", {W, T, WT, ZT});
    sp("([ij]k)l", {T, ZW, ZT, WT});
    sp("[(jk)i]l", {Z, T, ZT, WT});
    sp("([jk]i)l", {Z, ZW, ZT, WT});
    sp("j((ki)l)", {W, Z, ZT}, {W, Z, ZT});
    sp("j((ik)l)", {W, T, ZT}, {W, T, ZT});
    sp("(j(ki))l", {Z, ZW, ZT}, {Z, ZW, ZT});
    sp("(j(ik))l", {T, WT, ZT}, {T, WT, ZT});
    sp("((jk)i)l", {Z, ZT, WT}, {Z, ZT, WT});
    sp("((ji)k)l", {T, ZT, ZW}, {T, ZT, ZW});
    sp("(i(jk))l", {T, ZT, WT}, {T, ZT, WT});
    sp("((ij)k)l", {T, WT, ZW}, {T, WT, ZW});
    auto ar = [&](const std::string& f, const std::string& t,
                  std::vector<std::pair<Coord, Coord>> rw) {
        d.arrows.push_back({f, t, std::move(rw)});
    };
    ar("ijkl", "j(ki)l", {{T, Z}, {WT, ZW}});
    ar("ijkl", "j([ik]l)", {{ZW, W}, {WT, W}});
    ar("ijkl", "j(ik)l", {{Z, T}, {ZW, WT}});
    ar("ijkl", "([ij]k)l", {{Z, T}, {W, T}});
    ar("ijkl", "[(jk)i]l", {{W, T}, {ZW, ZT}});
    ar("ijkl", "([jk]i)l", {{W, Z}, {T, Z}});
    ar("j(ki)l", "j((ki)l)", {{ZW, W}});
    ar("j([ik]l)", "j((ki)l)", {{T, Z}});
    ar("j([ik]l)", "j((ik)l)", {{Z, T}});
    ar("j(ik)l", "j((ik)l)", {{WT, W}});
    ar("j(ki)l", "(j(ki))l", {{W, Z}});
    ar("([jk]i)l", "(j(ki))l", {{WT, ZW}});
    ar("([jk]i)l", "((jk)i)l", {{ZW, ZT}});
    ar("[(jk)i]l", "((jk)i)l", {{T, Z}});
    ar("[(jk)i]l", "(i(jk))l", {{Z, T}});
    ar("([ij]k)l", "(i(jk))l", {{ZW, ZT}});
    ar("([ij]k)l", "((ij)k)l", {{ZT, WT}});
    ar("([ij]k)l", "((ji)k)l", {{WT, ZT}});
    ar("j(ik)l", "(j(ik))l", {{W, T}});
    ar("([ij]k)l", "(j(ik))l", {{ZW, WT}});
    d.quads = {
        {"j((ki)l)", {"j(ki)l", "j((ki)l)"}, {"j([ik]l)", "j((ki)l)"}},
        {"j((ik)l)", {"j([ik]l)", "j((ik)l)"}, {"j(ik)l", "j((ik)l)"}},
        {"(j(ik))l", {"j(ik)l", "(j(ik))l"}, {"([ij]k)l", "(j(ik))l"}},
        {"(j(ki))l", {"j(ki)l", "(j(ki))l"}, {"([jk]i)l", "(j(ki))l"}},
        {"((jk)i)l", {"([jk]i)l", "((jk)i)l"}, {"[(jk)i]l", "((jk)i)l"}},
        {"(i(jk))l", {"[(jk)i]l", "(i(jk))l"}, {"([ij]k)l", "(i(jk))l"}},
    };
    return d;
}

Diagram build_octagon2() {
    Diagram d;
    auto sp = [&](const std::string& l, std::vector<Coord> cs, std::vector<Coord> fr = {}) {
        d.spaces[l] = Space{l, std::move(cs), std::move(fr)};
    };
    sp("ijkl", {Z, W, T, ZW, ZT, WT});
    sp("([ik]j)l", {W, ZW, ZT, WT});
    sp("i(kj)l", {Z, W, ZW, WT});
    sp("i([jk]l)", {Z, W, T, WT});
    sp("i(jk)l", {Z, T, ZT, WT});
    sp("([ij]k)l", {T, ZW, ZT, WT});
    sp("[(ij)k]l", {W, T, WT, ZW});
    sp("((ki)j)l", {W, ZW, ZT}, {W, ZW, ZT});
    sp("((ik)j)l", {W, WT, ZT}, {W, WT, ZT});
    sp("(k(ij))l", {W, WT, ZW}, {W, WT, ZW});
    sp("(i(kj))l", {W, ZW, WT}, {W, ZW, WT});
    sp("i((kj)l)", {Z, W, WT}, {Z, W, WT});
    sp("i((jk)l)", {Z, T, WT}, {Z, T, WT});
    sp("(i(jk))l", {T, ZT, WT}, {T, ZT, WT});
    sp("((ij)k)l", {T, WT, ZW}, {T, WT, ZW});
    auto ar = [&](const std::string& f, const std::string& t,
                  std::vector<std::pair<Coord, Coord>> rw) {
        d.arrows.push_back({f, t, std::move(rw)});
    };
    ar("ijkl", "([ik]j)l", {{Z, W}, {T, W}});
    ar("ijkl", "i(kj)l", {{T, W}, {ZT, ZW}});
    ar("ijkl", "i([jk]l)", {{ZW, Z}, {ZT, Z}});
    ar("ijkl", "i(jk)l", {{W, T}, {ZW, ZT}});
    ar("ijkl", "([ij]k)l", {{Z, T}, {W, T}});
    ar("ijkl", "[(ij)k]l", {{Z, W}, {ZT, WT}});
    ar("([ik]j)l", "((ki)j)l", {{WT, ZW}});
    ar("([ik]j)l", "((ik)j)l", {{ZW, WT}});
    ar("([ik]j)l", "(k(ij))l", {{ZT, WT}});
    ar("([ik]j)l", "(i(kj))l", {{ZT, ZW}});
    ar("[(ij)k]l", "(k(ij))l", {{T, W}});
    ar("[(ij)k]l", "((ij)k)l", {{W, T}});
    ar("([ij]k)l", "((ij)k)l", {{ZT, WT}});
    ar("([ij]k)l", "(i(jk))l", {{ZW, ZT}});
    ar("i(jk)l", "(i(jk))l", {{Z, T}});
    ar("i(jk)l", "i((jk)l)", {{ZT, Z}});
    ar("i([jk]l)", "i((jk)l)", {{W, T}});
    ar("i([jk]l)", "i((kj)l)", {{T, W}});
    ar("i(kj)l", "i((kj)l)", {{ZW, Z}});
    ar("i(kj)l", "(i(kj))l", {{Z, W}});
    d.quads = {
        {"(k(ij))l", {"([ik]j)l", "(k(ij))l"}, {"[(ij)k]l", "(k(ij))l"}},
        {"(i(kj))l", {"([ik]j)l", "(i(kj))l"}, {"i(kj)l", "(i(kj))l"}},
        {"((ij)k)l", {"[(ij)k]l", "((ij)k)l"}, {"([ij]k)l", "((ij)k)l"}},
        {"(i(jk))l", {"([ij]k)l", "(i(jk))l"}, {"i(jk)l", "(i(jk))l"}},
        {"i((jk)l)", {"i(jk)l", "i((jk)l)"}, {"i([jk]l)", "i((jk)l)"}},
        {"i((kj)l)", {"i([jk]l)", "i((kj)l)"}, {"i(kj)l", "i((kj)l)"}},
    };
    return d;
}

const Diagram& diagram(DiagramId id) {
    static const Diagram star = build_star();
    static const Diagram o1 = build_octagon1();
    static const Diagram o2 = build_octagon2();
    switch (id) {
        case DiagramId::Star: return star;
        case DiagramId::Octagon1: return o1;
        case DiagramId::Octagon2: return o2;
    }
    throw std::logic_error("unreachable");
}

struct PathExpansion {
    MSeries series;
    Exp6 leading;                 // image of the master monomial, k = 0 throughout
    std::array<int, 6> depth_u;   // positional weights in the terminal frame
};

/// Expands the master monomial along the path and derives the depth window
/// data. Also verifies that every rewrite moves strictly down the terminal
/// filtration (otherwise coefficients would be infinite sums).
PathExpansion expand_path(const Diagram& dg, const ExpParams& p,
                          const std::vector<std::string>& path, long order, bool mutate) {
    // resolve arrows
    std::vector<const ArrowDef*> arrows;
    std::string cur = dg.source;
    for (const auto& label : path) {
        if (label == dg.source && arrows.empty()) continue;
        arrows.push_back(&dg.arrow(cur, label));
        cur = label;
    }
    if (arrows.empty()) throw std::invalid_argument("empty path");
    const Space& terminal = dg.spaces.at(cur);
    if (terminal.frame_order.empty())
        throw std::invalid_argument("path must end in a three-coordinate frame: " + cur);

    // suffix leading-image maps: coordinate -> terminal coordinate
    std::vector<std::array<Coord, 6>> suffix(arrows.size() + 1);
    for (int i = 0; i < 6; ++i) suffix[arrows.size()][i] = (Coord)i;
    for (size_t k = arrows.size(); k-- > 0;) {
        suffix[k] = suffix[k + 1];
        for (const auto& [x, b] : arrows[k]->rewrites) suffix[k][(int)x] = suffix[k + 1][(int)b];
    }

    std::array<int, 6> u{};
    u.fill(-1);
    for (size_t i = 0; i < terminal.frame_order.size(); ++i) u[(int)terminal.frame_order[i]] = (int)i;

    // strict descent of each rewrite in the terminal filtration
    for (size_t k = 0; k < arrows.size(); ++k)
        for (const auto& [x, b] : arrows[k]->rewrites) {
            const Rule r = rule_for(x, b, mutate);
            const int ub = u[(int)suffix[k + 1][(int)r.big]];
            const int us = u[(int)suffix[k + 1][(int)r.small]];
            if (ub < 0 || us < 0 || us <= ub)
                throw std::logic_error("expansion does not descend the filtration at arrow " +
                                       arrows[k]->from + " -> " + arrows[k]->to);
        }

    Exp6 master;
    master[Z] = p.a;
    master[W] = p.b;
    master[T] = p.c;
    master[ZW] = p.d;
    master[ZT] = p.f;
    master[WT] = p.g;

    MSeries s = MSeries::monomial(master);
    for (const auto* a : arrows)
        for (const auto& [x, b] : a->rewrites) s = apply_rule(s, rule_for(x, b, mutate), order + 1);

    Exp6 lead;
    for (int i = 0; i < 6; ++i) lead[suffix[0][i]] += master.v[i];
    return {std::move(s), lead, u};
}

Rat depth(const Exp6& m, const Exp6& lead, const std::array<int, 6>& u) {
    Rat d(0);
    for (int i = 0; i < 6; ++i)
        if (u[i] >= 0) d += Rat(u[i]) * (m.v[i] - lead.v[i]);
    return d;
}

}  // namespace

DiagramId parse_diagram(const std::string& text) {
    if (text == "star") return DiagramId::Star;
    if (text == "oct1") return DiagramId::Octagon1;
    if (text == "oct2") return DiagramId::Octagon2;
    throw std::invalid_argument("unknown diagram: " + text + " (expected star|oct1|oct2)");
}

const std::vector<QuadSpec>& quadrilaterals(DiagramId d) { return diagram(d).quads; }

std::vector<std::string> space_labels(DiagramId d) {
    std::vector<std::string> out;
    for (const auto& [l, s] : diagram(d).spaces) out.push_back(l);
    return out;
}

PathCheck check_paths(const ExpParams& p, DiagramId id, std::vector<std::string> path1,
                      std::vector<std::string> path2, long order, bool mutate_conv5) {
    const Diagram& dg = diagram(id);
    if (path1.empty() || path2.empty()) throw std::invalid_argument("empty path");
    if (path1.back() != path2.back())
        throw std::invalid_argument("paths end in different frames: " + path1.back() + " vs " +
                                    path2.back());
    const PathExpansion e1 = expand_path(dg, p, path1, order, mutate_conv5);
    const PathExpansion e2 = expand_path(dg, p, path2, order, mutate_conv5);
    if (!(e1.leading == e2.leading)) {
        PathCheck r;
        r.ok = false;
        r.detail = "leading monomials differ: " + e1.leading.str() + " vs " + e2.leading.str();
        return r;
    }
    // union of supports within the depth window
    std::vector<const Exp6*> keys;
    for (const auto& [m, c] : e1.series.terms())
        if (depth(m, e1.leading, e1.depth_u) <= order) keys.push_back(&m);
    for (const auto& [m, c] : e2.series.terms())
        if (depth(m, e1.leading, e1.depth_u) <= order && !e1.series.terms().count(m))
            keys.push_back(&m);
    for (const Exp6* m : keys) {
        const auto i1 = e1.series.terms().find(*m);
        const auto i2 = e2.series.terms().find(*m);
        const Cyclotomic c1 = i1 == e1.series.terms().end() ? Cyclotomic::zero() : i1->second;
        const Cyclotomic c2 = i2 == e2.series.terms().end() ? Cyclotomic::zero() : i2->second;
        if (!(c1 == c2)) {
            PathCheck r;
            r.ok = false;
            r.detail = "coefficient of " + m->str() + ": " + c1.str() + " vs " + c2.str();
            return r;
        }
    }
    return {};
}

PathCheck check_diagram(const ExpParams& p, DiagramId d, long order, bool mutate_conv5) {
    for (const auto& q : quadrilaterals(d)) {
        PathCheck r = check_paths(p, d, q.path1, q.path2, order, mutate_conv5);
        if (!r.ok) {
            r.detail = "quadrilateral at " + q.name + ": " + r.detail;
            return r;
        }
    }
    return {};
}

}  // namespace mnk::fps
