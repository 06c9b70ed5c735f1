#include "mnk/emcoh.hpp"

#include <stdexcept>

#include "mnk/linsolve.hpp"

namespace mnk::emcoh {

bool Cochain2::normalized() const {
    const Elem z = group_.zero();
    for (long i = 0; i < group_.order(); ++i) {
        const Elem e = group_.unrank(i);
        if (at(z, e) != Cyclotomic::one() || at(e, z) != Cyclotomic::one()) return false;
    }
    return true;
}

Cochain2 d1(const Cochain1& phi) {
    const auto& g = phi.group();
    Cochain2 out(g);
    for (long i = 0; i < g.order(); ++i)
        for (long j = 0; j < g.order(); ++j) {
            const Elem ei = g.unrank(i), ej = g.unrank(j);
            out.set(ei, ej, phi.at(ej) * phi.at(g.add(ei, ej)).inverse() * phi.at(ei));
        }
    return out;
}

AbelianCocycle3 d2(const Cochain2& f) {
    const auto& g = f.group();
    AbelianCocycle3 out(g);
    for (long i = 0; i < g.order(); ++i)
        for (long j = 0; j < g.order(); ++j) {
            const Elem ei = g.unrank(i), ej = g.unrank(j);
            out.setOm(ei, ej, f.at(ei, ej) * f.at(ej, ei).inverse());
            for (long k = 0; k < g.order(); ++k) {
                const Elem ek = g.unrank(k);
                out.setF(ei, ej, ek,
                         f.at(ej, ek) * f.at(g.add(ei, ej), ek).inverse() *
                             f.at(ei, g.add(ej, ek)) * f.at(ei, ej).inverse());
            }
        }
    return out;
}

std::optional<CocycleViolation> find_cocycle_violation(const AbelianCocycle3& c) {
    const auto& g = c.group();
    const long n = g.order();
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j)
            for (long k = 0; k < n; ++k) {
                const Elem ei = g.unrank(i), ej = g.unrank(j), ek = g.unrank(k);
                for (long l = 0; l < n; ++l) {
                    const Elem el = g.unrank(l);
                    const Cyclotomic lhs =
                        c.F(ei, ej, ek) * c.F(ei, g.add(ej, ek), el) * c.F(ej, ek, el);
                    const Cyclotomic rhs = c.F(g.add(ei, ej), ek, el) * c.F(ei, ej, g.add(ek, el));
                    if (lhs != rhs) return CocycleViolation{"pentagon", {ei, ej, ek, el}};
                }
                // hexagon 1: F(i,j,k)^{-1} Om(i,j+k) F(j,k,i)^{-1} = Om(i,j) F(j,i,k)^{-1} Om(i,k)
                {
                    const Cyclotomic lhs = c.F(ei, ej, ek).inverse() * c.Om(ei, g.add(ej, ek)) *
                                           c.F(ej, ek, ei).inverse();
                    const Cyclotomic rhs =
                        c.Om(ei, ej) * c.F(ej, ei, ek).inverse() * c.Om(ei, ek);
                    if (lhs != rhs) return CocycleViolation{"hexagon1", {ei, ej, ek}};
                }
                // hexagon 2: F(i,j,k) Om(i+j,k) F(k,i,j) = Om(j,k) F(i,k,j) Om(i,k)
                {
                    const Cyclotomic lhs = c.F(ei, ej, ek) * c.Om(g.add(ei, ej), ek) * c.F(ek, ei, ej);
                    const Cyclotomic rhs = c.Om(ej, ek) * c.F(ei, ek, ej) * c.Om(ei, ek);
                    if (lhs != rhs) return CocycleViolation{"hexagon2", {ei, ej, ek}};
                }
            }
    return std::nullopt;
}

bool is_abelian_cocycle(const AbelianCocycle3& c) { return !find_cocycle_violation(c); }

GroupFun trace(const AbelianCocycle3& c) {
    if (!is_abelian_cocycle(c)) throw std::invalid_argument("trace of a non-cocycle");
    const auto& g = c.group();
    GroupFun q(g);
    for (long i = 0; i < g.order(); ++i) {
        const Elem e = g.unrank(i);
        q.set(e, c.Om(e, e));
    }
    return q;
}

AbelianCocycle3 act_cochain(const Cochain2& eta, const AbelianCocycle3& c) {
    if (!eta.normalized()) throw std::invalid_argument("act_cochain requires a normalized cochain");
    const auto& g = c.group();
    AbelianCocycle3 d = d2(eta);
    AbelianCocycle3 out(g);
    for (long i = 0; i < g.order(); ++i)
        for (long j = 0; j < g.order(); ++j) {
            const Elem ei = g.unrank(i), ej = g.unrank(j);
            out.setOm(ei, ej, d.Om(ei, ej) * c.Om(ei, ej));
            for (long k = 0; k < g.order(); ++k) {
                const Elem ek = g.unrank(k);
                out.setF(ei, ej, ek, d.F(ei, ej, ek) * c.F(ei, ej, ek));
            }
        }
    return out;
}

namespace {

// additive log of a root of unity; throws on non-torsion values
Rat root_log(const Cyclotomic& v, const char* what) {
    const auto r = v.as_root_of_unity();
    if (!r) throw std::invalid_argument(std::string("non-root-of-unity value in ") + what);
    return *r;
}

}  // namespace

std::optional<Cochain2> trivialize(const AbelianCocycle3& c) {
    if (!is_abelian_cocycle(c)) throw std::invalid_argument("trivialize of a non-cocycle");
    const auto& g = c.group();
    const long n = g.order();
    const long nvars = n * n;

    // unknowns x_{ij} in Q/Z, lambda(i,j) = e(x_{ij}), mixed-radix order of (i,j)
    std::vector<std::vector<Int>> rows;
    std::vector<Rat> rhs;
    Int base_mod = 1;

    auto var = [n](long i, long j) { return i * n + j; };
    auto push_row = [&](std::vector<Int> r, const Rat& b) {
        rows.push_back(std::move(r));
        rhs.push_back(b);
        base_mod = int_lcm(base_mod, Int(b.get_den()));
    };

    // F-coboundary equations: x_{jk} - x_{i+j,k} + x_{i,j+k} - x_{ij} = -log F(i,j,k)
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j)
            for (long k = 0; k < n; ++k) {
                const Elem ei = g.unrank(i), ej = g.unrank(j), ek = g.unrank(k);
                std::vector<Int> r(nvars, 0);
                r[var(j, k)] += 1;
                r[var(g.rank(g.add(ei, ej)), k)] -= 1;
                r[var(i, g.rank(g.add(ej, ek)))] += 1;
                r[var(i, j)] -= 1;
                push_row(std::move(r), -root_log(c.F(ei, ej, ek), "trivialize (F)"));
            }
    // antisymmetrizer equations: x_{ij} - x_{ji} = -log Omega(i,j)
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            const Elem ei = g.unrank(i), ej = g.unrank(j);
            std::vector<Int> r(nvars, 0);
            r[var(i, j)] += 1;
            r[var(j, i)] -= 1;
            push_row(std::move(r), -root_log(c.Om(ei, ej), "trivialize (Omega)"));
        }
    // normalization: x_{0,i} = x_{i,0} = 0
    const long z = g.rank(g.zero());
    for (long i = 0; i < n; ++i) {
        std::vector<Int> r(nvars, 0);
        r[var(z, i)] = 1;
        push_row(std::move(r), Rat(0));
        std::vector<Int> r2(nvars, 0);
        r2[var(i, z)] = 1;
        push_row(std::move(r2), Rat(0));
    }

    auto sol = linsolve::solve_mod1_lexmin(std::move(rows), std::move(rhs), nvars, base_mod);
    if (!sol) return std::nullopt;

    Cochain2 lambda(g);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j)
            lambda.set(g.unrank(i), g.unrank(j), Cyclotomic::root_of_unity((*sol)[var(i, j)]));
    return lambda;
}

bool evenness_check(const GroupFun& q, const std::vector<Rat>& weights) {
    const auto& g = q.group();
    if ((long)weights.size() != g.order())
        throw std::invalid_argument("evenness_check: weight table size mismatch");
    for (long i = 0; i < g.order(); ++i)
        if (q.values()[i] != Cyclotomic::root_of_unity(weights[i])) return false;
    return true;
}

}  // namespace mnk::emcoh
