#include "mnk/linsolve.hpp"

#include <algorithm>
#include <cstdlib>

namespace mnk::linsolve {

namespace {

Int mod_pos(const Int& a, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

struct Diag {
    std::vector<std::vector<Int>> d;   // diagonalized matrix
    std::vector<std::vector<Int>> v;   // column transform, ncols x ncols
    std::vector<Rat> b;                // transformed rhs
    long rank = 0;
};

// Diagonalize by unimodular row/column operations; rhs follows row ops,
// v follows column ops (x = v * y).
Diag diagonalize(std::vector<std::vector<Int>> a, std::vector<Rat> b, long ncols) {
    const long nrows = (long)a.size();
    Diag out;
    out.v.assign(ncols, std::vector<Int>(ncols, 0));
    for (long i = 0; i < ncols; ++i) out.v[i][i] = 1;

    long t = 0;
    while (t < nrows && t < ncols) {
        // locate a nonzero pivot of minimal magnitude
        long pi = -1, pj = -1;
        Int best;
        for (long i = t; i < nrows; ++i)
            for (long j = t; j < ncols; ++j)
                if (a[i][j] != 0) {
                    Int m = abs(a[i][j]);
                    if (pi < 0 || m < best) {
                        best = m;
                        pi = i;
                        pj = j;
                    }
                }
        if (pi < 0) break;
        std::swap(a[t], a[pi]);
        std::swap(b[t], b[pi]);
        if (pj != t) {
            for (long i = 0; i < nrows; ++i) std::swap(a[i][t], a[i][pj]);
            for (long i = 0; i < ncols; ++i) std::swap(out.v[i][t], out.v[i][pj]);
        }
        bool clean = true;
        for (long i = t + 1; i < nrows; ++i) {
            if (a[i][t] == 0) continue;
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
            if (q != 0) {
                for (long j = t; j < ncols; ++j) a[i][j] -= q * a[t][j];
                b[i] -= Rat(q) * b[t];
            }
            if (a[i][t] != 0) clean = false;
        }
        for (long j = t + 1; j < ncols; ++j) {
            if (a[t][j] == 0) continue;
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
            if (q != 0) {
                for (long i = 0; i < nrows; ++i) a[i][j] -= q * a[i][t];
                for (long i = 0; i < ncols; ++i) out.v[i][j] -= q * out.v[i][t];
            }
            if (a[t][j] != 0) clean = false;
        }
        if (clean) ++t;
        // otherwise repeat at the same t with a smaller pivot
    }
    out.rank = t;
    out.d = std::move(a);
    out.b = std::move(b);
    return out;
}

}  // namespace

std::optional<std::vector<Rat>> solve_mod1_lexmin(std::vector<std::vector<Int>> rows,
                                                  std::vector<Rat> rhs, long ncols,
                                                  const Int& base_modulus) {
    const long nrows = (long)rows.size();
    Diag dg = diagonalize(std::move(rows), std::move(rhs), ncols);

    // consistency of annihilated rows: rhs must be an integer mod 1
    for (long i = dg.rank; i < nrows; ++i)
        if (!rat_is_integer(dg.b[i])) return std::nullopt;

    // particular solution in y-coordinates, then x = v*y
    std::vector<Rat> y(ncols, Rat(0));
    for (long t = 0; t < dg.rank; ++t) y[t] = dg.b[t] / Rat(dg.d[t][t]);
    std::vector<Rat> x(ncols, Rat(0));
    for (long i = 0; i < ncols; ++i) {
        Rat s(0);
        for (long t = 0; t < ncols; ++t)
            if (y[t] != 0 && dg.v[i][t] != 0) s += Rat(dg.v[i][t]) * y[t];
        x[i] = rat_mod1(s);
    }

    // canonical grid modulus
    Int mod = base_modulus;
    for (long t = 0; t < dg.rank; ++t) mod = int_lcm(mod, abs(dg.d[t][t]));
    for (long i = 0; i < ncols; ++i) mod = int_lcm(mod, Int(x[i].get_den()));
    if (mod < 1) mod = 1;

    // kernel generators of {x in (1/mod)Z/Z : A x ≡ 0 mod 1}, scaled by mod
    std::vector<std::vector<Int>> gens;
    for (long t = 0; t < ncols; ++t) {
        Int scale = t < dg.rank ? mod / abs(dg.d[t][t]) : Int(1);
        std::vector<Int> g(ncols);
        bool nonzero = false;
        for (long i = 0; i < ncols; ++i) {
            g[i] = mod_pos(scale * dg.v[i][t], mod);
            if (g[i] != 0) nonzero = true;
        }
        if (nonzero) gens.push_back(std::move(g));
    }

    // integer representative of x scaled by mod
    std::vector<Int> X(ncols);
    for (long i = 0; i < ncols; ++i) {
        Rat s = x[i] * Rat(mod);
        X[i] = mod_pos(Int(s.get_num()), mod);  // s is integral by choice of mod
    }

    // greedy lexicographic minimization over the coset X + span(gens) mod `mod`
    for (long k = 0; k < ncols; ++k) {
        // gcd of achievable deltas in coordinate k
        Int g = mod;
        for (const auto& c : gens) g = int_gcd(g, c[k]);
        if (g == mod || g == 0) continue;  // no freedom (mod | delta)
        // build combo w in the span with w[k] ≡ g (mod mod)
        std::vector<Int> w(ncols, 0);
        Int cur = 0;
        for (const auto& c : gens) {
            if (c[k] == 0) continue;
            if (cur == 0) {
                w = c;
                cur = c[k];
                continue;
            }
            Int gg, u, v2;
            mpz_gcdext(gg.get_mpz_t(), u.get_mpz_t(), v2.get_mpz_t(), cur.get_mpz_t(),
                       c[k].get_mpz_t());
            if (gg == cur) continue;
            for (long i = 0; i < ncols; ++i) w[i] = mod_pos(u * w[i] + v2 * c[i], mod);
            cur = gg;
        }
        {
            // fold the modulus into the gcd: g = u*cur + v*mod
            Int gg, u, v2;
            mpz_gcdext(gg.get_mpz_t(), u.get_mpz_t(), v2.get_mpz_t(), cur.get_mpz_t(),
                       mod.get_mpz_t());
            for (long i = 0; i < ncols; ++i) w[i] = mod_pos(u * w[i], mod);
            // now w[k] ≡ gg ≡ g (mod mod)
        }
        // reduce X[k] to its minimum X[k] mod g
        Int target = mod_pos(X[k], g);
        Int steps = (X[k] - target) / g;
        if (steps != 0)
            for (long i = 0; i < ncols; ++i) X[i] = mod_pos(X[i] - steps * w[i], mod);
        // stabilize coordinate k in the remaining generators
        for (auto& c : gens) {
            if (c[k] == 0) continue;
            Int q = c[k] / g;
            for (long i = 0; i < ncols; ++i) c[i] = mod_pos(c[i] - q * w[i], mod);
        }
        // multiples of w that fix coordinate k stay available
        Int keep = mod / int_gcd(g, mod);
        std::vector<Int> wk(ncols);
        bool nz = false;
        for (long i = 0; i < ncols; ++i) {
            wk[i] = mod_pos(keep * w[i], mod);
            if (wk[i] != 0) nz = true;
        }
        if (nz) gens.push_back(std::move(wk));
    }

    std::vector<Rat> sol(ncols);
    for (long i = 0; i < ncols; ++i) {
        Rat r(X[i], mod);
        r.canonicalize();
        sol[i] = r;
    }
    return sol;
}

}  // namespace mnk::linsolve
