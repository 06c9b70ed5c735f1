#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mnk/chars.hpp"

namespace mnk::bkm {

using chars::ClassRecord;
using chars::Cyclotomic;
using chars::Dataset;
using chars::PuiseuxSeries;

/// Exact finite-character average: (1/N) sum_j e(-jb/N) [q^w] F-hat_{i,j}.
Cyclotomic eigenspace_mult_exact(const Dataset& ds, const ClassRecord& rec, long i, long b,
                                 const Rat& shifted_weight, const Rat& hi);

/// Same, but checked: throws std::domain_error on non-integer or negative
/// values (they falsify the dimension interpretation, never rounded away).
Int eigenspace_mult(const Dataset& ds, const ClassRecord& rec, long i, long b,
                    const Rat& shifted_weight, const Rat& hi);

/// Root multiplicities of m_g on the computed window.
/// entry(a,b) = eigenspace_mult(a mod N, b mod N, ab/N) for 1 <= a <= a_max,
/// |b| <= b_max; the Cartan row (0,0) is stored as 2.
struct RootMultTable {
    std::string class_name;
    long level = 1;
    bool fricke = true;
    long a_max = 0, b_max = 0;
    std::map<std::pair<long, long>, Int> entries;

    const Int& at(long a, long b) const { return entries.at({a, b}); }
    /// -ab/N, the norm of the degree-(a, b/N) root.
    Rat norm(long a, long b) const { return Rat(-a * b, level); }
};

RootMultTable mult_table(const Dataset& ds, const ClassRecord& rec, long a_max, long b_max);

struct TruncationReport {
    bool regular_element_ok = true;   // no nonzero entry annihilated by h = (2,1)
    bool norms_bounded_ok = true;     // norms of roots <= 1/N
    bool real_simple_ok = true;       // positive-norm entries have multiplicity 1
    bool collinearity_ok = true;      // no two collinear real roots
    std::vector<long> root_counts;    // #roots with |alpha(h)| < m, m = 1..5
    std::vector<std::string> violations;
    bool ok() const {
        return regular_element_ok && norms_bounded_ok && real_simple_ok && collinearity_ok;
    }
};

TruncationReport check_bkm_truncation(const RootMultTable& t);

struct DenominatorReport {
    bool ok = false;
    long c0 = 0;  // constant exponent anchored by degree-1 agreement
    // first mismatch (p-degree, q-degree, product coefficient, target)
    std::optional<std::tuple<long, long, Int, Int>> first_mismatch;
};

/// Two-variable check of p^{-1} prod (1 - p^m q^n)^{c(mn)} = J(sigma) - J(tau)
/// through total degree `order` (order <= 8). `perturb_c1` shifts c(1) for the
/// mutation test.
DenominatorReport denominator_check_1A(const Dataset& ds, long order, long perturb_c1 = 0);

struct HypothesisReport {
    std::vector<std::pair<std::string, bool>> checks;
    bool ok() const {
        for (const auto& [n, v] : checks)
            if (!v) return false;
        return true;
    }
};

/// Leading-term checks of Hypotheses A_g / B_g for the shipped classes:
/// polar coefficient 1 for Fricke classes (regularity for non-Fricke), the
/// 4|2 polar-phase table, and the translation equivariance of the family.
HypothesisReport hypothesis_checks(const Dataset& ds, const ClassRecord& rec);

}  // namespace mnk::bkm
