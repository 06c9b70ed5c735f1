#pragma once

#include <optional>
#include <string>

#include "mnk/abgrp.hpp"

namespace mnk::emcoh {

using abgrp::Cyclotomic;
using abgrp::Elem;
using abgrp::FiniteAbelianGroup;
using abgrp::GroupFun;

/// phi: A -> C^x, root-of-unity valued.
class Cochain1 {
  public:
    explicit Cochain1(FiniteAbelianGroup g) : fun_(std::move(g)) {}
    const FiniteAbelianGroup& group() const { return fun_.group(); }
    const Cyclotomic& at(const Elem& i) const { return fun_.at(i); }
    void set(const Elem& i, Cyclotomic v) { fun_.set(i, std::move(v)); }
    GroupFun& fun() { return fun_; }
    const GroupFun& fun() const { return fun_; }

  private:
    GroupFun fun_;
};

/// f: A x A -> C^x, root-of-unity valued; dense over rank pairs.
class Cochain2 {
  public:
    explicit Cochain2(FiniteAbelianGroup g)
        : group_(std::move(g)), vals_(group_.order() * group_.order(), Cyclotomic::one()) {}
    const FiniteAbelianGroup& group() const { return group_; }
    const Cyclotomic& at(const Elem& i, const Elem& j) const {
        return vals_[group_.rank(i) * group_.order() + group_.rank(j)];
    }
    void set(const Elem& i, const Elem& j, Cyclotomic v) {
        vals_[group_.rank(i) * group_.order() + group_.rank(j)] = std::move(v);
    }
    bool normalized() const;
    bool operator==(const Cochain2& o) const { return group_ == o.group_ && vals_ == o.vals_; }

  private:
    FiniteAbelianGroup group_;
    std::vector<Cyclotomic> vals_;
};

/// Abelian 3-cochain (F, Omega): F on A^3, Omega on A^2.
class AbelianCocycle3 {
  public:
    explicit AbelianCocycle3(FiniteAbelianGroup g)
        : group_(std::move(g)),
          f_(group_.order() * group_.order() * group_.order(), Cyclotomic::one()),
          om_(group_.order() * group_.order(), Cyclotomic::one()) {}
    const FiniteAbelianGroup& group() const { return group_; }
    const Cyclotomic& F(const Elem& i, const Elem& j, const Elem& k) const {
        const long n = group_.order();
        return f_[(group_.rank(i) * n + group_.rank(j)) * n + group_.rank(k)];
    }
    const Cyclotomic& Om(const Elem& i, const Elem& j) const {
        return om_[group_.rank(i) * group_.order() + group_.rank(j)];
    }
    void setF(const Elem& i, const Elem& j, const Elem& k, Cyclotomic v) {
        const long n = group_.order();
        f_[(group_.rank(i) * n + group_.rank(j)) * n + group_.rank(k)] = std::move(v);
    }
    void setOm(const Elem& i, const Elem& j, Cyclotomic v) {
        om_[group_.rank(i) * group_.order() + group_.rank(j)] = std::move(v);
    }
    bool operator==(const AbelianCocycle3& o) const {
        return group_ == o.group_ && f_ == o.f_ && om_ == o.om_;
    }

  private:
    FiniteAbelianGroup group_;
    std::vector<Cyclotomic> f_;
    std::vector<Cyclotomic> om_;
};

/// (d1 phi)(i,j) = phi(j) phi(i+j)^{-1} phi(i).
Cochain2 d1(const Cochain1& phi);

/// F(i,j,k) = f(j,k) f(i+j,k)^{-1} f(i,j+k) f(i,j)^{-1}; Omega(i,j) = f(i,j)/f(j,i).
AbelianCocycle3 d2(const Cochain2& f);

struct CocycleViolation {
    std::string identity;  // "pentagon", "hexagon1", "hexagon2"
    std::vector<Elem> args;
};

/// Exhaustive pentagon + both hexagons. Returns first violation if any.
std::optional<CocycleViolation> find_cocycle_violation(const AbelianCocycle3& c);
bool is_abelian_cocycle(const AbelianCocycle3& c);

/// Q(i) = Omega(i,i). Rejects non-cocycles.
GroupFun trace(const AbelianCocycle3& c);

/// d2(eta) * c pointwise. Requires eta normalized.
AbelianCocycle3 act_cochain(const Cochain2& eta, const AbelianCocycle3& c);

/// Constructive trivialization: a normalized lambda with
/// act_cochain(lambda, c) = (1, 1), when one exists. On normalized cocycles
/// (the setting of the transitive normalized-coboundary action) existence is
/// equivalent to triviality of the trace; non-normalized inputs with
/// F(0,j,k) != 1 are honestly unreachable and answer absent. Solves the
/// coboundary equations over Q/Z by integer diagonalization and returns the
/// lexicographically smallest solution on the canonical grid.
std::optional<Cochain2> trivialize(const AbelianCocycle3& c);

/// Q(i) == e(weights(i)) for all i; the evenness criterion for a
/// commutativity datum whose modules have conformal weights `weights`.
bool evenness_check(const GroupFun& q, const std::vector<Rat>& weights);

}  // namespace mnk::emcoh
