#pragma once

#include <string>
#include <vector>

#include "mnk/cyclotomic.hpp"

namespace mnk::abgrp {

using exact::Cyclotomic;

/// Element coordinates; coordinate i lives in [0, n_i).
using Elem = std::vector<long>;

/// A ≅ Z/n1 x ... x Z/nk, given by explicit cyclic factors.
class FiniteAbelianGroup {
  public:
    explicit FiniteAbelianGroup(std::vector<long> factors);

    const std::vector<long>& factors() const { return factors_; }
    long order() const { return order_; }
    size_t rank_count() const { return factors_.size(); }

    Elem zero() const { return Elem(factors_.size(), 0); }
    Elem add(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem reduce(const Elem& a) const;

    /// Mixed-radix rank of coords; inverse of unrank.
    long rank(const Elem& a) const;
    Elem unrank(long idx) const;

    /// "n1,n2,...,nk"
    std::string str() const;
    static FiniteAbelianGroup parse(const std::string& text);

    bool operator==(const FiniteAbelianGroup& o) const { return factors_ == o.factors_; }

  private:
    std::vector<long> factors_;
    long order_;
};

std::string elem_str(const Elem& e);
Elem parse_elem(const std::string& text);

/// Dense table A -> Cyclotomic, indexed by rank.
class GroupFun {
  public:
    GroupFun(FiniteAbelianGroup g, Cyclotomic fill = Cyclotomic::one());

    const FiniteAbelianGroup& group() const { return group_; }
    const Cyclotomic& at(const Elem& a) const { return vals_[group_.rank(a)]; }
    void set(const Elem& a, Cyclotomic v) { vals_[group_.rank(a)] = std::move(v); }
    const std::vector<Cyclotomic>& values() const { return vals_; }
    bool operator==(const GroupFun& o) const { return group_ == o.group_ && vals_ == o.vals_; }

  private:
    FiniteAbelianGroup group_;
    std::vector<Cyclotomic> vals_;
};

/// |Hom(A, C^x)| = |A| for finite A.
long group_dual_order(const FiniteAbelianGroup& g);

/// Checks Q(i) = Q(-i) and the cube condition
/// Q(i+j+k)Q(i)Q(j)Q(k) = Q(i+j)Q(i+k)Q(j+k), exhaustively.
/// Throws std::invalid_argument if some value is not a root of unity.
bool is_quadratic(const GroupFun& q);

/// B(i,j) = Q(i+j) / (Q(i) Q(j)).
Cyclotomic associated_bilinear(const GroupFun& q, const Elem& i, const Elem& j);

}  // namespace mnk::abgrp
