#pragma once

#include <array>
#include <string>

#include "mnk/abgrp.hpp"

namespace mnk::lattice {

using abgrp::Cyclotomic;
using abgrp::Elem;
using abgrp::FiniteAbelianGroup;
using abgrp::GroupFun;

/// Lattice type n|h(sign) with h | n.
struct NHType {
    long n = 1;
    long h = 1;
    int sign = +1;

    /// Parses "4|2+", "3-", "12|4-"; a bare "n±" means h = 1.
    static NHType parse(const std::string& text);
    std::string str() const;
};

/// The discriminant group L^v / L with its quadratic forms.
///
/// group ≅ Z/(nh/(h,2)) x Z/(n(h,2)/h); rho(a,b) = e((abh -+ a^2)/nh),
/// rho_bar = rho^{-1}. The section (a,b) -> (a, bh -+ a) identifies coset
/// representatives inside Z x Z = II_{1,1}(-1/nh).
struct DiscriminantForm {
    NHType type;
    FiniteAbelianGroup group;
    GroupFun rho;
    GroupFun rho_bar;
    /// Change of basis from group coordinates to dual-lattice coordinates
    /// (row-major 2x2); identity for h <= 2.
    std::array<long, 4> basis{1, 0, 0, 1};

    /// Dual-basis coordinates (alpha, beta) of a group element.
    std::pair<long, long> dual_coords(const Elem& e) const;
    /// Coset representative of the element inside Z x Z = II_{1,1}(-1/nh).
    std::pair<long, long> section(const Elem& e) const;
};

/// Rejects h not dividing n.
DiscriminantForm build_discriminant(const NHType& t);

/// h = 1: pulling rho back along the shear (a,b) -> (a, b + sign*a) gives the
/// hyperbolic form e(ab/n) (and e(-ab/n) for rho_bar). h = 2: the shear
/// (a,b) -> (a, a+b) carries the n|2+ forms to the n|2- forms. Exhaustive.
bool shear_check(const NHType& t);

/// True iff the pointwise product of two quadratic functions on the same
/// group is again quadratic.
bool type_sum_check(const GroupFun& q1, const GroupFun& q2);

}  // namespace mnk::lattice
