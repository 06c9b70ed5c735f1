#pragma once

#include <optional>
#include <vector>

#include "mnk/rational.hpp"

namespace mnk::linsolve {

/// Solves A x ≡ b (mod 1) with x ranging over (Q/Z)^ncols.
///
/// A is given by integer rows; b by rationals. Solvability over Q/Z is decided
/// exactly (divisible coefficients). On success returns the lexicographically
/// smallest solution among those with all coordinates in (1/M')Z/Z, where
/// M' = lcm(base_modulus, invariant factors, denominators of the particular
/// solution); this is the canonical finite grid on which the solution set is a
/// finite coset. Returns nullopt when the system has no solution over Q/Z.
std::optional<std::vector<Rat>> solve_mod1_lexmin(std::vector<std::vector<Int>> rows,
                                                  std::vector<Rat> rhs, long ncols,
                                                  const Int& base_modulus);

}  // namespace mnk::linsolve
