#pragma once

#include "shintani/shintani_set.hpp"

#include <vector>

namespace shintani {

/// Quadratic Hecke character of conductor pO_F evaluated at r*pO_F:
/// 0 on R intersect O_F, +1 when pi(r) is a square in F_{p^2}^x, else -1.
/// Equivalently (-1)^m on the pi-fiber of rho^m.
int hecke_chi(const ResidueField& rf, const ShintaniPoint& r);

struct Thm2Result {
    Int h;
    long long ell = 0;          // shared cycle length = period of 1/p
    long long cycle_count = 0;
    /// Signed contribution chi(rep) * sum_i Q(eps^i * rep) per cycle,
    /// in representative order.
    std::vector<Rat> contributions;
};

/// h = (1/4) sum_{i=1..ell} sum_{rep} chi(rep * pO_F) Q(eps^i * rep) over
/// nontrivial cycle representatives (trivial orbits carry chi = 0).
/// NON_INTEGRAL_RESULT if the total fails to be a positive integer.
Thm2Result class_number_thm2(const FieldContext& F, long long p);

}  // namespace shintani
