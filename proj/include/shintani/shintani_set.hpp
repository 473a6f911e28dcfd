#pragma once

#include "shintani/residue.hpp"

#include <utility>
#include <vector>

namespace shintani {

/// r = r1 + r2*eps with r1 in (0,1], r2 in [0,1); an element of (1/p)O_F.
/// Both coordinates have the fixed denominator t*p: r1 = A/(tp), r2 = B/(tp)
/// with A in (0,tp], B in [0,tp), A + s*B = 0 mod t.
struct ShintaniPoint {
    Rat r1;
    Rat r2;
    bool operator==(const ShintaniPoint&) const = default;
    bool operator<(const ShintaniPoint& o) const {
        return r1 != o.r1 ? r1 < o.r1 : r2 < o.r2;
    }
};

struct KernelElem {
    long long index = 0;  // i in {0, ..., t-1}
    ShintaniPoint point;  // 1 - {s*i/t} + (i/t)*eps; lies in O_F
};

/// Orbit of rep under the twisted unit action. points[k] = eps^(k+1) * rep,
/// so the last entry closes the cycle back at rep.
struct ShintaniCycle {
    ShintaniPoint rep;  // lexicographic minimum of (r1, r2) over the orbit
    std::vector<ShintaniPoint> points;
    long long length() const { return static_cast<long long>(points.size()); }
};

struct CosetReps {
    Rat xt;  // {x(m)/p - s*y(m)/(tp)} in (0,1]
    Rat yt;  // {y(m)/(tp)} in [0,1)
    std::vector<ShintaniPoint> fiber;             // t points, pi = rho^m on each
    std::vector<std::pair<Int, Int>> scaled;      // (x_i(m), y_i(m)) = tp*(2~ - 1)
};

struct CycleDecomposition {
    std::vector<ShintaniCycle> nontrivial;
    std::vector<ShintaniPoint> trivial_points;  // R intersect O_F, i.e. ker(pi)
    long long cycle_length = 0;                 // shared length of all orbits
};

/// All t*p^2 points A/(tp) + (B/(tp))*eps with A + s*B = 0 mod t,
/// sorted by (A, B).
std::vector<ShintaniPoint> enumerate_R(const FieldContext& F, long long p);

/// The t points of R lying in O_F (the kernel of pi).
std::vector<KernelElem> kernel_elements(const FieldContext& F);

/// Multiplication by p followed by reduction mod pO_F, on the basis {1, theta}.
ResidueElem pi_map(const ResidueField& rf, const ShintaniPoint& r);

/// The full pi-fiber over rho^m together with the scaled integer coordinates.
/// 1 <= m <= p^2 - 1.
CosetReps coset_reps(const ResidueField& rf, const Generator& rho, long long m);

/// eps * (r1 + r2*eps) = (1 - r2) + {r1 + Tr(eps)*r2} * eps.
ShintaniPoint eps_action(const FieldContext& F, const ShintaniPoint& r);

/// Partition of R \ O_F into eps-orbits; representatives are lexicographic
/// minima. Throws INTERNAL_INCONSISTENCY if two orbits differ in length.
CycleDecomposition cycle_decompose(const FieldContext& F, long long p);

/// Scaled integer coordinates (A, B) = (r1*tp, r2*tp).
std::pair<long long, long long> scaled_coords(const FieldContext& F, long long p,
                                              const ShintaniPoint& r);

/// Compact display form "r1" or "r1+r2*eps" with exact rationals.
std::string point_str(const ShintaniPoint& r);

}  // namespace shintani
