#pragma once

#include "shintani/shintani_set.hpp"

namespace shintani {

/// B_0(x) = 1, B_1(x) = x - 1/2, B_2(x) = x^2 - x + 1/6.
/// L_OUT_OF_RANGE for l outside {0, 1, 2}.
Rat bernoulli_eval(int l, const Rat& x);

/// Direct evaluation of the simplified class number formula as a double sum
/// over all of R_{F,p}:
///   h = (1/2) sum_{r in R} chi(r*pO_F)
///         sum_{l1+l2=2} B_{l1}(r1)/l1! * B_{l2}(r2)/l2! * Tr(eps^(l2-1)).
/// Intentionally naive: this is the ground-truth cross-check for both
/// theorem routes, so clarity wins over speed and it shares nothing with
/// the Q-form path beyond field primitives.
///
/// inner_offset is added to the inner sum per point; character orthogonality
/// makes any constant cancel, which the test suite exercises.
Int class_number_direct(const FieldContext& F, long long p,
                        const Rat& inner_offset = Rat(0));

}  // namespace shintani
