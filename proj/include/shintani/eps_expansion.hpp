#pragma once

#include "shintani/field.hpp"

#include <string>
#include <vector>

namespace shintani {

/// Greedy base-eps expansion. Digits lie in {0, ..., Tr(eps)-1}; the
/// fractional tail is eventually periodic (eps is a Pisot unit) and the
/// stored period is minimal and never the forbidden all-floor(eps) string.
struct EpsExpansion {
    std::vector<long long> integer_digits;  // a_n .. a_0; empty when alpha < 1
    std::vector<long long> preperiod;       // fractional digits before the cycle
    std::vector<long long> period;          // minimal period; empty if finite
};

/// alpha must be > 0 with exact rational coordinates. max_digits = 0 picks
/// 10 * t * den^2 where den is the coordinate denominator (the state space
/// bound for elements of (1/p)O_F); MAX_DIGITS_EXCEEDED past the cap.
EpsExpansion eps_expand(const FieldContext& F, const QuadRat& alpha,
                        long long max_digits = 0);

/// Minimal period of the expansion of 1/p, cross-checked against the
/// multiplicative order of eps mod p; INTERNAL_INCONSISTENCY if they differ.
long long period_length_of_inv_p(const FieldContext& F, long long p);

/// "0.01(32202230)" style: integer digits, '.', preperiod, period in
/// parentheses. Digits are comma-separated when Tr(eps) > 10.
std::string render_expansion(const FieldContext& F, const EpsExpansion& e);

}  // namespace shintani
