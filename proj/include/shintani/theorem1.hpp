#pragma once

#include "shintani/shintani_set.hpp"

#include <vector>

namespace shintani {

/// Integers built from the lift a + b*theta of a generator:
/// C = a^2 + a*b*T + N*b^2 (the norm form), D = 2a + b*T (the trace form).
/// The denominator polynomial of both rational functions is C z^2 - D z + 1.
struct RecurrenceParams {
    Int a, b;
    Int C, D;
    long long T = 0, N = 0;
};

/// Q(Y1, Y2) = Tr(eps) Y1^2 + 4 Y1 Y2 + Tr(eps) Y2^2.
struct QForm {
    Int trace_eps;
    Rat eval(const Rat& y1, const Rat& y2) const {
        return Rat(trace_eps) * (y1 * y1 + y2 * y2) + 4 * y1 * y2;
    }
    Int eval_int(const Int& y1, const Int& y2) const {
        return trace_eps * (y1 * y1 + y2 * y2) + 4 * y1 * y2;
    }
};

struct XYSequences {
    std::vector<Int> x;  // x[m-1] = x(m)
    std::vector<Int> y;
};

struct Thm1Result {
    Int h;
    Int C, D;
    /// terms[m-1] = (-1)^m * sum_i Q(x_i(m), y_i(m)); h = sum / (16 t^2 p^2).
    std::vector<Int> terms;
};

RecurrenceParams cd_constants(const FieldContext& F, long long a, long long b);
RecurrenceParams cd_constants(const FieldContext& F, const Generator& rho);

/// x(1) = a, y(1) = b; x(m+1) = a x(m) - N b y(m), y(m+1) = b x(m) + (a + T b) y(m).
/// These are the coordinates of rho^m as exact integers (no reduction).
XYSequences xy_sequences(const RecurrenceParams& params, int count);

/// Same sequences from the rational functions (a z - C z^2) / (C z^2 - D z + 1)
/// and b z / (C z^2 - D z + 1), by exact power-series division. Independent
/// route used to cross-check xy_sequences.
XYSequences series_coeffs_oracle(const RecurrenceParams& params, int count);

Rat q_form_eval(const FieldContext& F, const Rat& y1, const Rat& y2);

/// h = (1 / 16 t^2 p^2) sum_{m=1}^{p^2-1} sum_{i=1}^t (-1)^m Q(x_i(m), y_i(m)).
/// The sum is computed mod-p-first (only rho^m mod p is needed), exactly;
/// NON_INTEGRAL_RESULT if divisibility fails, which would signal a bug.
Thm1Result class_number_thm1(const FieldContext& F, long long p, const Generator& rho);

}  // namespace shintani
