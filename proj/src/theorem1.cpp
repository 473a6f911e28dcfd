#include "shintani/theorem1.hpp"

namespace shintani {

RecurrenceParams cd_constants(const FieldContext& F, long long a, long long b) {
    RecurrenceParams P;
    P.a = a;
    P.b = b;
    P.T = F.trace_theta;
    P.N = F.norm_theta;
    P.C = P.a * P.a + P.a * P.b * P.T + Int(P.N) * P.b * P.b;
    P.D = 2 * P.a + P.b * P.T;
    return P;
}

RecurrenceParams cd_constants(const FieldContext& F, const Generator& rho) {
    return cd_constants(F, rho.a, rho.b);
}

XYSequences xy_sequences(const RecurrenceParams& P, int count) {
    if (count < 1) throw Error(Errc::InvalidArgument, "count must be >= 1");
    XYSequences out;
    out.x.reserve(count);
    out.y.reserve(count);
    Int x = P.a, y = P.b;
    for (int m = 1; m <= count; ++m) {
        out.x.push_back(x);
        out.y.push_back(y);
        Int xn = P.a * x - Int(P.N) * P.b * y;
        Int yn = P.b * x + (P.a + Int(P.T) * P.b) * y;
        x = xn;
        y = yn;
    }
    return out;
}

// Coefficients 1..count of num(z)/den(z) with den(0) = 1, by long division.
static std::vector<Int> divide_series(const std::vector<Int>& num, const std::vector<Int>& den,
                                      int count) {
    std::vector<Int> c(static_cast<size_t>(count) + 1, Int(0));
    for (int n = 0; n <= count; ++n) {
        Int acc = n < static_cast<int>(num.size()) ? num[n] : Int(0);
        for (int k = 1; k <= n && k < static_cast<int>(den.size()); ++k)
            acc -= den[k] * c[n - k];
        c[n] = acc;  // den[0] = 1
    }
    return {c.begin() + 1, c.end()};
}

XYSequences series_coeffs_oracle(const RecurrenceParams& P, int count) {
    if (count < 1) throw Error(Errc::InvalidArgument, "count must be >= 1");
    std::vector<Int> den{Int(1), -P.D, P.C};
    XYSequences out;
    out.x = divide_series({Int(0), P.a, -P.C}, den, count);
    out.y = divide_series({Int(0), P.b}, den, count);
    return out;
}

Rat q_form_eval(const FieldContext& F, const Rat& y1, const Rat& y2) {
    return QForm{F.trace_eps}.eval(y1, y2);
}

Thm1Result class_number_thm1(const FieldContext& F, long long p, const Generator& rho) {
    ResidueField rf(F, p);
    RecurrenceParams P = cd_constants(F, rho);
    QForm Q{F.trace_eps};

    Thm1Result out;
    out.C = P.C;
    out.D = P.D;
    out.terms.reserve(static_cast<size_t>(rf.group_order()));

    Int total = 0;
    for (long long m = 1; m <= rf.group_order(); ++m) {
        CosetReps reps = coset_reps(rf, rho, m);
        Int term = 0;
        for (const auto& [xi, yi] : reps.scaled) term += Q.eval_int(xi, yi);
        if (m % 2 != 0) term = -term;
        out.terms.push_back(term);
        total += term;
    }

    Int denom = 16 * F.t() * F.t() * Int(p) * p;
    if (total % denom != 0 || total <= 0)
        throw Error(Errc::NonIntegralResult, "alternating sum not a positive multiple of 16 t^2 p^2");
    out.h = total / denom;
    return out;
}

}  // namespace shintani
