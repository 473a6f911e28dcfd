#include "shintani/shintani_formula.hpp"

#include "shintani/theorem2.hpp"

namespace shintani {

Rat bernoulli_eval(int l, const Rat& x) {
    switch (l) {
        case 0: return Rat(1);
        case 1: return x - Rat(1, 2);
        case 2: return x * x - x + Rat(1, 6);
    }
    throw Error(Errc::LOutOfRange, "only B_0, B_1, B_2 appear in the degree-2 formula");
}

// Tr(eps^j) for j in {-1, 0, 1}; eps has norm 1, so eps^-1 is its conjugate
// and the traces at j = -1 and j = 1 agree.
static Rat trace_eps_power(const FieldContext& F, int j) {
    if (j == 0) return Rat(2);
    if (j == 1 || j == -1) return Rat(F.trace_eps);
    throw Error(Errc::InvalidArgument, "trace power outside {-1,0,1}");
}

Int class_number_direct(const FieldContext& F, long long p, const Rat& inner_offset) {
    ResidueField rf(F, p);
    const Rat factorial[3] = {Rat(1), Rat(1), Rat(2)};

    Rat total = 0;
    for (const ShintaniPoint& r : enumerate_R(F, p)) {
        int chi = hecke_chi(rf, r);
        if (chi == 0) continue;
        Rat inner = inner_offset;
        for (int l1 = 0; l1 <= 2; ++l1) {
            int l2 = 2 - l1;
            inner += bernoulli_eval(l1, r.r1) / factorial[l1] *
                     (bernoulli_eval(l2, r.r2) / factorial[l2]) * trace_eps_power(F, l2 - 1);
        }
        total += Rat(chi) * inner;
    }

    total /= 2;
    if (denominator(total) != 1 || total <= 0)
        throw Error(Errc::NonIntegralResult, "direct sum / 2 is not a positive integer");
    return numerator(total);
}

}  // namespace shintani
