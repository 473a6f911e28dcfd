#include "shintani/theorem2.hpp"

#include "shintani/theorem1.hpp"

namespace shintani {

int hecke_chi(const ResidueField& rf, const ShintaniPoint& r) {
    ResidueElem image = pi_map(rf, r);
    if (image.is_zero()) return 0;  // r in O_F: the conductor kills it
    return rf.is_square(image) ? 1 : -1;
}

Thm2Result class_number_thm2(const FieldContext& F, long long p) {
    ResidueField rf(F, p);
    CycleDecomposition dec = cycle_decompose(F, p);
    QForm Q{F.trace_eps};

    Thm2Result out;
    out.ell = dec.cycle_length;
    out.cycle_count = static_cast<long long>(dec.nontrivial.size());
    out.contributions.reserve(dec.nontrivial.size());

    Rat total = 0;
    for (const ShintaniCycle& cycle : dec.nontrivial) {
        int chi = hecke_chi(rf, cycle.rep);
        Rat sum = 0;
        for (const ShintaniPoint& pt : cycle.points) sum += Q.eval(pt.r1, pt.r2);
        Rat contribution = Rat(chi) * sum;
        out.contributions.push_back(contribution);
        total += contribution;
    }

    total /= 4;
    if (denominator(total) != 1 || total <= 0)
        throw Error(Errc::NonIntegralResult, "cycle sum / 4 is not a positive integer");
    out.h = numerator(total);
    return out;
}

}  // namespace shintani
