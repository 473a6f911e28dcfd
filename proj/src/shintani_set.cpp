#include "shintani/shintani_set.hpp"

namespace shintani {

namespace {

long long t_as_ll(const FieldContext& F) {
    if (F.t() > 1'000'000) throw Error(Errc::InvalidArgument, "unit coefficient t too large");
    return to_ll(F.t());
}

ShintaniPoint point_from_AB(long long A, long long B, long long tp) {
    return {make_rat(A, tp), make_rat(B, tp)};
}

}  // namespace

std::pair<long long, long long> scaled_coords(const FieldContext& F, long long p,
                                              const ShintaniPoint& r) {
    long long tp = t_as_ll(F) * p;
    Rat A = r.r1 * tp, B = r.r2 * tp;
    if (denominator(A) != 1 || denominator(B) != 1)
        throw Error(Errc::InvalidArgument, "point is not in (1/p)O_F");
    return {to_ll(numerator(A)), to_ll(numerator(B))};
}

std::vector<ShintaniPoint> enumerate_R(const FieldContext& F, long long p) {
    long long t = t_as_ll(F);
    long long s_mod_t = to_ll(((F.s() % t) + t) % t);
    // s and t are coprime (the unit norm forces it), so for each A the
    // congruence A + s*B = 0 mod t pins B to one residue class mod t.
    long long s_inv = 0;
    for (long long c = 0; c < t; ++c)
        if (s_mod_t * c % t == 1 % t) { s_inv = c; break; }
    long long tp = t * p;
    std::vector<ShintaniPoint> out;
    out.reserve(static_cast<size_t>(t) * p * p);
    for (long long A = 1; A <= tp; ++A) {
        long long B0 = (t - A % t) * s_inv % t;
        for (long long B = B0; B < tp; B += t) out.push_back(point_from_AB(A, B, tp));
    }
    return out;
}

std::vector<KernelElem> kernel_elements(const FieldContext& F) {
    long long t = t_as_ll(F);
    std::vector<KernelElem> out;
    out.reserve(static_cast<size_t>(t));
    for (long long i = 0; i < t; ++i) {
        Rat si_t = make_rat(F.s() * i, Int(t));
        KernelElem k;
        k.index = i;
        k.point = {Rat(1) - frac_left(si_t), make_rat(i, t)};
        out.push_back(std::move(k));
    }
    return out;
}

ResidueElem pi_map(const ResidueField& rf, const ShintaniPoint& r) {
    const FieldContext& F = rf.field();
    // p*r = (A + sB)/t + B*theta on the basis {1, theta}
    auto [A, B] = scaled_coords(F, rf.p(), r);
    Int first = Int(A) + F.s() * B;
    if (first % F.t() != 0) throw Error(Errc::InvalidArgument, "point violates A + sB = 0 mod t");
    return rf.make(first / F.t(), Int(B));
}

CosetReps coset_reps(const ResidueField& rf, const Generator& rho, long long m) {
    if (m < 1 || m > rf.group_order())
        throw Error(Errc::MOutOfRange, "m must satisfy 1 <= m <= p^2 - 1");
    const FieldContext& F = rf.field();
    long long p = rf.p();
    long long t = t_as_ll(F);
    Int tp = Int(t) * p;

    ResidueElem rm = rf.pow(rho.rho, m);
    CosetReps out;
    out.xt = frac_right(make_rat(Int(rm.x) * t - F.s() * rm.y, tp));
    out.yt = frac_left(make_rat(Int(rm.y), tp));
    for (long long i = 0; i < t; ++i) {
        Rat si_t = make_rat(F.s() * i, Int(t));
        Rat xi = frac_right(out.xt + Rat(1) - frac_left(si_t));
        Rat yi = frac_left(out.yt + make_rat(i, t));
        out.fiber.push_back({xi, yi});
        out.scaled.emplace_back(numerator(xi * Rat(tp) * 2 - Rat(tp)),
                                numerator(yi * Rat(tp) * 2 - Rat(tp)));
    }
    return out;
}

ShintaniPoint eps_action(const FieldContext& F, const ShintaniPoint& r) {
    return {Rat(1) - r.r2, frac_left(r.r1 + Rat(F.trace_eps) * r.r2)};
}

CycleDecomposition cycle_decompose(const FieldContext& F, long long p) {
    long long t = t_as_ll(F);
    long long tp = t * p;
    ResidueField rf(F, p);

    CycleDecomposition out;
    std::vector<ShintaniPoint> points = enumerate_R(F, p);
    // Index (A, B) -> A-1 + tp*B over the full rectangle; only valid pairs used.
    std::vector<bool> visited(static_cast<size_t>(tp) * tp, false);
    auto index_of = [&](const ShintaniPoint& r) {
        auto [A, B] = scaled_coords(F, p, r);
        return static_cast<size_t>(A - 1) + static_cast<size_t>(tp) * B;
    };

    for (const ShintaniPoint& start : points) {  // enumerate_R is (A,B)-sorted
        size_t idx = index_of(start);
        if (visited[idx]) continue;
        if (pi_map(rf, start).is_zero()) {
            visited[idx] = true;
            out.trivial_points.push_back(start);
            continue;
        }
        ShintaniCycle cycle;
        cycle.rep = start;
        ShintaniPoint cur = start;
        do {
            cur = eps_action(F, cur);
            visited[index_of(cur)] = true;
            cycle.points.push_back(cur);
        } while (!(cur == start));
        out.nontrivial.push_back(std::move(cycle));
    }

    for (const ShintaniCycle& c : out.nontrivial) {
        if (out.cycle_length == 0) out.cycle_length = c.length();
        if (c.length() != out.cycle_length)
            throw Error(Errc::InternalInconsistency, "Shintani orbits of different lengths");
    }
    return out;
}

std::string point_str(const ShintaniPoint& r) {
    if (r.r2 == 0) return rat_str(r.r1);
    return rat_str(r.r1) + "+" + rat_str(r.r2) + "*eps";
}

}  // namespace shintani
