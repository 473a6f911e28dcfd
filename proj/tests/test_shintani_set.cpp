#include "shintani/shintani_set.hpp"

#include "doctest.h"
#include "test_util.hpp"

#include <algorithm>
#include <map>
#include <set>

using namespace shintani;
using namespace shintani_test;

namespace {

ShintaniPoint pt(long long an, long long ad, long long bn, long long bd) {
    return {make_rat(an, ad), make_rat(bn, bd)};
}

// Independent count of {A in (0,tp], B in [0,tp) : A + sB = 0 mod t} by a
// plain double loop.
long long count_R_oracle(long long s, long long t, long long p) {
    long long count = 0;
    for (long long A = 1; A <= t * p; ++A)
        for (long long B = 0; B < t * p; ++B)
            if ((A + s * B) % t == 0) ++count;
    return count;
}

}  // namespace

TEST_CASE("enumerate_R has cardinality t*p^2 and lives in (1/p)O_F") {
    FieldContext F3 = make_field(3);
    auto R = enumerate_R(F3, 7);
    CHECK(R.size() == 49);
    CHECK(count_R_oracle(2, 1, 7) == 49);

    FieldContext F6 = make_field(6);  // s=5, t=2
    auto R6 = enumerate_R(F6, 7);
    CHECK(R6.size() == 98);
    CHECK(count_R_oracle(5, 2, 7) == 98);

    for (const ShintaniPoint& r : R6) {
        CHECK(r.r1 > 0);
        CHECK(r.r1 <= 1);
        CHECK(r.r2 >= 0);
        CHECK(r.r2 < 1);
        // p*(r1 + r2*eps) must land in O_F: integer coordinates on {1, theta}
        Rat c1 = 7 * (r.r1 + r.r2 * Rat(F6.s()));
        Rat c2 = 7 * r.r2 * Rat(F6.t());
        CHECK(denominator(c1) == 1);
        CHECK(denominator(c2) == 1);
    }

    CHECK(std::is_sorted(R6.begin(), R6.end()));
    for (auto [d, p] : {std::pair<long long, long long>{2, 11}, {5, 7}, {13, 11}}) {
        FieldContext F = make_field(d);
        CHECK(Int(enumerate_R(F, p).size()) == F.t() * p * p);
    }
}

TEST_CASE("kernel elements match the closed form") {
    FieldContext F3 = make_field(3);
    auto k3 = kernel_elements(F3);
    REQUIRE(k3.size() == 1);
    CHECK(k3[0].point == pt(1, 1, 0, 1));

    // d=6: s=5, t=2: {1, 1/2 + (1/2) eps}; d=2: s=3, t=2: same shape
    for (long long d : {6, 2}) {
        FieldContext F = make_field(d);
        auto ker = kernel_elements(F);
        REQUIRE(ker.size() == 2);
        CHECK(ker[0].point == pt(1, 1, 0, 1));
        CHECK(ker[1].point == pt(1, 2, 1, 2));
    }

    // pi kills exactly the kernel, and the kernel points lie in R
    for (auto [d, p] : {std::pair<long long, long long>{3, 7}, {6, 7}, {2, 11}}) {
        FieldContext F = make_field(d);
        ResidueField rf(F, p);
        auto R = enumerate_R(F, p);
        auto ker = kernel_elements(F);
        CHECK(Int(ker.size()) == F.t());
        long long zeros = 0;
        for (const ShintaniPoint& r : R)
            if (pi_map(rf, r).is_zero()) ++zeros;
        CHECK(Int(zeros) == F.t());
        for (const KernelElem& k : ker) {
            CHECK(std::find(R.begin(), R.end(), k.point) != R.end());
            CHECK(pi_map(rf, k.point).is_zero());
        }
    }
}

TEST_CASE("pi_map sends p*r to the basis {1, theta} mod p") {
    FieldContext F = make_field(3);
    ResidueField rf(F, 7);
    // p*r = 1 + eps = 3 + sqrt(3)
    CHECK(pi_map(rf, pt(1, 7, 1, 7)) == ResidueElem{3, 1});
    // p*r = 4 + eps = 6 + sqrt(3)
    CHECK(pi_map(rf, pt(4, 7, 1, 7)) == ResidueElem{6, 1});
}

TEST_CASE("pi is surjective with fibers of size t (exhaustive small p)") {
    for (auto [d, p] : {std::pair<long long, long long>{3, 7}, {6, 7}, {2, 11}, {13, 7}, {3, 19}}) {
        CAPTURE(d);
        CAPTURE(p);
        FieldContext F = make_field(d);
        ResidueField rf(F, p);
        std::map<std::pair<long long, long long>, long long> fibers;
        for (const ShintaniPoint& r : enumerate_R(F, p)) {
            ResidueElem image = pi_map(rf, r);
            ++fibers[{image.x, image.y}];
        }
        CHECK(Int(fibers.size()) == Int(p) * p);  // surjective onto F_{p^2}
        for (const auto& [image, count] : fibers) CHECK(Int(count) == F.t());
    }
}

TEST_CASE("coset_reps reproduces the worked example") {
    FieldContext F = make_field(3);
    ResidueField rf(F, 7);
    Generator rho = rf.generator_from_lift(6, 1);

    CosetReps m1 = coset_reps(rf, rho, 1);
    CHECK(m1.xt == make_rat(4, 7));
    CHECK(m1.yt == make_rat(1, 7));
    REQUIRE(m1.scaled.size() == 1);
    CHECK(m1.scaled[0] == std::pair<Int, Int>{1, -5});

    CosetReps m48 = coset_reps(rf, rho, 48);
    CHECK(m48.scaled[0] == std::pair<Int, Int>{-5, -7});

    CHECK(code_of([&] { coset_reps(rf, rho, 0); }) == Errc::MOutOfRange);
    CHECK(code_of([&] { coset_reps(rf, rho, 49); }) == Errc::MOutOfRange);
}

TEST_CASE("coset fibers map onto rho^m and scaled coordinates are odd offsets") {
    for (auto [d, p] : {std::pair<long long, long long>{3, 7}, {6, 7}, {2, 11}}) {
        CAPTURE(d);
        CAPTURE(p);
        FieldContext F = make_field(d);
        ResidueField rf(F, p);
        Generator rho = rf.find_generator();
        Int tp = F.t() * p;
        for (long long m = 1; m <= rf.group_order(); ++m) {
            CosetReps reps = coset_reps(rf, rho, m);
            CHECK(Int(reps.fiber.size()) == F.t());
            ResidueElem expected = rf.pow(rho.rho, m);
            std::set<std::pair<Rat, Rat>> distinct;
            for (size_t i = 0; i < reps.fiber.size(); ++i) {
                CHECK(pi_map(rf, reps.fiber[i]) == expected);
                distinct.insert({reps.fiber[i].r1, reps.fiber[i].r2});
                auto [xi, yi] = reps.scaled[i];
                // tp(2~x - 1) with ~x in (0,1] on the 1/tp grid
                CHECK(xi > -tp);
                CHECK(xi <= tp);
                CHECK(yi >= -tp);
                CHECK(yi < tp);
                CHECK((xi - tp) % 2 == 0);
                CHECK((yi - tp) % 2 == 0);
            }
            CHECK(Int(distinct.size()) == F.t());
        }
    }
}

TEST_CASE("eps_action on pinned points") {
    FieldContext F = make_field(3);
    CHECK(eps_action(F, pt(1, 7, 1, 7)) == pt(6, 7, 5, 7));
    CHECK(eps_action(F, pt(1, 1, 0, 1)) == pt(1, 1, 0, 1));  // kernel fixed when t=1

    // orbit of 1/7 closes after exactly 8 steps
    ShintaniPoint start = pt(1, 7, 0, 1);
    ShintaniPoint cur = start;
    int steps = 0;
    do {
        cur = eps_action(F, cur);
        ++steps;
        REQUIRE(steps <= 8);
    } while (!(cur == start));
    CHECK(steps == 8);
}

TEST_CASE("cycle decomposition of the running example") {
    FieldContext F = make_field(3);
    CycleDecomposition dec = cycle_decompose(F, 7);
    CHECK(dec.nontrivial.size() == 6);
    CHECK(dec.cycle_length == 8);
    REQUIRE(dec.trivial_points.size() == 1);
    CHECK(dec.trivial_points[0] == pt(1, 1, 0, 1));

    // The published representative list is one valid system; ours pick the
    // lexicographic minimum per orbit, so match orbits, not labels: each
    // published point must land in a distinct cycle.
    std::vector<ShintaniPoint> published = {pt(1, 7, 1, 7), pt(1, 7, 0, 1), pt(1, 7, 4, 7),
                                            pt(1, 7, 5, 7), pt(2, 7, 2, 7), pt(3, 7, 0, 1)};
    std::set<size_t> hit;
    for (const ShintaniPoint& q : published) {
        for (size_t i = 0; i < dec.nontrivial.size(); ++i) {
            const auto& pts = dec.nontrivial[i].points;
            if (std::find(pts.begin(), pts.end(), q) != pts.end()) hit.insert(i);
        }
    }
    CHECK(hit.size() == 6);

    // canonical representatives under the lex-minimum rule
    std::set<std::pair<Rat, Rat>> reps;
    for (const ShintaniCycle& c : dec.nontrivial) reps.insert({c.rep.r1, c.rep.r2});
    std::set<std::pair<Rat, Rat>> expected = {
        {make_rat(1, 7), make_rat(1, 7)}, {make_rat(1, 7), Rat(0)},
        {make_rat(1, 7), make_rat(4, 7)}, {make_rat(1, 7), make_rat(5, 7)},
        {make_rat(2, 7), make_rat(2, 7)}, {make_rat(2, 7), make_rat(3, 7)}};
    CHECK(reps == expected);

    CycleDecomposition dec19 = cycle_decompose(F, 19);
    CHECK(dec19.nontrivial.size() == 72);
    CHECK(dec19.cycle_length == 5);
}

TEST_CASE("cycle structure invariants across the small grid") {
    for (auto [d, p] : {std::pair<long long, long long>{3, 7}, {6, 7}, {2, 11}, {13, 7}}) {
        CAPTURE(d);
        CAPTURE(p);
        FieldContext F = make_field(d);
        ResidueField rf(F, p);
        CycleDecomposition dec = cycle_decompose(F, p);
        long long order = rf.element_order(rf.make(F.s(), F.t()));

        CHECK(dec.cycle_length == order);
        CHECK(rf.group_order() % dec.cycle_length == 0);
        CHECK(Int(dec.trivial_points.size()) == F.t());
        CHECK(Int(dec.nontrivial.size()) * dec.cycle_length == F.t() * (Int(p) * p - 1));

        ResidueElem eps_mod_p = rf.make(F.s(), F.t());
        std::set<std::pair<Rat, Rat>> all_points;
        for (const ShintaniCycle& c : dec.nontrivial) {
            CHECK(c.length() == order);
            CHECK(c.points.back() == c.rep);  // the orbit closes
            Rat coord_sum = 0;
            for (const ShintaniPoint& r : c.points) {
                coord_sum += r.r1 + r.r2;
                all_points.insert({r.r1, r.r2});
                if (!(r == c.rep)) CHECK(c.rep < r);  // rep is the lexicographic minimum
                // equivariance: pi(eps * r) = (eps mod p) * pi(r)
                CHECK(pi_map(rf, eps_action(F, r)) == rf.mul(eps_mod_p, pi_map(rf, r)));
            }
            CHECK(coord_sum == Rat(c.length()));
        }
        // orbits partition R minus the kernel, so the action is a bijection
        CHECK(Int(all_points.size()) == F.t() * (Int(p) * p - 1));
    }
}
