#include "shintani/shintani_formula.hpp"

#include "shintani/theorem2.hpp"

#include "doctest.h"
#include "test_util.hpp"

#include <random>

using namespace shintani;
using namespace shintani_test;

TEST_CASE("bernoulli_eval") {
    CHECK(bernoulli_eval(0, make_rat(5, 9)) == 1);
    CHECK(bernoulli_eval(1, make_rat(1, 2)) == 0);
    CHECK(bernoulli_eval(2, Rat(0)) == make_rat(1, 6));
    CHECK(bernoulli_eval(2, make_rat(1, 7)) == make_rat(13, 294));  // (6 - 42 + 49)/294
    CHECK(code_of([] { bernoulli_eval(3, Rat(0)); }) == Errc::LOutOfRange);
    CHECK(code_of([] { bernoulli_eval(-1, Rat(0)); }) == Errc::LOutOfRange);
}

TEST_CASE("the inner Bernoulli sum collapses to the simplified closed form") {
    // sum_{l1+l2=2} B_l1(r1)/l1! B_l2(r2)/l2! Tr(eps^(l2-1))
    //   = Tr(eps)/2 (B_2(r1) + B_2(r2)) + 2 B_1(r1) B_1(r2)
    for (long long d : {3, 6, 2, 13}) {
        FieldContext F = make_field(d);
        Rat tr(F.trace_eps);
        std::mt19937_64 rng(31337);
        std::uniform_int_distribution<long long> num(0, 7 * 3);
        for (int iter = 0; iter < 50; ++iter) {
            Rat r1 = make_rat(num(rng) + 1, 21), r2 = make_rat(num(rng), 21);
            const Rat fact[3] = {Rat(1), Rat(1), Rat(2)};
            const Rat trace_pow[3] = {tr, Rat(2), tr};  // Tr(eps^-1), Tr(1), Tr(eps)
            Rat lhs = 0;
            for (int l1 = 0; l1 <= 2; ++l1)
                lhs += bernoulli_eval(l1, r1) / fact[l1] * (bernoulli_eval(2 - l1, r2) / fact[2 - l1]) *
                       trace_pow[2 - l1];
            Rat rhs = tr / 2 * (bernoulli_eval(2, r1) + bernoulli_eval(2, r2)) +
                      2 * bernoulli_eval(1, r1) * bernoulli_eval(1, r2);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("class_number_direct reproduces pinned table values") {
    FieldContext F = make_field(3);
    CHECK(class_number_direct(F, 7) == 2);
    CHECK(class_number_direct(F, 19) == 2);
    CHECK(class_number_direct(F, 67) == 6);
}

TEST_CASE("a constant added to the inner sum cancels by orthogonality") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long long> num(-500, 500);
    std::uniform_int_distribution<long long> den(1, 60);
    for (auto [d, p] : {std::pair<long long, long long>{3, 7}, {6, 7}, {13, 7}}) {
        CAPTURE(d);
        CAPTURE(p);
        FieldContext F = make_field(d);
        Int h = class_number_direct(F, p);
        for (int iter = 0; iter < 3; ++iter) {
            Rat offset = make_rat(num(rng), den(rng));
            CHECK(class_number_direct(F, p, offset) == h);
        }
    }
}
