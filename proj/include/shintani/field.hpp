#pragma once

#include "shintani/numeric.hpp"

#include <vector>

namespace shintani {

/// theta generates the ring of integers Z[theta] of Q(sqrt(d)):
/// sqrt(d) for d = 2,3 mod 4, (1+sqrt(d))/2 for d = 1 mod 4.
enum class ThetaKind { Sqrt, HalfPlusSqrt };

/// Element a + b*theta of Z[theta].
struct QuadInt {
    Int a;
    Int b;
    bool operator==(const QuadInt&) const = default;
};

/// Element u + v*theta of Q(sqrt(d)) with exact rational coordinates.
/// Equality is structural.
struct QuadRat {
    Rat u;
    Rat v;
    bool operator==(const QuadRat&) const = default;
};

enum class Interval { HalfOpenRight, HalfOpenLeft };  // (0,1] and [0,1)

enum class ReasonCode {
    NotPrime,
    PLt7,
    PNot3Mod4,
    DNotInert,
    DNotSquarefree,
    HfNotOne,
};

struct EligibilityReport {
    bool eligible = false;
    std::vector<ReasonCode> failures;
};

struct FieldOptions {
    long long unit_max_convergents = 1'000'000;
    long long principal_search_cap = 10'000;
};

/// Everything derived from d. Immutable after construction; all operations
/// on field elements are pure, so contexts can be shared across threads.
struct FieldContext {
    long long d = 0;
    ThetaKind theta_kind = ThetaKind::Sqrt;
    long long trace_theta = 0;  // T,  theta^2 = T*theta - N
    long long norm_theta = 0;   // N
    Int disc;                   // field discriminant
    QuadInt eps_fund;           // fundamental unit > 1 (norm +1 or -1)
    QuadInt eps;                // totally positive unit s + t*theta, norm +1
    Int trace_eps;              // Tr(eps) = 2s + t*T
    bool h1_verified = false;
    FieldOptions options;

    Int s() const { return eps.a; }
    Int t() const { return eps.b; }
};

FieldContext make_field(long long d, const FieldOptions& options = {});

// --- arithmetic in Q(sqrt(d)) ----------------------------------------------

QuadRat qr_from(const Rat& u, const Rat& v = Rat(0));
QuadRat qr_from(const QuadInt& x);
QuadRat qr_add(const QuadRat& x, const QuadRat& y);
QuadRat qr_sub(const QuadRat& x, const QuadRat& y);
QuadRat qr_neg(const QuadRat& x);
QuadRat qr_mul(const FieldContext& F, const QuadRat& x, const QuadRat& y);
QuadRat qr_conj(const FieldContext& F, const QuadRat& x);
Rat qr_norm(const FieldContext& F, const QuadRat& x);
QuadRat qr_div(const FieldContext& F, const QuadRat& x, const QuadRat& y);

QuadInt qi_mul(const FieldContext& F, const QuadInt& x, const QuadInt& y);
Int qi_norm(const FieldContext& F, const QuadInt& x);
Int qi_trace(const FieldContext& F, const QuadInt& x);

/// Sign of x under the real embedding sqrt(d) > 0, by integer case analysis.
int qr_sign(const FieldContext& F, const QuadRat& x);

/// Unique n with n <= x < n+1 under the real embedding. Integer arithmetic
/// only: the sqrt(d) part is compared against integers by squaring.
Int exact_floor(const FieldContext& F, const QuadRat& x);

/// y in the chosen interval with x - y integral.
QuadRat frac_part(const FieldContext& F, const QuadRat& x, Interval interval);

// --- field-level checks -----------------------------------------------------

/// True iff the class number of Q(sqrt(d)) is 1: every prime q up to the
/// Minkowski bound with q split or ramified must admit an element of norm
/// +-q (a bounded search; SEARCH_EXHAUSTED if the cap is hit).
bool verify_h1(const FieldContext& F);

/// Checks for the pair (d, p): p prime, p >= 7, p = 3 mod 4, (d/p) = -1,
/// h_F = 1. Failures are reported in the value, never thrown.
EligibilityReport eligibility(const FieldContext& F, long long p);

const char* reason_code_name(ReasonCode c);

// --- small integer number theory used across modules ------------------------

bool is_prime_ll(long long n);
bool is_squarefree_ll(long long n);
long long mod_pow_ll(long long base, long long exp, long long mod);

/// Legendre symbol (a/p) for odd prime p, via Euler's criterion.
int legendre_symbol(long long a, long long p);

/// Kronecker symbol (D/q) for prime q (q = 2 allowed).
int kronecker_prime(const Int& D, long long q);

}  // namespace shintani
