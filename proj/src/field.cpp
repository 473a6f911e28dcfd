#include "shintani/field.hpp"

#include <algorithm>
#include <tuple>

namespace shintani {

Rat parse_rat(const std::string& s) {
    auto bad = [&] { return Error(Errc::InvalidArgument, "malformed rational: '" + s + "'"); };
    if (s.empty()) throw bad();
    auto slash = s.find('/');
    auto parse_int = [&](const std::string& part) {
        if (part.empty() || (part.size() == 1 && (part[0] == '-' || part[0] == '+'))) throw bad();
        for (size_t i = 0; i < part.size(); ++i) {
            char c = part[i];
            if (i == 0 && (c == '-' || c == '+')) continue;
            if (c < '0' || c > '9') throw bad();
        }
        return Int(part);
    };
    if (slash == std::string::npos) return Rat(parse_int(s));
    Int num = parse_int(s.substr(0, slash));
    Int den = parse_int(s.substr(slash + 1));
    if (den == 0) throw bad();
    return make_rat(num, den);
}

bool is_prime_ll(long long n) {
    if (n < 2) return false;
    for (long long q = 2; q * q <= n; ++q)
        if (n % q == 0) return false;
    return true;
}

bool is_squarefree_ll(long long n) {
    if (n < 1) return false;
    for (long long q = 2; q * q <= n; ++q)
        if (n % (q * q) == 0) return false;
    return true;
}

long long mod_pow_ll(long long base, long long exp, long long mod) {
    __int128 acc = 1;
    __int128 b = ((base % mod) + mod) % mod;
    while (exp > 0) {
        if (exp & 1) acc = acc * b % mod;
        b = b * b % mod;
        exp >>= 1;
    }
    return static_cast<long long>(acc);
}

int legendre_symbol(long long a, long long p) {
    long long r = mod_pow_ll(a, (p - 1) / 2, p);
    if (r == 0) return 0;
    return r == 1 ? 1 : -1;
}

int kronecker_prime(const Int& D, long long q) {
    if (q == 2) {
        Int m = ((D % 8) + 8) % 8;
        if (m % 2 == 0) return 0;
        return (m == 1 || m == 7) ? 1 : -1;
    }
    Int m = ((D % q) + q) % q;
    return legendre_symbol(m.convert_to<long long>(), q);
}

// --- QuadRat / QuadInt arithmetic -------------------------------------------

QuadRat qr_from(const Rat& u, const Rat& v) { return QuadRat{u, v}; }
QuadRat qr_from(const QuadInt& x) { return QuadRat{Rat(x.a), Rat(x.b)}; }

QuadRat qr_add(const QuadRat& x, const QuadRat& y) { return {x.u + y.u, x.v + y.v}; }
QuadRat qr_sub(const QuadRat& x, const QuadRat& y) { return {x.u - y.u, x.v - y.v}; }
QuadRat qr_neg(const QuadRat& x) { return {-x.u, -x.v}; }

QuadRat qr_mul(const FieldContext& F, const QuadRat& x, const QuadRat& y) {
    // theta^2 = T*theta - N
    Rat uv = x.v * y.v;
    return {x.u * y.u - Rat(F.norm_theta) * uv,
            x.u * y.v + x.v * y.u + Rat(F.trace_theta) * uv};
}

QuadRat qr_conj(const FieldContext& F, const QuadRat& x) {
    // conj(theta) = T - theta
    return {x.u + Rat(F.trace_theta) * x.v, -x.v};
}

Rat qr_norm(const FieldContext& F, const QuadRat& x) {
    return x.u * x.u + Rat(F.trace_theta) * x.u * x.v + Rat(F.norm_theta) * x.v * x.v;
}

QuadRat qr_div(const FieldContext& F, const QuadRat& x, const QuadRat& y) {
    Rat n = qr_norm(F, y);
    if (n == 0) throw Error(Errc::InvalidArgument, "division by zero element");
    QuadRat xc = qr_mul(F, x, qr_conj(F, y));
    return {xc.u / n, xc.v / n};
}

QuadInt qi_mul(const FieldContext& F, const QuadInt& x, const QuadInt& y) {
    Int bb = x.b * y.b;
    return {x.a * y.a - Int(F.norm_theta) * bb,
            x.a * y.b + x.b * y.a + Int(F.trace_theta) * bb};
}

Int qi_norm(const FieldContext& F, const QuadInt& x) {
    return x.a * x.a + Int(F.trace_theta) * x.a * x.b + Int(F.norm_theta) * x.b * x.b;
}

Int qi_trace(const FieldContext& F, const QuadInt& x) {
    return 2 * x.a + Int(F.trace_theta) * x.b;
}

// Rewrite x = u + v*theta as (A + B*sqrt(d))/C with C > 0.
static std::tuple<Int, Int, Int> sqrt_coords(const FieldContext& F, const QuadRat& x) {
    Rat p = x.u, q = x.v;  // x = p + q*sqrt(d) after absorbing theta
    if (F.theta_kind == ThetaKind::HalfPlusSqrt) {
        p = x.u + x.v / 2;
        q = x.v / 2;
    }
    Int dp = denominator(p), dq = denominator(q);
    Int g = gcd(dp, dq);
    Int C = dp / g * dq;
    return {numerator(p) * (C / dp), numerator(q) * (C / dq), C};
}

int qr_sign(const FieldContext& F, const QuadRat& x) {
    auto [A, B, C] = sqrt_coords(F, x);
    if (B == 0) return A == 0 ? 0 : (A > 0 ? 1 : -1);
    if (A == 0) return B > 0 ? 1 : -1;
    if (A > 0 && B > 0) return 1;
    if (A < 0 && B < 0) return -1;
    // Opposite signs: compare A^2 against B^2*d. Equality impossible
    // (d squarefree > 1), so the dominant term decides.
    Int a2 = A * A, b2d = B * B * F.d;
    if (A > 0) return a2 > b2d ? 1 : -1;
    return b2d > a2 ? 1 : -1;
}

Int exact_floor(const FieldContext& F, const QuadRat& x) {
    auto [A, B, C] = sqrt_coords(F, x);
    return floor_div(A + floor_mul_sqrt(B, F.d), C);
}

QuadRat frac_part(const FieldContext& F, const QuadRat& x, Interval interval) {
    Int n = exact_floor(F, x);
    QuadRat y = qr_sub(x, qr_from(Rat(n)));
    if (interval == Interval::HalfOpenRight && y.u == 0 && y.v == 0) return qr_from(Rat(1));
    return y;
}

// --- fundamental unit via the continued fraction of theta --------------------

// Complete quotients (P_k + sqrt(d)) / Q_k; convergents h_k / k_k.  The
// element h - k*conj(theta) = (h - k*T) + k*theta is a unit exactly when
// h^2 - T*h*k + N*k^2 = +-1; the first such convergent is the fundamental
// unit > 1.
static QuadInt fundamental_unit(long long d, ThetaKind kind, long long T, long long N,
                                long long max_steps) {
    Int P = (kind == ThetaKind::Sqrt) ? 0 : 1;
    Int Q = (kind == ThetaKind::Sqrt) ? 1 : 2;
    Int D(d);
    Int fsq = isqrt_floor(D);
    Int h_prev = 1, h_prev2 = 0;  // h_{-1}, h_{-2}
    Int k_prev = 0, k_prev2 = 1;
    for (long long step = 0; step < max_steps; ++step) {
        Int a = floor_div(P + fsq, Q);
        Int h = a * h_prev + h_prev2;
        Int k = a * k_prev + k_prev2;
        Int v = h * h - Int(T) * h * k + Int(N) * k * k;
        if (k > 0 && (v == 1 || v == -1)) return QuadInt{h - Int(T) * k, k};
        h_prev2 = h_prev; h_prev = h;
        k_prev2 = k_prev; k_prev = k;
        P = a * Q - P;
        Q = (D - P * P) / Q;
    }
    throw Error(Errc::SearchExhausted, "fundamental unit: convergent cap exceeded");
}

// --- class number one certificate --------------------------------------------

// Primes q with a split or ramified factorization need an element of norm
// +-q; inert primes are principal for free. Search box derived from the
// totally positive unit: a generator can be unit-normalized into
// |alpha|, |conj(alpha)| <= sqrt(q * eps), so coordinates are bounded by
// ~2*sqrt(q * Tr(eps)).
static bool prime_has_norm_element(const FieldContext& F, long long q, long long cap) {
    Int bound = 2 * isqrt_floor(Int(q) * F.trace_eps) + 2;
    if (bound > cap)
        throw Error(Errc::SearchExhausted, "verify_h1: principality search bound exceeds cap");
    long long B = to_ll(bound);
    for (long long y = 0; y <= B; ++y) {
        for (long long x = -B; x <= B; ++x) {
            Int n = qi_norm(F, QuadInt{x, y});
            if (n == q || n == -q) return true;
        }
    }
    return false;
}

bool verify_h1(const FieldContext& F) {
    // Primes q <= sqrt(disc)/2, i.e. 4q^2 < disc (disc is never a square).
    for (long long q = 2; Int(4) * q * q < F.disc; ++q) {
        if (!is_prime_ll(q)) continue;
        if (kronecker_prime(F.disc, q) == -1) continue;  // inert: (q) is prime
        if (!prime_has_norm_element(F, q, F.options.principal_search_cap)) return false;
    }
    return true;
}

FieldContext make_field(long long d, const FieldOptions& options) {
    if (d < 2) throw Error(Errc::DTooSmall, "d must be >= 2");
    if (!is_squarefree_ll(d)) throw Error(Errc::NotSquarefree, "d must be squarefree");

    FieldContext F;
    F.d = d;
    F.options = options;
    if (d % 4 == 1) {
        F.theta_kind = ThetaKind::HalfPlusSqrt;
        F.trace_theta = 1;
        F.norm_theta = (1 - d) / 4;
        F.disc = d;
    } else {
        // The d = 2 mod 4 case also has ring Z[sqrt(d)].
        F.theta_kind = ThetaKind::Sqrt;
        F.trace_theta = 0;
        F.norm_theta = -d;
        F.disc = 4 * Int(d);
    }

    F.eps_fund = fundamental_unit(d, F.theta_kind, F.trace_theta, F.norm_theta,
                                  options.unit_max_convergents);
    Int nf = qi_norm(F, F.eps_fund);
    F.eps = (nf == -1) ? qi_mul(F, F.eps_fund, F.eps_fund) : F.eps_fund;
    F.trace_eps = qi_trace(F, F.eps);

    if (qi_norm(F, F.eps) != 1 || F.eps.a < 1 || F.eps.b < 1)
        throw Error(Errc::InternalInconsistency, "totally positive unit has unexpected shape");
    // ceil(eps) = Tr(eps), equivalently floor(eps) = Tr(eps) - 1.
    if (exact_floor(F, qr_from(F.eps)) != F.trace_eps - 1)
        throw Error(Errc::InternalInconsistency, "floor(eps) != Tr(eps) - 1");

    F.h1_verified = verify_h1(F);
    return F;
}

const char* reason_code_name(ReasonCode c) {
    switch (c) {
        case ReasonCode::NotPrime: return "NOT_PRIME";
        case ReasonCode::PLt7: return "P_LT_7";
        case ReasonCode::PNot3Mod4: return "P_NOT_3_MOD_4";
        case ReasonCode::DNotInert: return "D_NOT_INERT";
        case ReasonCode::DNotSquarefree: return "D_NOT_SQUAREFREE";
        case ReasonCode::HfNotOne: return "HF_NOT_ONE";
    }
    return "UNKNOWN";
}

EligibilityReport eligibility(const FieldContext& F, long long p) {
    EligibilityReport rep;
    bool prime = is_prime_ll(p);
    if (!prime) rep.failures.push_back(ReasonCode::NotPrime);
    if (p < 7) rep.failures.push_back(ReasonCode::PLt7);
    if (((p % 4) + 4) % 4 != 3) rep.failures.push_back(ReasonCode::PNot3Mod4);
    if (prime && p >= 3 && legendre_symbol(F.d % p, p) != -1)
        rep.failures.push_back(ReasonCode::DNotInert);
    if (!F.h1_verified) rep.failures.push_back(ReasonCode::HfNotOne);
    rep.eligible = rep.failures.empty();
    return rep;
}

}  // namespace shintani
