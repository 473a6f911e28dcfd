#include "shintani/eps_expansion.hpp"

#include "shintani/residue.hpp"

#include <map>
#include <sstream>
#include <utility>

namespace shintani {

namespace {

// The greedy digit rule emits floor(eps * state) from states in [0,1), so
// every digit is at most ceil(eps) - 1 = Tr(eps) - 1.
void check_digit(const FieldContext& F, const Int& a) {
    if (a < 0 || a >= F.trace_eps)
        throw Error(Errc::InternalInconsistency, "digit outside {0..Tr(eps)-1}");
}

void check_period_primitive(const std::vector<long long>& period, long long max_digit) {
    size_t L = period.size();
    if (L == 0) return;
    bool all_max = true;
    for (long long dgt : period)
        if (dgt != max_digit) { all_max = false; break; }
    if (all_max)
        throw Error(Errc::InternalInconsistency, "forbidden all-floor(eps) repeating tail");
    for (size_t q = 1; q < L; ++q) {
        if (L % q != 0) continue;
        bool repeats = true;
        for (size_t i = 0; i + q < L && repeats; ++i)
            if (period[i] != period[i + q]) repeats = false;
        if (repeats)
            throw Error(Errc::InternalInconsistency, "extracted period is not primitive");
    }
}

}  // namespace

EpsExpansion eps_expand(const FieldContext& F, const QuadRat& alpha, long long max_digits) {
    if (qr_sign(F, alpha) <= 0)
        throw Error(Errc::InvalidArgument, "eps_expand requires alpha > 0");

    if (max_digits <= 0) {
        // State-space bound for alpha in (1/p)O_F: denominators divide t*den.
        Int den = denominator(alpha.u) * (denominator(alpha.v) / gcd(denominator(alpha.u), denominator(alpha.v)));
        Int cap = 10 * F.t() * den * den;
        max_digits = cap > 100'000'000 ? 100'000'000 : to_ll(cap);
        if (max_digits < 64) max_digits = 64;
    }

    const QuadRat eps = qr_from(F.eps);
    const QuadRat eps_inv = qr_conj(F, eps);  // norm 1: the conjugate inverts eps

    EpsExpansion out;
    QuadRat rem = alpha;

    if (qr_sign(F, qr_sub(alpha, qr_from(Rat(1)))) >= 0) {  // alpha >= 1
        std::vector<QuadRat> powers{qr_from(Rat(1))};
        while (true) {
            QuadRat next = qr_mul(F, powers.back(), eps);
            if (qr_sign(F, qr_sub(alpha, next)) < 0) break;  // eps^(n+1) > alpha
            powers.push_back(next);
        }
        for (size_t i = powers.size(); i-- > 0;) {
            Int a = exact_floor(F, qr_div(F, rem, powers[i]));
            check_digit(F, a);
            out.integer_digits.push_back(to_ll(a));
            rem = qr_sub(rem, qr_mul(F, qr_from(Rat(a)), powers[i]));
        }
    }

    // Fractional digits: state s in [0,1), s -> eps*s - floor(eps*s).
    // States of elements of (1/p)O_F are finite (denominators are fixed and
    // the conjugate embedding contracts), so an exact repeat must occur.
    std::map<std::pair<Rat, Rat>, long long> seen;
    std::vector<long long> digits;
    QuadRat state = rem;
    while (true) {
        if (state.u == 0 && state.v == 0) {
            out.preperiod = std::move(digits);
            return out;  // finite expansion
        }
        auto key = std::make_pair(state.u, state.v);
        auto it = seen.find(key);
        if (it != seen.end()) {
            long long start = it->second;
            out.preperiod.assign(digits.begin(), digits.begin() + start);
            out.period.assign(digits.begin() + start, digits.end());
            check_period_primitive(out.period, to_ll(F.trace_eps - 1));
            return out;
        }
        if (static_cast<long long>(digits.size()) >= max_digits)
            throw Error(Errc::MaxDigitsExceeded, "no state repeat within max_digits");
        seen.emplace(key, static_cast<long long>(digits.size()));
        QuadRat scaled = qr_mul(F, eps, state);
        Int a = exact_floor(F, scaled);
        check_digit(F, a);
        digits.push_back(to_ll(a));
        state = qr_sub(scaled, qr_from(Rat(a)));
    }
}

long long period_length_of_inv_p(const FieldContext& F, long long p) {
    EpsExpansion e = eps_expand(F, qr_from(make_rat(1, p)));
    long long ell = static_cast<long long>(e.period.size());
    ResidueField rf(F, p);
    long long order = rf.element_order(rf.make(F.s(), F.t()));
    if (ell != order)
        throw Error(Errc::InternalInconsistency,
                    "period of 1/p disagrees with the order of eps mod p");
    return ell;
}

std::string render_expansion(const FieldContext& F, const EpsExpansion& e) {
    bool wide = F.trace_eps > 10;  // digits can exceed one character
    auto join = [&](const std::vector<long long>& v) {
        std::ostringstream os;
        for (size_t i = 0; i < v.size(); ++i) {
            if (wide && i > 0) os << ',';
            os << v[i];
        }
        return os.str();
    };
    std::string s = e.integer_digits.empty() ? "0" : join(e.integer_digits);
    if (!e.preperiod.empty() || !e.period.empty()) {
        s += ".";
        s += join(e.preperiod);
        if (!e.period.empty()) s += "(" + join(e.period) + ")";
    }
    return s;
}

}  // namespace shintani
