#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace shintani {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Error codes mirrored by the CLI exit paths and asserted in tests.
enum class Errc {
    NotSquarefree,
    DTooSmall,
    SearchExhausted,
    ZeroElement,
    MOutOfRange,
    LOutOfRange,
    MaxDigitsExceeded,
    NonIntegralResult,
    InternalInconsistency,
    InvalidArgument,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

inline Rat make_rat(Int num, Int den) {
    if (den == 0) throw Error(Errc::InvalidArgument, "zero denominator");
    if (den < 0) { num = -num; den = -den; }
    return Rat(num, den);
}

/// Floor division a/b for b > 0 (cpp_int's operator/ truncates toward zero).
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if (a % b != 0 && (a < 0) != (b < 0)) --q;
    return q;
}

inline Int floor_rat(const Rat& q) {
    return floor_div(numerator(q), denominator(q));
}

/// Fractional part in [0,1).
inline Rat frac_left(const Rat& q) {
    return q - Rat(floor_rat(q));
}

/// Fractional part in (0,1]: the unique y in (0,1] with q - y integral.
inline Rat frac_right(const Rat& q) {
    Rat f = frac_left(q);
    return f == 0 ? Rat(1) : f;
}

/// Floor of sqrt(n) for n >= 0.
inline Int isqrt_floor(const Int& n) {
    if (n < 0) throw Error(Errc::InvalidArgument, "isqrt of negative");
    return boost::multiprecision::sqrt(n);
}

inline bool is_perfect_square(const Int& n, Int* root = nullptr) {
    if (n < 0) return false;
    Int r = isqrt_floor(n);
    if (r * r != n) return false;
    if (root) *root = r;
    return true;
}

/// Floor of b*sqrt(d) for squarefree d > 1 (exact: b*sqrt(d) is never an
/// integer unless b = 0).
inline Int floor_mul_sqrt(const Int& b, const Int& d) {
    if (b == 0) return 0;
    Int r = isqrt_floor(b * b * d);
    return b > 0 ? r : -r - 1;
}

inline long long to_ll(const Int& n) {
    if (n > (std::numeric_limits<long long>::max)() || n < (std::numeric_limits<long long>::min)())
        throw Error(Errc::InvalidArgument, "value out of long long range");
    return n.convert_to<long long>();
}

/// Serialize exactly: "num" when integral, else "num/den". Never floats.
inline std::string rat_str(const Rat& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

/// Parse "num" or "num/den"; throws InvalidArgument on malformed input.
Rat parse_rat(const std::string& s);

}  // namespace shintani
