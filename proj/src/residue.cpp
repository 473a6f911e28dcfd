#include "shintani/residue.hpp"

namespace shintani {

ResidueField::ResidueField(const FieldContext& F, long long p) : F_(&F), p_(p) {
    if (!is_prime_ll(p)) throw Error(Errc::InvalidArgument, "p must be prime");
    if (p >= 3 && legendre_symbol(F.d % p, p) != -1)
        throw Error(Errc::InvalidArgument, "p must be inert in F: O_F/pO_F is not a field otherwise");
    Tp_ = ((F.trace_theta % p) + p) % p;
    Np_ = ((F.norm_theta % p) + p) % p;
    group_order_ = p * p - 1;
    long long n = group_order_;
    for (long long q = 2; q * q <= n; ++q) {
        if (n % q == 0) {
            primes_.push_back(q);
            while (n % q == 0) n /= q;
        }
    }
    if (n > 1) primes_.push_back(n);
}

ResidueElem ResidueField::make(const Int& x, const Int& y) const {
    Int px(p_);
    return {to_ll(((x % px) + px) % px), to_ll(((y % px) + px) % px)};
}

ResidueElem ResidueField::add(const ResidueElem& a, const ResidueElem& b) const {
    return {(a.x + b.x) % p_, (a.y + b.y) % p_};
}

ResidueElem ResidueField::mul(const ResidueElem& a, const ResidueElem& b) const {
    // (x1 + y1*th)(x2 + y2*th) with th^2 = T*th - N
    __int128 yy = static_cast<__int128>(a.y) * b.y % p_;
    __int128 x = (static_cast<__int128>(a.x) * b.x + (p_ - Np_) * yy) % p_;
    __int128 y = (static_cast<__int128>(a.x) * b.y + static_cast<__int128>(a.y) * b.x +
                  static_cast<__int128>(Tp_) * yy) % p_;
    return {static_cast<long long>(x), static_cast<long long>(y)};
}

ResidueElem ResidueField::pow(ResidueElem base, long long e) const {
    ResidueElem acc = one();
    while (e > 0) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

long long ResidueField::element_order(const ResidueElem& x) const {
    if (x.is_zero()) throw Error(Errc::ZeroElement, "order of zero element");
    long long order = group_order_;
    for (long long q : primes_) {
        while (order % q == 0 && pow(x, order / q) == one()) order /= q;
    }
    return order;
}

bool ResidueField::is_square(const ResidueElem& x) const {
    if (x.is_zero()) throw Error(Errc::ZeroElement, "square test of zero element");
    return pow(x, group_order_ / 2) == one();
}

Generator ResidueField::find_generator() const {
    for (long long a = 0; a < p_; ++a) {
        for (long long b = 1; b < p_; ++b) {
            ResidueElem cand{a, b};
            bool full = true;
            for (long long q : primes_) {
                if (pow(cand, group_order_ / q) == one()) { full = false; break; }
            }
            if (full) return Generator{a, b, cand, group_order_};
        }
    }
    // Unreachable for an inert prime: F_{p^2}^x is cyclic and generators
    // outside F_p^x exist.
    throw Error(Errc::InternalInconsistency, "no generator found");
}

Generator ResidueField::generator_from_lift(long long a, long long b) const {
    if (a < 0 || a >= p_ || b < 1 || b >= p_)
        throw Error(Errc::InvalidArgument, "generator lift must satisfy 0 <= a < p, 1 <= b < p");
    ResidueElem cand{a, b};
    if (element_order(cand) != group_order_)
        throw Error(Errc::InvalidArgument, "pinned element does not generate F_{p^2}^x");
    return Generator{a, b, cand, group_order_};
}

}  // namespace shintani
