#pragma once

#include "shintani/field.hpp"

#include <vector>

namespace shintani {

/// x + y*theta + pO_F with residues in [0, p).
struct ResidueElem {
    long long x = 0;
    long long y = 0;
    bool operator==(const ResidueElem&) const = default;
    bool is_zero() const { return x == 0 && y == 0; }
};

struct Generator {
    long long a = 0;       // lift a + b*theta, 0 <= a,b < p
    long long b = 0;       // b >= 1 (an element of F_p alone can never generate)
    ResidueElem rho;
    long long order = 0;   // always p^2 - 1
};

/// Arithmetic in O_F/pO_F, a field isomorphic to F_{p^2} when p is inert.
/// Pure value semantics; the context only caches p, the reductions of T, N,
/// and the prime factorization of p^2 - 1.
class ResidueField {
public:
    ResidueField(const FieldContext& F, long long p);

    const FieldContext& field() const { return *F_; }
    long long p() const { return p_; }
    long long group_order() const { return group_order_; }  // p^2 - 1
    const std::vector<long long>& group_order_primes() const { return primes_; }

    ResidueElem make(const Int& x, const Int& y) const;
    ResidueElem zero() const { return {0, 0}; }
    ResidueElem one() const { return {1, 0}; }

    ResidueElem add(const ResidueElem& a, const ResidueElem& b) const;
    ResidueElem mul(const ResidueElem& a, const ResidueElem& b) const;
    ResidueElem pow(ResidueElem base, long long e) const;

    /// Exact multiplicative order from the factorization of p^2 - 1.
    long long element_order(const ResidueElem& x) const;  // ZERO_ELEMENT on 0

    /// True iff x = rho^m with m even, i.e. x^((p^2-1)/2) = 1.
    bool is_square(const ResidueElem& x) const;  // ZERO_ELEMENT on 0

    /// Deterministic: lexicographically smallest (a, b) with b >= 1 whose
    /// order is p^2 - 1, so runs are reproducible.
    Generator find_generator() const;

    /// Validates a pinned lift (a, b): must have full order.
    Generator generator_from_lift(long long a, long long b) const;

private:
    const FieldContext* F_;
    long long p_;
    long long Tp_, Np_;            // T mod p, -N mod p kept as reductions
    long long group_order_;
    std::vector<long long> primes_;  // distinct prime factors of p^2 - 1
};

}  // namespace shintani
