#pragma once

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bupoly/poly.hpp"

namespace bupoly {

/// Raised when a brute-force enumeration would exceed its degree cap.
struct cap_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Canonical form of a product of linear factors: a map from roots gamma to
/// exponents e >= 1. Absent roots have exponent 0.
struct SplittingPoly {
    FieldCtx ctx;
    std::map<FieldElem, int, ValueLess> exps;

    explicit SplittingPoly(const FieldCtx& c) : ctx(c) {}

    /// Adds e to the exponent of root; entries reaching 0 are dropped.
    void add(const FieldElem& root, int e);
    int exponent(const FieldElem& root) const;

    int degree() const;  // sum of exponents
    int omega() const { return static_cast<int>(exps.size()); }
    bool all_odd() const;

    /// The monic product of (x - gamma)^e over all entries.
    Poly expand() const;

    /// Canonical form of a splitting monic polynomial; throws
    /// std::invalid_argument if P is not monic or does not split.
    static SplittingPoly from_poly(const Poly& p);

    friend bool operator==(const SplittingPoly& a, const SplittingPoly& b);
    friend bool operator!=(const SplittingPoly& a, const SplittingPoly& b) { return !(a == b); }
};

/// A polynomial given as a product of powers of pairwise-distinct monic
/// irreducible bases. Irreducibility of the bases is a caller contract.
struct FactoredPoly {
    FieldCtx ctx;
    std::vector<std::pair<Poly, int>> factors;

    explicit FactoredPoly(const FieldCtx& c) : ctx(c) {}

    void push(const Poly& base, int e);
    Poly expand() const;
    int degree() const;
    bool is_one() const { return factors.empty(); }

    static FactoredPoly from(const SplittingPoly& s);
};

enum class DivisorSum { sigma, sigma_star, sigma_star2 };

/// 1 + T + ... + T^a for irreducible T.
Poly sigma_pp(const Poly& base, int a);

/// Sum of bi-unitary divisors of T^a:
///   a = 2n   -> (1 + T^(n+1)) * sigma(T^(n-1))
///   a = 2n+1 -> sigma(T^(2n+1))
///   a = 0    -> 1
Poly sigma_star2_pp(const Poly& base, int a);

/// Multiplicative extension over a factored input. sigma* of P^a is 1 + P^a.
Poly sigma_map(const FactoredPoly& f, DivisorSum which);

/// Greatest common unitary divisor. For prime powers of one base the unitary
/// divisors are exactly 1 and the power itself, so common bases contribute
/// iff their exponents match.
FactoredPoly gcd_u(const FactoredPoly& a, const FactoredPoly& b);

/// Brute-force sum of bi-unitary divisors: enumerates every exponent tuple
/// 0 <= d_i <= e_i, keeps divisors D with gcd_u(D, S/D) = 1 and sums their
/// expansions. Independent oracle for sigma_star2_pp / sigma_map; throws
/// cap_error when the total degree exceeds degree_cap.
Poly brute_sigma_star2(const FactoredPoly& s, int degree_cap = 64);

}  // namespace bupoly
