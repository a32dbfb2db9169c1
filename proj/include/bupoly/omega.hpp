#pragma once

#include <set>
#include <vector>

#include "bupoly/divfun.hpp"

namespace bupoly {

/// The half-exponent sets for which the bi-unitary divisor sum of an even
/// prime power splits over F_{p^2} (p an odd prime):
///   omega1 = { N : N and 2N+2 both divide p^2-1 }
///   omega2 = { pN : N and 2pN+2 both divide p^2-1 }         (stored as pN)
///   omega3 = { N : N | p^2-1, 2N+2 = M*p,   M | p^2-1 }
///   omega4 = { N : N | p^2-1, 2N+2 = M*p^2, M | p^2-1 }
/// omega2..4 are enumerated from these raw definitions; construction checks
/// that they come out as {p}, {p-1} and {p^2-1}.
struct OmegaSets {
    int p = 3;
    std::set<int> omega1, omega2, omega3, omega4;
    std::set<int> all;

    bool contains(int k) const { return all.count(k) > 0; }
};

/// Builds the omega sets for an odd prime p; p = 2 is rejected (F_4 has its
/// own split classifier).
OmegaSets omega_sets(int p);

enum class SplitClass { splits, non_split };

/// Splitting of the bi-unitary divisor sum of x^e over F_4:
/// odd e splits iff e = N*2^n - 1 with N in {1,3}; even e iff e in {0,2,4,6}.
SplitClass split_class_f4(long long e);

/// Same over F_{p^2} for odd p: odd e splits iff e = N*p^n - 1 with
/// N | p^2-1; even e = 2k splits iff k is in the omega union.
SplitClass split_class_gen(long long e, int p);

/// Dispatch on the context (quadratic contexts only).
bool exponent_splits(const FieldCtx& ctx, long long e);

/// zetas: the N-th roots of 1 distinct from 1 (requires N | q-1);
/// betas: the (N+1)-th roots of -1 (requires 2N+2 | q-1, all distinct).
struct RootSets {
    std::vector<FieldElem> zetas;
    std::vector<FieldElem> betas;
};

std::vector<FieldElem> unit_roots_except_one(const FieldCtx& ctx, int n);
std::vector<FieldElem> minus_one_roots(const FieldCtx& ctx, int n);
RootSets root_sets(const FieldCtx& ctx, int n);

/// Root-multiplicity vector of the bi-unitary divisor sum of (x-gamma)^e,
/// for e in the split class (throws otherwise). Over F_4 and for even e over
/// F_{p^2} this uses the closed forms; odd exponents over odd p expand
/// sigma((x-gamma)^e) and extract roots. Total multiplicity equals e.
SplittingPoly sigma_star2_roots(const FieldCtx& ctx, const FieldElem& gamma, int e);

/// Root-multiplicity vector of sigma((x-gamma)^e) over F_4, defined when
/// e+1 = N*2^n with N in {1,3} (throws otherwise).
SplittingPoly sigma_roots_f4(const FieldCtx& ctx, const FieldElem& gamma, int e);

/// All delta (with multiplicity) such that (x-gamma) divides the bi-unitary
/// divisor sum of (x-delta)^e, for even split e = 2m over odd p: the
/// (m-1 or p-1 or ...)-tuple of sigma-contributions followed by the
/// beta/constant tuple. The length is exactly e.
std::vector<FieldElem> contributing_shifts(const FieldCtx& ctx, const FieldElem& gamma, int e);

}  // namespace bupoly
