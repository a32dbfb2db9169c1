#pragma once

#include "bupoly/omega.hpp"

namespace bupoly {

enum class BupKind { not_bup, trivial_bup, indecomposable_bup };

/// Classification result. The decomposition is present exactly for the
/// trivial kind: pairwise coprime bi-unitary perfect parts, at least two,
/// each indecomposable, with product equal to the input.
struct BupClass {
    BupKind kind = BupKind::not_bup;
    std::vector<SplittingPoly> decomposition;
};

/// True iff the divisor sum of A equals A. A must be nonconstant.
bool is_perfect(const SplittingPoly& a);

/// True iff the bi-unitary divisor sum of A equals A. Over quadratic
/// contexts this compares, root by root, the multiplicity of (x-gamma) in
/// the divisor sum against the exponent of gamma, rejecting early when some
/// exponent is outside the split class; over prime fields it falls back to
/// the expanded comparison.
bool is_bup(const SplittingPoly& a);

/// Expanded-polynomial route: sigma**(expand(A)) == expand(A). Used as the
/// second entry of the double-entry check.
bool is_bup_direct(const SplittingPoly& a);

BupClass classify_bup(const SplittingPoly& a);

/// A(x + t): the exponent of gamma becomes the exponent of gamma - t.
SplittingPoly translate(const SplittingPoly& a, const FieldElem& t);

/// Membership in the two-root catalog over F_4: x^r(x+1)^r or
/// (x+alpha)^r(x+alpha+1)^r with r = 2 or r = 2^n - 1. False over any other
/// context.
bool is_sigma_member(const SplittingPoly& a);

}  // namespace bupoly
