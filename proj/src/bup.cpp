#include "bupoly/bup.hpp"

namespace bupoly {

namespace {

void require_nonconstant(const SplittingPoly& a, const char* what) {
    if (a.exps.empty())
        throw std::invalid_argument(std::string(what) + ": nonconstant polynomial required");
}

SplittingPoly restrict_to(const SplittingPoly& a, unsigned mask,
                          const std::vector<FieldElem>& support) {
    SplittingPoly part(a.ctx);
    for (size_t i = 0; i < support.size(); ++i)
        if (mask & (1u << i)) part.add(support[i], a.exponent(support[i]));
    return part;
}

}  // namespace

bool is_perfect(const SplittingPoly& a) {
    require_nonconstant(a, "is_perfect");
    return sigma_map(FactoredPoly::from(a), DivisorSum::sigma) == a.expand();
}

bool is_bup_direct(const SplittingPoly& a) {
    require_nonconstant(a, "is_bup_direct");
    return sigma_map(FactoredPoly::from(a), DivisorSum::sigma_star2) == a.expand();
}

bool is_bup(const SplittingPoly& a) {
    require_nonconstant(a, "is_bup");
    if (!a.ctx.quadratic) return is_bup_direct(a);
    // a splitting fixed point needs every per-root divisor sum to split
    for (const auto& [root, e] : a.exps)
        if (!exponent_splits(a.ctx, e)) return false;
    SplittingPoly total(a.ctx);
    for (const auto& [root, e] : a.exps)
        for (const auto& [r, m] : sigma_star2_roots(a.ctx, root, e).exps) total.add(r, m);
    return total == a;
}

BupClass classify_bup(const SplittingPoly& a) {
    require_nonconstant(a, "classify_bup");
    BupClass out;
    if (!is_bup(a)) return out;
    std::vector<FieldElem> support;
    for (const auto& [root, e] : a.exps) support.push_back(root);
    if (support.size() > 25)
        throw std::invalid_argument("classify_bup: support too large to refine");

    // Peel off a minimal bi-unitary perfect part anchored at the first
    // remaining root; its cofactor is again b.u.p. because the two parts are
    // coprime, so recursion terminates with an indecomposable list.
    SplittingPoly rest = a;
    for (;;) {
        std::vector<FieldElem> sup;
        for (const auto& [root, e] : rest.exps) sup.push_back(root);
        const size_t n = sup.size();
        if (n == 1) {
            out.decomposition.push_back(rest);
            break;
        }
        unsigned found = 0;
        const unsigned full = (1u << n) - 1;
        for (size_t size = 1; size < n && !found; ++size) {
            for (unsigned mask = 1; mask < full; mask += 2) {  // always contains sup[0]
                if (static_cast<size_t>(__builtin_popcount(mask)) != size) continue;
                if (is_bup(restrict_to(rest, mask, sup))) {
                    found = mask;
                    break;
                }
            }
        }
        if (!found) {
            out.decomposition.push_back(rest);
            break;
        }
        out.decomposition.push_back(restrict_to(rest, found, sup));
        rest = restrict_to(rest, full & ~found, sup);
    }
    out.kind = out.decomposition.size() >= 2 ? BupKind::trivial_bup : BupKind::indecomposable_bup;
    if (out.kind != BupKind::trivial_bup) out.decomposition.clear();
    return out;
}

SplittingPoly translate(const SplittingPoly& a, const FieldElem& t) {
    if (!(t.ctx() == a.ctx))
        throw std::invalid_argument("translate: shift from a different field context");
    SplittingPoly out(a.ctx);
    for (const auto& [root, e] : a.exps) out.add(root - t, e);
    return out;
}

bool is_sigma_member(const SplittingPoly& a) {
    if (!(a.ctx.quadratic && a.ctx.p == 2)) return false;
    if (a.exps.size() != 2) return false;
    const auto first = a.exps.begin();
    const auto second = std::next(first);
    if (first->second != second->second) return false;
    const int r = first->second;
    bool admissible = (r == 2);
    for (long long t = 1; t <= r + 1 && !admissible; t *= 2) admissible = (t - 1 == r);
    if (!admissible) return false;
    const FieldElem zero = a.ctx.zero(), one = a.ctx.one(), al = a.ctx.alpha();
    return (first->first == zero && second->first == one) ||
           (first->first == al && second->first == al + one);
}

}  // namespace bupoly
