#include "bupoly/omega.hpp"

#include <string>

namespace bupoly {

namespace {

std::vector<int> divisors(int n) {
    std::vector<int> out;
    for (int d = 1; d <= n; ++d)
        if (n % d == 0) out.push_back(d);
    return out;
}

[[noreturn]] void non_split(int e) {
    throw std::invalid_argument("sigma_star2_roots: exponent " + std::to_string(e) +
                                " is not in the split class");
}

void require_quadratic(const FieldCtx& ctx, const char* what) {
    if (!ctx.quadratic)
        throw std::invalid_argument(std::string(what) + ": quadratic context required");
}

}  // namespace

OmegaSets omega_sets(int p) {
    if (p == 2)
        throw std::invalid_argument("omega_sets: p = 2 has its own split classifier");
    if (!is_prime(p)) throw std::invalid_argument("omega_sets: p must be an odd prime");
    OmegaSets o;
    o.p = p;
    const int n = p * p - 1;
    for (int d : divisors(n)) {
        if (n % (2 * d + 2) == 0) o.omega1.insert(d);
        if (n % (2 * p * d + 2) == 0) o.omega2.insert(p * d);
        const int m3 = 2 * d + 2;
        if (m3 % p == 0 && n % (m3 / p) == 0) o.omega3.insert(d);
        if (m3 % (p * p) == 0 && n % (m3 / (p * p)) == 0) o.omega4.insert(d);
    }
    if (o.omega2 != std::set<int>{p} || o.omega3 != std::set<int>{p - 1} ||
        o.omega4 != std::set<int>{n})
        throw std::logic_error("omega_sets: raw enumeration disagrees with {p},{p-1},{p^2-1}");
    for (const auto* s : {&o.omega1, &o.omega2, &o.omega3, &o.omega4})
        o.all.insert(s->begin(), s->end());
    return o;
}

SplitClass split_class_f4(long long e) {
    if (e < 0) throw std::invalid_argument("split_class_f4: negative exponent");
    if (e % 2 == 0) return (e <= 6) ? SplitClass::splits : SplitClass::non_split;
    long long m = e + 1;
    while (m % 2 == 0) m /= 2;
    return (m == 1 || m == 3) ? SplitClass::splits : SplitClass::non_split;
}

SplitClass split_class_gen(long long e, int p) {
    if (e < 0) throw std::invalid_argument("split_class_gen: negative exponent");
    if (e == 0) return SplitClass::splits;
    if (e % 2 == 0) {
        const long long k = e / 2;
        const OmegaSets o = omega_sets(p);
        return (k <= p * p - 1 && o.contains(static_cast<int>(k))) ? SplitClass::splits
                                                                   : SplitClass::non_split;
    }
    long long m = e + 1;
    while (m % p == 0) m /= p;
    return ((p * p - 1) % m == 0) ? SplitClass::splits : SplitClass::non_split;
}

bool exponent_splits(const FieldCtx& ctx, long long e) {
    require_quadratic(ctx, "exponent_splits");
    const SplitClass sc = (ctx.p == 2) ? split_class_f4(e) : split_class_gen(e, ctx.p);
    return sc == SplitClass::splits;
}

std::vector<FieldElem> unit_roots_except_one(const FieldCtx& ctx, int n) {
    if (n < 1 || (ctx.q() - 1) % n != 0)
        throw std::invalid_argument("unit_roots_except_one: N must divide q-1");
    std::vector<FieldElem> out;
    for (const auto& z : enumerate(ctx)) {
        if (z.is_zero() || z.is_one()) continue;
        if (z.pow(n).is_one()) out.push_back(z);
    }
    if (static_cast<int>(out.size()) != n - 1)
        throw std::logic_error("unit_roots_except_one: unexpected root count");
    return out;
}

std::vector<FieldElem> minus_one_roots(const FieldCtx& ctx, int n) {
    if (n < 1 || (ctx.q() - 1) % (2 * n) != 0)
        throw std::invalid_argument("minus_one_roots: 2N must divide q-1");
    const FieldElem minus_one = -ctx.one();
    std::vector<FieldElem> out;
    for (const auto& z : enumerate(ctx))
        if (!z.is_zero() && z.pow(n) == minus_one) out.push_back(z);
    if (static_cast<int>(out.size()) != n)
        throw std::logic_error("minus_one_roots: unexpected root count");
    return out;
}

RootSets root_sets(const FieldCtx& ctx, int n) {
    return {unit_roots_except_one(ctx, n), minus_one_roots(ctx, n + 1)};
}

namespace {

/// Closed forms over F_4, both parities.
SplittingPoly star2_roots_f4(const FieldCtx& ctx, const FieldElem& gamma, int e) {
    SplittingPoly out(ctx);
    const FieldElem one = ctx.one();
    const FieldElem al = ctx.alpha();
    if (e == 0) return out;
    if (e % 2 == 1) {
        long long m = e + 1;
        int pow2 = 1;
        while (m % 2 == 0) {
            m /= 2;
            pow2 *= 2;
        }
        if (m == 1) {
            out.add(gamma + one, e);  // (T+1)^(2^n - 1)
        } else if (m == 3) {
            out.add(gamma + one, pow2 - 1);
            out.add(gamma + al, pow2);
            out.add(gamma + al + one, pow2);
        } else {
            non_split(e);
        }
        return out;
    }
    switch (e) {
        case 2:
            out.add(gamma + one, 2);
            break;
        case 4:
            out.add(gamma + one, 2);
            out.add(gamma + al, 1);
            out.add(gamma + al + one, 1);
            break;
        case 6:
            out.add(gamma + one, 4);
            out.add(gamma + al, 1);
            out.add(gamma + al + one, 1);
            break;
        default:
            non_split(e);
    }
    return out;
}

/// Closed forms for even exponents over F_{p^2}, odd p. The four omega cases
/// are disjoint, so k = e/2 picks exactly one.
SplittingPoly star2_roots_even_gen(const FieldCtx& ctx, const FieldElem& gamma, int e) {
    SplittingPoly out(ctx);
    const int p = ctx.p;
    const int q = ctx.q();
    const int k = e / 2;
    const FieldElem one = ctx.one();
    const OmegaSets o = omega_sets(p);
    if (k == p) {
        // product of (T - beta) over the (p+1)-th roots of -1, times (T-1)^(p-1)
        for (const auto& b : minus_one_roots(ctx, p + 1)) out.add(gamma + b, 1);
        out.add(gamma + one, p - 1);
    } else if (k == p - 1) {
        // (T+1)^(p+1) times product of (T - l), l = 2..p-2
        out.add(gamma - one, p + 1);
        for (int l = 2; l <= p - 2; ++l) out.add(gamma + ctx.elem(l), 1);
    } else if (k == q - 1) {
        // (T+1)^(q+1) times product of (T - l) over l in F_q* minus {1,-1}
        out.add(gamma - one, q + 1);
        for (const auto& l : enumerate(ctx)) {
            if (l.is_zero() || l.is_one() || l == -one) continue;
            out.add(gamma + l, 1);
        }
    } else if (o.omega1.count(k)) {
        const RootSets rs = root_sets(ctx, k);
        for (const auto& b : rs.betas) out.add(gamma + b, 1);
        for (const auto& z : rs.zetas) out.add(gamma + z, 1);
    } else {
        non_split(e);
    }
    return out;
}

}  // namespace

SplittingPoly sigma_star2_roots(const FieldCtx& ctx, const FieldElem& gamma, int e) {
    require_quadratic(ctx, "sigma_star2_roots");
    if (e < 0) throw std::invalid_argument("sigma_star2_roots: negative exponent");
    if (ctx.p == 2) return star2_roots_f4(ctx, gamma, e);
    if (e == 0) return SplittingPoly(ctx);
    if (e % 2 == 0) return star2_roots_even_gen(ctx, gamma, e);
    // odd exponent: sigma** = sigma; expand and extract roots
    if (split_class_gen(e, ctx.p) != SplitClass::splits) non_split(e);
    const Poly s = sigma_pp(Poly::x_minus(gamma), e);
    SplittingPoly out = SplittingPoly::from_poly(s);
    if (out.degree() != e) throw std::logic_error("sigma_star2_roots: multiplicity total mismatch");
    return out;
}

SplittingPoly sigma_roots_f4(const FieldCtx& ctx, const FieldElem& gamma, int e) {
    require_quadratic(ctx, "sigma_roots_f4");
    if (ctx.p != 2) throw std::invalid_argument("sigma_roots_f4: F_4 context required");
    if (e < 0) throw std::invalid_argument("sigma_roots_f4: negative exponent");
    SplittingPoly out(ctx);
    if (e == 0) return out;
    long long m = e + 1;
    int pow2 = 1;
    while (m % 2 == 0) {
        m /= 2;
        pow2 *= 2;
    }
    if (m == 1) {
        out.add(gamma + ctx.one(), e);
    } else if (m == 3) {
        out.add(gamma + ctx.one(), pow2 - 1);
        out.add(gamma + ctx.alpha(), pow2);
        out.add(gamma + ctx.alpha() + ctx.one(), pow2);
    } else {
        throw std::invalid_argument("sigma_roots_f4: sigma(x^" + std::to_string(e) +
                                    ") does not split");
    }
    return out;
}

std::vector<FieldElem> contributing_shifts(const FieldCtx& ctx, const FieldElem& gamma, int e) {
    require_quadratic(ctx, "contributing_shifts");
    if (ctx.p == 2)
        throw std::invalid_argument("contributing_shifts: odd-characteristic context required");
    if (e <= 0 || e % 2 != 0)
        throw std::invalid_argument("contributing_shifts: even positive exponent required");
    const int p = ctx.p;
    const int q = ctx.q();
    const int m = e / 2;
    const FieldElem one = ctx.one();
    const OmegaSets o = omega_sets(p);
    std::vector<FieldElem> out;
    if (m == p) {
        for (int i = 0; i < p - 1; ++i) out.push_back(gamma - one);
        for (const auto& b : minus_one_roots(ctx, p + 1)) out.push_back(gamma - b);
    } else if (m == p - 1) {
        for (int l = 2; l <= p - 1; ++l) out.push_back(gamma - ctx.elem(l));
        for (int i = 0; i < p; ++i) out.push_back(gamma + one);
    } else if (m == q - 1) {
        for (const auto& z : unit_roots_except_one(ctx, q - 1)) out.push_back(gamma - z);
        for (int i = 0; i < q; ++i) out.push_back(gamma + one);
    } else if (o.omega1.count(m)) {
        const RootSets rs = root_sets(ctx, m);
        for (const auto& z : rs.zetas) out.push_back(gamma - z);
        for (const auto& b : rs.betas) out.push_back(gamma - b);
    } else {
        throw std::invalid_argument("contributing_shifts: e/2 is not in the omega union");
    }
    if (static_cast<int>(out.size()) != e)
        throw std::logic_error("contributing_shifts: tuple length mismatch");
    return out;
}

}  // namespace bupoly
