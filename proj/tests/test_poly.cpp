#include <doctest.h>

#include <random>

#include "bupoly/divfun.hpp"
#include "bupoly/poly.hpp"

using namespace bupoly;

namespace {

Poly random_poly(const FieldCtx& ctx, int max_deg, std::mt19937& rng) {
    const auto all = enumerate(ctx);
    std::uniform_int_distribution<size_t> pick(0, all.size() - 1);
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::vector<FieldElem> coeffs;
    const int d = deg(rng);
    for (int k = 0; k <= d; ++k) coeffs.push_back(all[pick(rng)]);
    return Poly(ctx, coeffs);
}

}  // namespace

TEST_CASE("ring arithmetic basics") {
    const FieldCtx f4 = build_field(2, true);
    const Poly x = Poly::x(f4);
    const Poly xp1 = x + Poly::one(f4);
    // (x+1)^2 = x^2 + 1 in characteristic 2
    CHECK(xp1 * xp1 == Poly(f4, {f4.one(), f4.zero(), f4.one()}));

    const FieldCtx f9 = build_field(3, true);
    const Poly left = Poly::x(f9) - Poly::one(f9);
    const Poly right = Poly::x(f9) + Poly::one(f9);
    CHECK(left * right == Poly(f9, {f9.elem(-1), f9.zero(), f9.one()}));
}

TEST_CASE("divrem examples and reconstruction") {
    const FieldCtx f4 = build_field(2, true);
    // x^2+x+1 = (x+alpha)(x+alpha+1)
    const Poly num(f4, {f4.one(), f4.one(), f4.one()});
    const Poly den(f4, {f4.alpha(), f4.one()});
    const auto [quo, rem] = Poly::divrem(num, den);
    CHECK(quo == Poly(f4, {f4.alpha() + f4.one(), f4.one()}));
    CHECK(rem.is_zero());

    std::mt19937 rng(7);
    for (const int p : {2, 3, 5}) {
        const FieldCtx ctx = build_field(p, true);
        for (int iter = 0; iter < 120; ++iter) {
            const Poly a = random_poly(ctx, 9, rng);
            Poly b = random_poly(ctx, 4, rng);
            if (b.is_zero()) b = Poly::x(ctx);
            const auto [q, r] = Poly::divrem(a, b);
            CHECK(q * b + r == a);
            CHECK(r.degree() < b.degree());
        }
    }
    CHECK_THROWS_AS(Poly::divrem(num, Poly::zero(f4)), std::invalid_argument);
}

TEST_CASE("gcd") {
    const FieldCtx f4 = build_field(2, true);
    const Poly x = Poly::x(f4);
    CHECK(gcd(x, x * x * x) == x);
    CHECK(gcd(x * x, x * x * x) == x * x);
    // x^2+x = x(x+1), x^2+1 = (x+1)^2
    const Poly a(f4, {f4.zero(), f4.one(), f4.one()});
    const Poly b(f4, {f4.one(), f4.zero(), f4.one()});
    CHECK(gcd(a, b) == x + Poly::one(f4));
    CHECK(gcd(a, Poly::one(f4)) == Poly::one(f4));
    CHECK_THROWS_AS(gcd(Poly::zero(f4), Poly::zero(f4)), std::invalid_argument);

    std::mt19937 rng(11);
    const FieldCtx f9 = build_field(3, true);
    for (int iter = 0; iter < 120; ++iter) {
        Poly a2 = random_poly(f9, 8, rng);
        Poly b2 = random_poly(f9, 8, rng);
        if (a2.is_zero() && b2.is_zero()) continue;
        const Poly g = gcd(a2, b2);
        CHECK(g.is_monic());
        if (!a2.is_zero()) CHECK((a2 % g).is_zero());
        if (!b2.is_zero()) CHECK((b2 % g).is_zero());
    }
}

TEST_CASE("roots with multiplicity") {
    const FieldCtx f4 = build_field(2, true);
    // x^2+x = x(x+1)
    const auto r1 = roots(Poly(f4, {f4.zero(), f4.one(), f4.one()}));
    REQUIRE(r1.size() == 2);
    CHECK(r1.at(f4.zero()) == 1);
    CHECK(r1.at(f4.one()) == 1);

    // (x+1)^2 (x+alpha)(x+alpha+1)
    SplittingPoly s(f4);
    s.add(f4.one(), 2);
    s.add(f4.alpha(), 1);
    s.add(f4.alpha() + f4.one(), 1);
    const auto r2 = roots(s.expand());
    REQUIRE(r2.size() == 3);
    CHECK(r2.at(f4.one()) == 2);
    CHECK(r2.at(f4.alpha()) == 1);
    CHECK(r2.at(f4.alpha() + f4.one()) == 1);

    // x^2+1 over F_9 with alpha^2 = 2 = -1
    const FieldCtx f9 = build_field(3, true);
    const auto r3 = roots(Poly(f9, {f9.one(), f9.zero(), f9.one()}));
    REQUIRE(r3.size() == 2);
    CHECK(r3.at(f9.alpha()) == 1);
    CHECK(r3.at(f9.elem(0, 2)) == 1);
}

TEST_CASE("splitting tests") {
    const FieldCtx f2 = build_field(2, false);
    const FieldCtx f4 = build_field(2, true);
    const Poly quad2(f2, {f2.one(), f2.one(), f2.one()});
    CHECK_FALSE(splits(quad2));
    const Poly quad4(f4, {f4.one(), f4.one(), f4.one()});
    CHECK(splits(quad4));

    // 1 + x + ... + x^8 = (x+alpha)(x+alpha+1)(x^6+x^3+1); the sextic factor
    // has its roots in F_64, so only two of eight roots lie in F_4
    const Poly s8 = sigma_pp(Poly::x(f4), 8);
    int total = 0;
    for (const auto& [root, m] : roots(s8)) total += m;
    CHECK(total == 2);
    CHECK_FALSE(splits(s8));
    // degree 6 behaves the same way
    CHECK_FALSE(splits(sigma_pp(Poly::x(f4), 6)));
}

TEST_CASE("splitting product reconstruction") {
    std::mt19937 rng(23);
    for (const int p : {2, 3, 5}) {
        const FieldCtx ctx = build_field(p, true);
        const auto all = enumerate(ctx);
        std::uniform_int_distribution<size_t> pick(0, all.size() - 1);
        std::uniform_int_distribution<int> exp(1, 4);
        for (int iter = 0; iter < 60; ++iter) {
            SplittingPoly s(ctx);
            for (int k = 0; k < 3; ++k) s.add(all[pick(rng)], exp(rng));
            const Poly expanded = s.expand();
            CHECK(splits(expanded));
            Poly rebuilt = Poly::one(ctx);
            for (const auto& [root, m] : roots(expanded))
                rebuilt = rebuilt * Poly::x_minus(root).pow(m);
            CHECK(rebuilt * Poly::constant(expanded.leading()) == expanded);
        }
    }
}

TEST_CASE("argument shift") {
    std::mt19937 rng(31);
    const FieldCtx f9 = build_field(3, true);
    const auto all = enumerate(f9);
    std::uniform_int_distribution<size_t> pick(0, all.size() - 1);
    for (int iter = 0; iter < 60; ++iter) {
        const Poly p = random_poly(f9, 7, rng);
        const FieldElem t = all[pick(rng)];
        const Poly shifted = p.shifted_arg(t);
        for (const auto& at : all) CHECK(shifted.eval(at) == p.eval(at + t));
    }
}
