#include <doctest.h>

#include <algorithm>
#include <set>

#include "bupoly/io.hpp"
#include "bupoly/search.hpp"

using namespace bupoly;

namespace {

using Tuple = std::array<int, 4>;

std::set<Tuple> hit_set(const SearchReport& rep) {
    std::set<Tuple> out;
    for (const auto& h : rep.hits) out.insert(h.exps);
    return out;
}

const std::set<Tuple> kTableTuples = {
    {4, 4, 3, 5}, {4, 4, 5, 3}, {6, 6, 3, 5}, {6, 6, 5, 3}, {4, 3, 4, 3}, {4, 5, 4, 5},
    {4, 3, 3, 4}, {4, 5, 5, 4}, {4, 4, 4, 4}, {4, 4, 6, 6}, {6, 6, 4, 4}, {6, 6, 6, 6},
};

/// The complete splitting-perfect classification over F_4, solved from the
/// per-root fixed-point equations (each exponent N*2^n - 1 with N in {1,3}):
///   - (2^n-1, 2^n-1, 2^m-1, 2^m-1)
///   - all four equal to 3*2^n-1
///   - 3*2^r-1 on a "crossing" pair of roots, 2^(r+1)-1 on the other two
///   - 2^(r+2)-1 at one root d, 3*2^(r+1)-1 at d+1, 3*2^r-1 at the rest
std::set<Tuple> perfect_families(int bound) {
    std::set<Tuple> out;
    auto keep = [&](const Tuple& t) {
        if (t == Tuple{0, 0, 0, 0}) return;
        for (int e : t)
            if (e > bound) return;
        out.insert(t);
    };
    for (int n = 1; n <= 2 * bound + 2; n *= 2)
        for (int m = 1; m <= 2 * bound + 2; m *= 2) keep({n - 1, n - 1, m - 1, m - 1});
    for (int n = 1; n <= 2 * bound + 2; n *= 2) keep({3 * n - 1, 3 * n - 1, 3 * n - 1, 3 * n - 1});
    for (int r = 1; r <= 2 * bound + 2; r *= 2) {
        const int hi = 3 * r - 1, lo = 2 * r - 1;
        keep({hi, lo, hi, lo});
        keep({hi, lo, lo, hi});
        keep({lo, hi, hi, lo});
        keep({lo, hi, lo, hi});
    }
    for (int r = 1; r <= 2 * bound + 2; r *= 2) {
        const int one_pos = 4 * r - 1, partner = 6 * r - 1, rest = 3 * r - 1;
        // positions permuted by the four translations
        keep({one_pos, partner, rest, rest});
        keep({partner, one_pos, rest, rest});
        keep({rest, rest, one_pos, partner});
        keep({rest, rest, partner, one_pos});
    }
    return out;
}

}  // namespace

TEST_CASE("filter parsing") {
    CHECK_FALSE(parse_filter("all").not_all_odd);
    const SearchFilter f = parse_filter("ibup-only,not-all-odd");
    CHECK(f.ibup_only);
    CHECK(f.not_all_odd);
    CHECK_THROWS_AS(parse_filter("bogus"), std::invalid_argument);
}

TEST_CASE("the table tuples appear at bound 11 already") {
    const auto rep = search_f4(11, parse_filter("ibup-only,not-all-odd"));
    CHECK(hit_set(rep) == kTableTuples);
    for (const auto& h : rep.hits) CHECK(*std::max_element(h.exps.begin(), h.exps.end()) <= 11);
}

TEST_CASE("bound sufficiency audit") {
    // every indecomposable hit with exponents within 11 is already found at
    // bound 11; the deeper scan only adds tuples with a larger entry
    const auto at23 = search_f4(23, parse_filter("ibup-only"));
    const auto at11 = search_f4(11, parse_filter("ibup-only"));
    std::set<Tuple> expected;
    for (const auto& h : at23.hits)
        if (*std::max_element(h.exps.begin(), h.exps.end()) <= 11) expected.insert(h.exps);
    CHECK(hit_set(at11) == expected);
}

TEST_CASE("small-bound unfiltered hits") {
    const auto rep = search_f4(2);
    const auto hits = hit_set(rep);
    // exactly the pairs (a,a,c,c) with entries in {0,1,2}, not all zero
    std::set<Tuple> expected;
    for (int a = 0; a <= 2; ++a)
        for (int c = 0; c <= 2; ++c)
            if (a + c > 0) expected.insert({a, a, c, c});
    CHECK(hits == expected);
    CHECK(hits.count({1, 1, 0, 0}) == 1);
    CHECK(hits.count({2, 2, 0, 0}) == 1);
    CHECK(hits.count({0, 0, 2, 2}) == 1);
    CHECK(hits.count({1, 1, 1, 1}) == 1);
    CHECK(hits.count({2, 2, 2, 2}) == 1);
}

TEST_CASE("hits are sorted, deterministic and translation-closed") {
    const auto rep1 = search_f4(9);
    const auto rep2 = search_f4(9);
    REQUIRE(rep1.hits.size() == rep2.hits.size());
    for (size_t k = 0; k < rep1.hits.size(); ++k) {
        CHECK(rep1.hits[k].exps == rep2.hits[k].exps);
        CHECK(rep1.hits[k].kind == rep2.hits[k].kind);
        if (k > 0) CHECK(rep1.hits[k - 1].exps < rep1.hits[k].exps);
    }
    const auto hits = hit_set(rep1);
    for (const Tuple& t : hits) {
        CHECK(hits.count({t[1], t[0], t[3], t[2]}) == 1);
        CHECK(hits.count({t[2], t[3], t[0], t[1]}) == 1);
        CHECK(hits.count({t[3], t[2], t[1], t[0]}) == 1);
    }
    // orbit representative is the lexicographic minimum of those images
    for (const auto& h : rep1.hits) {
        const Tuple t = h.exps;
        Tuple rep = std::min({t, Tuple{t[1], t[0], t[3], t[2]}, Tuple{t[2], t[3], t[0], t[1]},
                              Tuple{t[3], t[2], t[1], t[0]}});
        CHECK(h.orbit_rep == rep);
    }
}

TEST_CASE("threaded scan matches the single-threaded scan") {
    const auto seq = search_f4(13, parse_filter("all"), 1);
    const auto par = search_f4(13, parse_filter("all"), 4);
    REQUIRE(seq.hits.size() == par.hits.size());
    for (size_t k = 0; k < seq.hits.size(); ++k) CHECK(seq.hits[k].exps == par.hits[k].exps);
}

TEST_CASE("all-odd hits are exactly the all-odd perfect tuples") {
    const int bound = 15;
    const auto everything = search_f4(bound);
    std::set<Tuple> all_odd_hits;
    for (const auto& h : everything.hits)
        if (h.all_odd) all_odd_hits.insert(h.exps);

    std::set<Tuple> expected;
    for (const Tuple& t : perfect_families(bound)) {
        bool odd = true;
        for (int e : t) odd = odd && e % 2 == 1;
        if (odd) expected.insert(t);
    }
    CHECK(all_odd_hits == expected);
}

TEST_CASE("perfect scan matches the solved classification") {
    for (const int bound : {7, 23}) {
        const auto rep = search_perfect_f4(bound);
        CHECK(hit_set(rep) == perfect_families(bound));
    }
}

TEST_CASE("every hit passes the expanded double check") {
    const auto rep = search_f4(23);
    const FieldCtx f4 = rep.field;
    std::vector<FieldElem> by_value = enumerate(f4);
    std::sort(by_value.begin(), by_value.end(), ValueLess{});
    for (const auto& h : rep.hits) {
        SplittingPoly a(f4);
        for (int k = 0; k < 4; ++k)
            a.add(by_value[static_cast<size_t>(k)], h.exps[static_cast<size_t>(k)]);
        CHECK(is_bup_direct(a));
        if (h.kind == BupKind::trivial_bup) CHECK_FALSE(h.decomposition.empty());
    }
}

TEST_CASE("splitting fixed-point verification over F_9 and F_25") {
    const auto r3 = verify_splitbup(3, 20);
    CHECK(r3.all_agree);
    std::vector<int> bup3;
    for (const auto& row : r3.rows)
        if (row.bup) bup3.push_back(row.r);
    CHECK(bup3 == std::vector<int>{1, 2, 3, 8});

    const auto r5 = verify_splitbup(5, 30);
    CHECK(r5.all_agree);
    std::vector<int> bup5;
    for (const auto& row : r5.rows)
        if (row.bup) bup5.push_back(row.r);
    CHECK(bup5 == std::vector<int>{1, 2, 3, 4, 5, 24});
}

TEST_CASE("per-power brute cross-check of the verification path") {
    const FieldCtx f9 = build_field(3, true);
    for (int r = 1; r <= 4; ++r) {
        for (const auto& g : enumerate(f9)) {
            FactoredPoly f(f9);
            const Poly base = Poly::x_minus(g);
            f.push(base, 2 * r);
            const Poly brute = brute_sigma_star2(f);
            if (exponent_splits(f9, 2 * r)) {
                CHECK(brute == sigma_star2_roots(f9, g, 2 * r).expand());
            } else {
                CHECK(brute == sigma_star2_pp(base, 2 * r));
                CHECK_FALSE(splits(brute));
            }
        }
    }
}

TEST_CASE("full-product brute confirmation at r = 1") {
    const FieldCtx f9 = build_field(3, true);
    FactoredPoly f(f9);
    for (const auto& g : enumerate(f9)) f.push(Poly::x_minus(g), 2);
    CHECK(brute_sigma_star2(f, 64) == f.expand());
}

TEST_CASE("prime-field brute verification") {
    const auto rep = verify_beard_fp(3, 17);
    CHECK(rep.bup_r == std::vector<int>{1, 4, 5, 17});
    CHECK(rep.necessity_ok);
    // and the conditions hold for exactly those r
    std::vector<int> cond_r;
    for (const auto& row : rep.rows)
        if (row.condition) cond_r.push_back(row.r);
    CHECK(cond_r == rep.bup_r);

    const auto rep5 = verify_beard_fp(5, 8);
    CHECK(rep5.necessity_ok);
    CHECK(std::count(rep5.bup_r.begin(), rep5.bup_r.end(), 8) == 1);  // r = 2(p-1)
    CHECK(rep5.bup_r == std::vector<int>{1, 2, 3, 8});
}

TEST_CASE("beard conditions") {
    CHECK(beard_condition(3, 1) == "i");
    CHECK(beard_condition(3, 4) == "ii");
    CHECK(beard_condition(3, 5) == "i");
    CHECK(beard_condition(3, 17) == "i");
    CHECK_FALSE(beard_condition(3, 2).has_value());
    CHECK(beard_condition(5, 2) == "iv");
    CHECK(beard_condition(5, 8) == "ii");
}

TEST_CASE("report rendering") {
    const auto rep = search_f4(6, parse_filter("ibup-only,not-all-odd"));
    const std::string text = render_text(rep);
    CHECK(text.find("F_4") != std::string::npos);
    CHECK(text.find("a |") != std::string::npos);
    const std::string json = render_json(rep);
    CHECK(json.find("\"schema\": 1") != std::string::npos);
    CHECK(json.find("\"exps\"") != std::string::npos);
}
