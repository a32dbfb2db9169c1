#pragma once

#include <array>
#include <optional>
#include <string>

#include "bupoly/bup.hpp"

namespace bupoly {

struct SearchFilter {
    bool not_all_odd = false;
    bool ibup_only = false;
};

/// Parses a comma-separated filter list: "all", "not-all-odd", "ibup-only".
SearchFilter parse_filter(const std::string& text);

/// Exponent tuples are indexed by the roots of F_4 in value order:
/// (0, 1, alpha, alpha+1).
struct SearchHit {
    std::array<int, 4> exps{};
    BupKind kind = BupKind::not_bup;
    bool all_odd = false;
    std::array<int, 4> orbit_rep{};  // lex-min tuple over the four translations
    std::vector<std::string> decomposition;
};

struct SearchReport {
    FieldCtx field;
    int bound = 0;
    SearchFilter filter;
    bool star2 = true;  // false for the plain divisor-sum (perfect) scan
    std::vector<SearchHit> hits;  // sorted lexicographically by exponent tuple
    int count_ibup = 0;
    int count_trivial = 0;
    double elapsed_ms = 0;
};

/// Scans every tuple (a,b,c,d) in [0,bound]^4 over F_4, keeps the fixed
/// points of the bi-unitary divisor sum and classifies them. Tuples with a
/// non-split exponent are rejected from precomputed tables without any
/// polynomial arithmetic.
SearchReport search_f4(int bound, SearchFilter filter = {}, int threads = 1);

/// Same scan for fixed points of the plain divisor sum.
SearchReport search_perfect_f4(int bound);

struct SplitbupRow {
    int r = 0;
    bool bup = false;
    bool in_omega = false;
};

struct SplitbupReport {
    int p = 0;
    int r_max = 0;
    OmegaSets omega;
    std::vector<SplitbupRow> rows;
    bool all_agree = true;
    double elapsed_ms = 0;
};

/// For each r <= r_max tests whether (x^q - x)^(2r) is bi-unitary perfect
/// over F_{p^2} via the root-multiplicity path and compares with r in omega.
SplitbupReport verify_splitbup(int p, int r_max);

struct BeardRow {
    int r = 0;
    bool bup = false;
    std::optional<std::string> condition;  // "i".."iv" when one applies
};

struct BeardReport {
    int p = 0;
    int r_max = 0;
    int degree_cap = 64;
    std::vector<BeardRow> rows;
    std::vector<int> bup_r;
    bool necessity_ok = true;  // every brute hit satisfies some condition
    double elapsed_ms = 0;
};

/// Brute-force test of (x^p - x)^r over the prime field F_p for r <= r_max,
/// compared against the four admissibility conditions for such exponents.
BeardReport verify_beard_fp(int p, int r_max, int degree_cap = 64);

/// Which of the four conditions r satisfies over F_p, if any:
///   i)   r = N*p^n - 1 odd with N | p-1
///   ii)  r = 2(p-1)
///   iii) r = 2N, N even, N(N+1) | p-1
///   iv)  p = 1 mod 4, r = 2N, N odd, 2N(N+1) | p-1
std::optional<std::string> beard_condition(int p, int r);

std::string render_text(const SearchReport& rep);
std::string render_json(const SearchReport& rep);
std::string render_text(const SplitbupReport& rep);
std::string render_json(const SplitbupReport& rep);
std::string render_text(const BeardReport& rep);
std::string render_json(const BeardReport& rep);

}  // namespace bupoly
