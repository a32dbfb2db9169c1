#include "bupoly/search.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "bupoly/io.hpp"

namespace bupoly {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

using Vec4 = std::array<int, 4>;

/// Per-root contribution tables for the F_4 scans: table[root][e] is the
/// root-multiplicity vector of the divisor sum of (x-root)^e, indexed by the
/// four roots in value order, or nullopt when that sum does not split.
using Table = std::array<std::vector<std::optional<Vec4>>, 4>;

Table build_table(const FieldCtx& f4, int bound, bool star2) {
    const auto roots4 = enumerate(f4);
    std::vector<FieldElem> by_value(roots4.begin(), roots4.end());
    std::sort(by_value.begin(), by_value.end(), ValueLess{});
    Table table;
    for (int r = 0; r < 4; ++r) {
        table[static_cast<size_t>(r)].assign(static_cast<size_t>(bound) + 1, std::nullopt);
        for (int e = 0; e <= bound; ++e) {
            SplittingPoly roots_vec(f4);
            try {
                roots_vec = star2 ? sigma_star2_roots(f4, by_value[static_cast<size_t>(r)], e)
                                  : sigma_roots_f4(f4, by_value[static_cast<size_t>(r)], e);
            } catch (const std::invalid_argument&) {
                continue;
            }
            Vec4 v{};
            for (const auto& [root, m] : roots_vec.exps) v[static_cast<size_t>(root.value_index())] += m;
            table[static_cast<size_t>(r)][static_cast<size_t>(e)] = v;
        }
    }
    return table;
}

std::vector<Vec4> scan_range(const Table& table, int bound, int a_lo, int a_hi) {
    std::vector<Vec4> hits;
    for (int a = a_lo; a <= a_hi; ++a) {
        if (!table[0][static_cast<size_t>(a)]) continue;
        for (int b = 0; b <= bound; ++b) {
            if (!table[1][static_cast<size_t>(b)]) continue;
            for (int c = 0; c <= bound; ++c) {
                if (!table[2][static_cast<size_t>(c)]) continue;
                for (int d = 0; d <= bound; ++d) {
                    if (a == 0 && b == 0 && c == 0 && d == 0) continue;
                    if (!table[3][static_cast<size_t>(d)]) continue;
                    Vec4 sum{};
                    for (int k = 0; k < 4; ++k) {
                        const Vec4& va = *table[0][static_cast<size_t>(a)];
                        const Vec4& vb = *table[1][static_cast<size_t>(b)];
                        const Vec4& vc = *table[2][static_cast<size_t>(c)];
                        const Vec4& vd = *table[3][static_cast<size_t>(d)];
                        sum[static_cast<size_t>(k)] = va[static_cast<size_t>(k)] + vb[static_cast<size_t>(k)] +
                                                      vc[static_cast<size_t>(k)] + vd[static_cast<size_t>(k)];
                    }
                    if (sum == Vec4{a, b, c, d}) hits.push_back({a, b, c, d});
                }
            }
        }
    }
    return hits;
}

Vec4 orbit_representative(const Vec4& t) {
    // the four translations permute the roots (0,1,alpha,alpha+1) as
    // id, (01)(23), (02)(13), (03)(12)
    const std::array<Vec4, 4> orbit = {
        Vec4{t[0], t[1], t[2], t[3]},
        Vec4{t[1], t[0], t[3], t[2]},
        Vec4{t[2], t[3], t[0], t[1]},
        Vec4{t[3], t[2], t[1], t[0]},
    };
    return *std::min_element(orbit.begin(), orbit.end());
}

SplittingPoly tuple_poly(const FieldCtx& f4, const Vec4& t) {
    std::vector<FieldElem> by_value = enumerate(f4);
    std::sort(by_value.begin(), by_value.end(), ValueLess{});
    SplittingPoly a(f4);
    for (int k = 0; k < 4; ++k) a.add(by_value[static_cast<size_t>(k)], t[static_cast<size_t>(k)]);
    return a;
}

bool tuple_all_odd(const Vec4& t) {
    for (int e : t)
        if (e % 2 == 0) return false;
    return true;
}

SearchReport finish_report(const FieldCtx& f4, int bound, SearchFilter filter,
                           std::vector<Vec4> raw, bool star2, Clock::time_point start) {
    SearchReport rep;
    rep.field = f4;
    rep.bound = bound;
    rep.filter = filter;
    rep.star2 = star2;
    for (const Vec4& t : raw) {
        SearchHit hit;
        hit.exps = t;
        hit.all_odd = tuple_all_odd(t);
        hit.orbit_rep = orbit_representative(t);
        if (star2) {
            const BupClass cls = classify_bup(tuple_poly(f4, t));
            hit.kind = cls.kind;
            for (const auto& part : cls.decomposition) hit.decomposition.push_back(to_string(part));
        }
        if (filter.not_all_odd) {
            // scope of the even-exponent classification: some exponent even,
            // at least three roots present, and the exponent of x even (the
            // normalization under translation that the case analysis fixes)
            int support = 0;
            for (int e : t)
                if (e > 0) ++support;
            if (hit.all_odd || support < 3 || t[0] % 2 != 0) continue;
        }
        if (filter.ibup_only && hit.kind != BupKind::indecomposable_bup) continue;
        if (star2 && hit.kind == BupKind::indecomposable_bup) ++rep.count_ibup;
        if (star2 && hit.kind == BupKind::trivial_bup) ++rep.count_trivial;
        rep.hits.push_back(std::move(hit));
    }
    rep.elapsed_ms = ms_since(start);
    return rep;
}

SearchReport run_scan(int bound, SearchFilter filter, int threads, bool star2) {
    if (bound < 1) throw std::invalid_argument("search: bound must be >= 1");
    const auto start = Clock::now();
    const FieldCtx f4 = build_field(2, true);
    const Table table = build_table(f4, bound, star2);
    std::vector<Vec4> raw;
    if (threads <= 1) {
        raw = scan_range(table, bound, 0, bound);
    } else {
        const int n = std::min(threads, bound + 1);
        std::vector<std::vector<Vec4>> parts(static_cast<size_t>(n));
        std::vector<std::thread> pool;
        for (int w = 0; w < n; ++w) {
            const int lo = w * (bound + 1) / n;
            const int hi = (w + 1) * (bound + 1) / n - 1;
            pool.emplace_back([&table, bound, lo, hi, w, &parts] {
                parts[static_cast<size_t>(w)] = scan_range(table, bound, lo, hi);
            });
        }
        for (auto& th : pool) th.join();
        for (auto& part : parts) raw.insert(raw.end(), part.begin(), part.end());
    }
    // partitioned by leading exponent, so concatenation is already sorted
    return finish_report(f4, bound, filter, std::move(raw), star2, start);
}

}  // namespace

SearchFilter parse_filter(const std::string& text) {
    SearchFilter f;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item == "all" || item.empty()) continue;
        if (item == "not-all-odd") {
            f.not_all_odd = true;
        } else if (item == "ibup-only") {
            f.ibup_only = true;
        } else {
            throw std::invalid_argument("unknown filter: " + item);
        }
    }
    return f;
}

SearchReport search_f4(int bound, SearchFilter filter, int threads) {
    return run_scan(bound, filter, threads, true);
}

SearchReport search_perfect_f4(int bound) {
    SearchReport rep = run_scan(bound, SearchFilter{}, 1, false);
    // double-entry: every table hit must also be a fixed point of the
    // expanded divisor sum
    for (const auto& hit : rep.hits)
        if (!is_perfect(tuple_poly(rep.field, hit.exps)))
            throw std::logic_error("search_perfect_f4: table hit fails the expanded check");
    return rep;
}

SplitbupReport verify_splitbup(int p, int r_max) {
    const auto start = Clock::now();
    SplitbupReport rep;
    rep.p = p;
    rep.r_max = r_max;
    rep.omega = omega_sets(p);
    const FieldCtx ctx = build_field(p, true);
    const auto elems = enumerate(ctx);
    for (int r = 1; r <= r_max; ++r) {
        SplittingPoly a(ctx);
        for (const auto& g : elems) a.add(g, 2 * r);
        SplitbupRow row;
        row.r = r;
        row.bup = is_bup(a);
        row.in_omega = rep.omega.contains(r);
        if (row.bup != row.in_omega) rep.all_agree = false;
        rep.rows.push_back(row);
    }
    rep.elapsed_ms = ms_since(start);
    return rep;
}

std::optional<std::string> beard_condition(int p, int r) {
    if (r % 2 == 1) {
        int m = r + 1;
        while (m % p == 0) m /= p;
        if ((p - 1) % m == 0) return "i";
        return std::nullopt;
    }
    if (r == 2 * (p - 1)) return "ii";
    const int n = r / 2;
    if (n % 2 == 0 && (p - 1) % (n * (n + 1)) == 0) return "iii";
    if (n % 2 == 1 && p % 4 == 1 && (p - 1) % (2 * n * (n + 1)) == 0) return "iv";
    return std::nullopt;
}

BeardReport verify_beard_fp(int p, int r_max, int degree_cap) {
    const auto start = Clock::now();
    BeardReport rep;
    rep.p = p;
    rep.r_max = r_max;
    rep.degree_cap = degree_cap;
    const FieldCtx ctx = build_field(p, false);
    for (int r = 1; r <= r_max; ++r) {
        FactoredPoly f(ctx);
        for (const auto& g : enumerate(ctx)) f.push(Poly::x_minus(g), r);
        BeardRow row;
        row.r = r;
        row.bup = brute_sigma_star2(f, degree_cap) == f.expand();
        row.condition = beard_condition(p, r);
        if (row.bup) {
            rep.bup_r.push_back(r);
            if (!row.condition) rep.necessity_ok = false;
        }
        rep.rows.push_back(row);
    }
    rep.elapsed_ms = ms_since(start);
    return rep;
}

namespace {

const char* kind_name(BupKind k) {
    switch (k) {
        case BupKind::not_bup: return "not-bup";
        case BupKind::trivial_bup: return "trivial-bup";
        case BupKind::indecomposable_bup: return "ibup";
    }
    return "?";
}

std::string filter_name(const SearchFilter& f) {
    std::string out;
    if (f.not_all_odd) out += "not-all-odd";
    if (f.ibup_only) out += std::string(out.empty() ? "" : ",") + "ibup-only";
    return out.empty() ? "all" : out;
}

nlohmann::json field_json(const FieldCtx& ctx) {
    nlohmann::json j;
    j["p"] = ctx.p;
    j["ext"] = ctx.quadratic ? "quadratic" : "prime-field";
    if (ctx.quadratic && ctx.p > 2) j["c"] = ctx.c;
    return j;
}

}  // namespace

std::string render_text(const SearchReport& rep) {
    std::ostringstream out;
    out << "field: " << to_string(rep.field) << "\n";
    out << "bound: " << rep.bound << "  filter: " << filter_name(rep.filter) << "\n";
    out << "hits: " << rep.hits.size();
    if (rep.star2) out << " (ibup " << rep.count_ibup << ", trivial " << rep.count_trivial << ")";
    out << "\n";
    const char* rows = "abcd";
    for (int k = 0; k < 4; ++k) {
        out << rows[k] << " |";
        for (const auto& hit : rep.hits) out << ' ' << hit.exps[static_cast<size_t>(k)];
        out << "\n";
    }
    if (rep.star2) {
        out << "class |";
        for (const auto& hit : rep.hits) out << ' ' << kind_name(hit.kind);
        out << "\n";
    }
    out << "elapsed_ms: " << rep.elapsed_ms << "\n";
    return out.str();
}

std::string render_json(const SearchReport& rep) {
    nlohmann::json j;
    j["schema"] = 1;
    j["field"] = field_json(rep.field);
    j["bounds"] = {{"max_exponent", rep.bound}};
    j["filter"] = filter_name(rep.filter);
    j["hits"] = nlohmann::json::array();
    for (const auto& hit : rep.hits) {
        nlohmann::json h;
        h["exps"] = hit.exps;
        if (rep.star2) h["class"] = kind_name(hit.kind);
        h["all_odd"] = hit.all_odd;
        h["orbit"] = hit.orbit_rep;
        if (!hit.decomposition.empty()) h["decomposition"] = hit.decomposition;
        j["hits"].push_back(h);
    }
    j["counts"] = {{"hits", rep.hits.size()}};
    if (rep.star2) {
        j["counts"]["ibup"] = rep.count_ibup;
        j["counts"]["trivial"] = rep.count_trivial;
    }
    j["elapsed_ms"] = rep.elapsed_ms;
    return j.dump(2);
}

std::string render_text(const SplitbupReport& rep) {
    std::ostringstream out;
    out << "p: " << rep.p << "  q: " << rep.p * rep.p << "  r_max: " << rep.r_max << "\n";
    out << "omega:";
    for (int k : rep.omega.all) out << ' ' << k;
    out << "\nbup r:";
    for (const auto& row : rep.rows)
        if (row.bup) out << ' ' << row.r;
    out << "\nagree: " << (rep.all_agree ? "yes" : "NO") << "\n";
    for (const auto& row : rep.rows)
        if (row.bup != row.in_omega)
            out << "counterexample: r=" << row.r << " bup=" << row.bup
                << " in_omega=" << row.in_omega << "\n";
    out << "elapsed_ms: " << rep.elapsed_ms << "\n";
    return out.str();
}

std::string render_json(const SplitbupReport& rep) {
    nlohmann::json j;
    j["schema"] = 1;
    j["p"] = rep.p;
    j["q"] = rep.p * rep.p;
    j["rmax"] = rep.r_max;
    j["omega"] = rep.omega.all;
    j["results"] = nlohmann::json::array();
    for (const auto& row : rep.rows)
        j["results"].push_back({{"r", row.r},
                                {"bup", row.bup},
                                {"in_omega", row.in_omega},
                                {"agree", row.bup == row.in_omega}});
    j["all_agree"] = rep.all_agree;
    j["elapsed_ms"] = rep.elapsed_ms;
    return j.dump(2);
}

std::string render_text(const BeardReport& rep) {
    std::ostringstream out;
    out << "p: " << rep.p << "  r_max: " << rep.r_max << "  cap: " << rep.degree_cap << "\n";
    out << "bup r:";
    for (int r : rep.bup_r) out << ' ' << r;
    out << "\nconditions:";
    for (const auto& row : rep.rows)
        if (row.condition) out << ' ' << row.r << ':' << *row.condition;
    out << "\nnecessity: " << (rep.necessity_ok ? "ok" : "VIOLATED") << "\n";
    out << "elapsed_ms: " << rep.elapsed_ms << "\n";
    return out.str();
}

std::string render_json(const BeardReport& rep) {
    nlohmann::json j;
    j["schema"] = 1;
    j["p"] = rep.p;
    j["rmax"] = rep.r_max;
    j["cap"] = rep.degree_cap;
    j["results"] = nlohmann::json::array();
    for (const auto& row : rep.rows) {
        nlohmann::json r{{"r", row.r}, {"bup", row.bup}};
        if (row.condition) r["condition"] = *row.condition;
        j["results"].push_back(r);
    }
    j["bup_r"] = rep.bup_r;
    j["necessity_ok"] = rep.necessity_ok;
    j["elapsed_ms"] = rep.elapsed_ms;
    return j.dump(2);
}

}  // namespace bupoly
