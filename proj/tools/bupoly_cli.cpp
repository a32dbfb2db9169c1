#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "bupoly/io.hpp"
#include "bupoly/search.hpp"

namespace {

using nlohmann::json;

bupoly::FieldCtx field_from_option(const std::string& text) {
    const auto comma = text.find(',');
    const std::string head = text.substr(0, comma);
    bool quadratic = false;
    if (comma != std::string::npos) {
        const std::string tail = text.substr(comma + 1);
        if (tail != "ext") throw bupoly::parse_error("--field expects p or p,ext; got " + text);
        quadratic = true;
    }
    int p = 0;
    try {
        p = std::stoi(head);
    } catch (const std::exception&) {
        throw bupoly::parse_error("--field expects a prime number; got " + text);
    }
    return bupoly::build_field(p, quadratic);
}

json field_json(const bupoly::FieldCtx& ctx) {
    json j{{"p", ctx.p}, {"ext", ctx.quadratic ? "quadratic" : "prime-field"}};
    if (ctx.quadratic && ctx.p > 2) j["c"] = ctx.c;
    return j;
}

/// Factored string when the polynomial splits, dense otherwise.
std::string poly_display(const bupoly::Poly& p) {
    if (!p.is_zero() && p.is_monic() && bupoly::splits(p))
        return bupoly::to_string(bupoly::SplittingPoly::from_poly(p));
    return bupoly::to_string(p);
}

int run(int argc, char** argv) {
    CLI::App app{"divisor sums and bi-unitary perfect polynomials over F_p and F_{p^2}"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));

    // sigma
    auto* cmd_sigma = app.add_subcommand("sigma", "divisor sum of a factored polynomial");
    std::string which = "s";
    std::string field_text;
    std::string poly_text;
    cmd_sigma->add_option("--which", which, "s (all divisors), s1 (unitary), s2 (bi-unitary)")
        ->check(CLI::IsMember({"s", "s1", "s2"}));
    cmd_sigma->add_option("--field", field_text, "p or p,ext")->required();
    cmd_sigma->add_option("poly", poly_text, "factored polynomial, e.g. \"(x-0)^4\"")->required();

    // omega
    auto* cmd_omega = app.add_subcommand("omega", "admissible half-exponent sets for an odd prime");
    int omega_p = 3;
    cmd_omega->add_option("--p", omega_p, "odd prime")->required();

    // check
    auto* cmd_check = app.add_subcommand("check", "classify a splitting polynomial");
    std::string check_field;
    std::string check_poly;
    cmd_check->add_option("--field", check_field, "p or p,ext")->required();
    cmd_check->add_option("poly", check_poly, "factored polynomial")->required();

    // search-f4
    auto* cmd_search = app.add_subcommand("search-f4", "scan exponent tuples over F_4");
    int bound = 23;
    std::string filter_text = "all";
    int threads = 1;
    cmd_search->add_option("--bound", bound, "maximum exponent (default 23)");
    cmd_search->add_option("--filter", filter_text, "comma list of all, not-all-odd, ibup-only");
    cmd_search->add_option("--threads", threads, "parallelism degree (default 1)");

    // verify-splitbup
    auto* cmd_split = app.add_subcommand("verify-splitbup",
                                         "(x^q-x)^(2r) fixed points vs the omega sets");
    int split_p = 3;
    int split_rmax = 20;
    cmd_split->add_option("--p", split_p, "odd prime")->required();
    cmd_split->add_option("--rmax", split_rmax, "largest half-exponent r")->required();

    // verify-beard
    auto* cmd_beard = app.add_subcommand("verify-beard",
                                         "brute-force (x^p-x)^r over F_p vs the four conditions");
    int beard_p = 3;
    int beard_rmax = 17;
    int beard_cap = 64;
    cmd_beard->add_option("--p", beard_p, "odd prime")->required();
    cmd_beard->add_option("--rmax", beard_rmax, "largest exponent r")->required();
    cmd_beard->add_option("--cap", beard_cap, "brute-force degree cap (default 64)");

    // oracle
    auto* cmd_oracle = app.add_subcommand("oracle", "brute-force bi-unitary divisor sum");
    std::string oracle_field;
    std::string oracle_poly;
    int oracle_cap = 64;
    cmd_oracle->add_option("--field", oracle_field, "p or p,ext")->required();
    cmd_oracle->add_option("--cap", oracle_cap, "degree cap (default 64)");
    cmd_oracle->add_option("poly", oracle_poly, "factored polynomial")->required();

    for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();  // --format may follow the subcommand

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    const bool as_json = format == "json";

    if (*cmd_sigma) {
        const auto ctx = field_from_option(field_text);
        const auto input = bupoly::parse_splitting(ctx, poly_text);
        const auto kind = which == "s"    ? bupoly::DivisorSum::sigma
                          : which == "s1" ? bupoly::DivisorSum::sigma_star
                                          : bupoly::DivisorSum::sigma_star2;
        const bupoly::Poly result = bupoly::sigma_map(bupoly::FactoredPoly::from(input), kind);
        if (as_json) {
            json j{{"schema", 1},
                   {"field", field_json(ctx)},
                   {"which", which},
                   {"input", bupoly::to_string(input)},
                   {"dense", bupoly::to_string(result)},
                   {"splits", bupoly::splits(result)}};
            if (bupoly::splits(result) && result.is_monic())
                j["factored"] = bupoly::to_string(bupoly::SplittingPoly::from_poly(result));
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << poly_display(result) << "\n";
        }
        return 0;
    }

    if (*cmd_omega) {
        const auto o = bupoly::omega_sets(omega_p);
        // this dump is the subcommand's native output in either format
        json j{{"schema", 1},      {"p", o.p},           {"omega1", o.omega1},
               {"omega2", o.omega2}, {"omega3", o.omega3}, {"omega4", o.omega4},
               {"omega", o.all}};
        std::cout << j.dump(2) << "\n";
        return 0;
    }

    if (*cmd_check) {
        const auto ctx = field_from_option(check_field);
        const auto a = bupoly::parse_splitting(ctx, check_poly);
        const auto cls = bupoly::classify_bup(a);
        const bool bup = cls.kind != bupoly::BupKind::not_bup;
        const bool perfect = bupoly::is_perfect(a);
        const char* kind = cls.kind == bupoly::BupKind::not_bup         ? "not-bup"
                           : cls.kind == bupoly::BupKind::trivial_bup   ? "trivial-bup"
                                                                        : "ibup";
        if (as_json) {
            json j{{"schema", 1},
                   {"field", field_json(ctx)},
                   {"input", bupoly::to_string(a)},
                   {"bup", bup},
                   {"class", kind},
                   {"perfect", perfect}};
            if (!cls.decomposition.empty()) {
                j["decomposition"] = json::array();
                for (const auto& part : cls.decomposition)
                    j["decomposition"].push_back(bupoly::to_string(part));
            }
            if (ctx.quadratic && ctx.p == 2) j["sigma_member"] = bupoly::is_sigma_member(a);
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "bup: " << (bup ? "true" : "false") << ", class: " << kind
                      << ", perfect: " << (perfect ? "true" : "false");
            if (ctx.quadratic && ctx.p == 2 && bupoly::is_sigma_member(a))
                std::cout << ", sigma-member: true";
            std::cout << "\n";
            if (!cls.decomposition.empty()) {
                std::cout << "decomposition:";
                for (const auto& part : cls.decomposition)
                    std::cout << "  " << bupoly::to_string(part);
                std::cout << "\n";
            }
        }
        return 0;
    }

    if (*cmd_search) {
        const auto rep = bupoly::search_f4(bound, bupoly::parse_filter(filter_text), threads);
        std::cout << (as_json ? bupoly::render_json(rep) : bupoly::render_text(rep)) << "\n";
        return 0;
    }

    if (*cmd_split) {
        const auto rep = bupoly::verify_splitbup(split_p, split_rmax);
        std::cout << (as_json ? bupoly::render_json(rep) : bupoly::render_text(rep)) << "\n";
        return 0;
    }

    if (*cmd_beard) {
        const auto rep = bupoly::verify_beard_fp(beard_p, beard_rmax, beard_cap);
        std::cout << (as_json ? bupoly::render_json(rep) : bupoly::render_text(rep)) << "\n";
        return 0;
    }

    if (*cmd_oracle) {
        const auto ctx = field_from_option(oracle_field);
        const auto input = bupoly::parse_splitting(ctx, oracle_poly);
        const bupoly::Poly result =
            bupoly::brute_sigma_star2(bupoly::FactoredPoly::from(input), oracle_cap);
        if (as_json) {
            json j{{"schema", 1},
                   {"field", field_json(ctx)},
                   {"input", bupoly::to_string(input)},
                   {"dense", bupoly::to_string(result)},
                   {"splits", bupoly::splits(result)}};
            if (bupoly::splits(result) && result.is_monic())
                j["factored"] = bupoly::to_string(bupoly::SplittingPoly::from_poly(result));
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << poly_display(result) << "\n";
        }
        return 0;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const bupoly::cap_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
