#include "bupoly/divfun.hpp"

#include <string>

namespace bupoly {

void SplittingPoly::add(const FieldElem& root, int e) {
    if (!(root.ctx() == ctx))
        throw std::invalid_argument("SplittingPoly: root from a different field context");
    if (e == 0) return;
    auto it = exps.find(root);
    if (it == exps.end()) {
        if (e < 0) throw std::invalid_argument("SplittingPoly: negative exponent");
        exps.emplace(root, e);
        return;
    }
    it->second += e;
    if (it->second < 0) throw std::invalid_argument("SplittingPoly: negative exponent");
    if (it->second == 0) exps.erase(it);
}

int SplittingPoly::exponent(const FieldElem& root) const {
    auto it = exps.find(root);
    return it == exps.end() ? 0 : it->second;
}

int SplittingPoly::degree() const {
    int d = 0;
    for (const auto& [root, e] : exps) d += e;
    return d;
}

bool SplittingPoly::all_odd() const {
    for (const auto& [root, e] : exps)
        if (e % 2 == 0) return false;
    return true;
}

Poly SplittingPoly::expand() const {
    Poly acc = Poly::one(ctx);
    for (const auto& [root, e] : exps) acc = acc * Poly::x_minus(root).pow(e);
    return acc;
}

SplittingPoly SplittingPoly::from_poly(const Poly& p) {
    if (p.is_zero() || !p.is_monic())
        throw std::invalid_argument("SplittingPoly::from_poly: input must be monic");
    SplittingPoly s(p.ctx());
    int total = 0;
    for (const auto& [root, mult] : roots(p)) {
        s.add(root, mult);
        total += mult;
    }
    if (total != p.degree())
        throw std::invalid_argument("SplittingPoly::from_poly: polynomial does not split");
    return s;
}

bool operator==(const SplittingPoly& a, const SplittingPoly& b) {
    if (!(a.ctx == b.ctx)) return false;
    if (a.exps.size() != b.exps.size()) return false;
    auto ia = a.exps.begin();
    auto ib = b.exps.begin();
    for (; ia != a.exps.end(); ++ia, ++ib)
        if (ia->first != ib->first || ia->second != ib->second) return false;
    return true;
}

void FactoredPoly::push(const Poly& base, int e) {
    if (!(base.ctx() == ctx))
        throw std::invalid_argument("FactoredPoly: base from a different field context");
    if (e == 0) return;
    if (e < 0 || base.degree() < 1 || !base.is_monic())
        throw std::invalid_argument("FactoredPoly: base must be monic nonconstant, exponent >= 1");
    for (const auto& [b, old] : factors)
        if (b == base) throw std::invalid_argument("FactoredPoly: duplicate base");
    factors.emplace_back(base, e);
}

Poly FactoredPoly::expand() const {
    Poly acc = Poly::one(ctx);
    for (const auto& [base, e] : factors) acc = acc * base.pow(e);
    return acc;
}

int FactoredPoly::degree() const {
    int d = 0;
    for (const auto& [base, e] : factors) d += base.degree() * e;
    return d;
}

FactoredPoly FactoredPoly::from(const SplittingPoly& s) {
    FactoredPoly f(s.ctx);
    for (const auto& [root, e] : s.exps) f.push(Poly::x_minus(root), e);
    return f;
}

Poly sigma_pp(const Poly& base, int a) {
    if (a < 0) throw std::invalid_argument("sigma_pp: negative exponent");
    Poly acc = Poly::one(base.ctx());
    for (int k = 0; k < a; ++k) acc = acc * base + Poly::one(base.ctx());
    return acc;
}

Poly sigma_star2_pp(const Poly& base, int a) {
    if (a < 0) throw std::invalid_argument("sigma_star2_pp: negative exponent");
    if (a == 0) return Poly::one(base.ctx());
    if (a % 2 == 1) return sigma_pp(base, a);
    const int n = a / 2;
    return (Poly::one(base.ctx()) + base.pow(n + 1)) * sigma_pp(base, n - 1);
}

Poly sigma_map(const FactoredPoly& f, DivisorSum which) {
    Poly acc = Poly::one(f.ctx);
    for (const auto& [base, e] : f.factors) {
        switch (which) {
            case DivisorSum::sigma:
                acc = acc * sigma_pp(base, e);
                break;
            case DivisorSum::sigma_star:
                acc = acc * (Poly::one(f.ctx) + base.pow(e));
                break;
            case DivisorSum::sigma_star2:
                acc = acc * sigma_star2_pp(base, e);
                break;
        }
    }
    return acc;
}

FactoredPoly gcd_u(const FactoredPoly& a, const FactoredPoly& b) {
    if (!(a.ctx == b.ctx))
        throw std::invalid_argument("gcd_u: operands over different field contexts");
    FactoredPoly out(a.ctx);
    for (const auto& [base, ea] : a.factors)
        for (const auto& [other, eb] : b.factors)
            if (base == other && ea == eb) out.push(base, ea);
    return out;
}

Poly brute_sigma_star2(const FactoredPoly& s, int degree_cap) {
    if (s.degree() > degree_cap)
        throw cap_error("brute_sigma_star2: degree " + std::to_string(s.degree()) +
                        " exceeds cap " + std::to_string(degree_cap));
    const size_t k = s.factors.size();
    // expanded powers base^d for every d up to the exponent
    std::vector<std::vector<Poly>> powers(k);
    for (size_t i = 0; i < k; ++i) {
        powers[i].push_back(Poly::one(s.ctx));
        for (int d = 1; d <= s.factors[i].second; ++d)
            powers[i].push_back(powers[i].back() * s.factors[i].first);
    }
    std::vector<int> d(k, 0);
    Poly sum(s.ctx);
    for (;;) {
        FactoredPoly div(s.ctx), codiv(s.ctx);
        for (size_t i = 0; i < k; ++i) {
            div.push(s.factors[i].first, d[i]);
            codiv.push(s.factors[i].first, s.factors[i].second - d[i]);
        }
        if (gcd_u(div, codiv).is_one()) {
            Poly expanded = Poly::one(s.ctx);
            for (size_t i = 0; i < k; ++i) expanded = expanded * powers[i][static_cast<size_t>(d[i])];
            sum = sum + expanded;
        }
        size_t pos = 0;
        while (pos < k && d[pos] == s.factors[pos].second) d[pos++] = 0;
        if (pos == k) break;
        ++d[pos];
    }
    return sum;
}

}  // namespace bupoly
