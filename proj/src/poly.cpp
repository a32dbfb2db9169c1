#include "bupoly/poly.hpp"

namespace bupoly {

Poly::Poly(const FieldCtx& ctx, std::vector<FieldElem> coeffs)
    : ctx_(ctx), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_)
        if (!(c.ctx() == ctx_))
            throw std::invalid_argument("Poly: coefficient from a different field context");
    trim();
}

Poly Poly::constant(const FieldElem& c) {
    Poly p(c.ctx());
    if (!c.is_zero()) p.coeffs_.push_back(c);
    return p;
}

Poly Poly::x(const FieldCtx& ctx) {
    Poly p(ctx);
    p.coeffs_ = {ctx.zero(), ctx.one()};
    return p;
}

Poly Poly::x_minus(const FieldElem& root) {
    Poly p(root.ctx());
    p.coeffs_ = {-root, root.ctx().one()};
    return p;
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

void Poly::check_ctx(const Poly& o) const {
    if (!(ctx_ == o.ctx_))
        throw std::invalid_argument("Poly: mixing polynomials over different field contexts");
}

FieldElem Poly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return ctx_.zero();
    return coeffs_[static_cast<size_t>(k)];
}

FieldElem Poly::leading() const {
    if (coeffs_.empty()) return ctx_.zero();
    return coeffs_.back();
}

FieldElem Poly::eval(const FieldElem& at) const {
    FieldElem acc = ctx_.zero();
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
    return acc;
}

Poly Poly::monic() const {
    if (is_zero() || coeffs_.back().is_one()) return *this;
    return *this * coeffs_.back().inv();
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    check_ctx(o);
    Poly r(ctx_);
    const size_t n = std::max(coeffs_.size(), o.coeffs_.size());
    r.coeffs_.reserve(n);
    for (size_t k = 0; k < n; ++k) {
        FieldElem c = ctx_.zero();
        if (k < coeffs_.size()) c = c + coeffs_[k];
        if (k < o.coeffs_.size()) c = c + o.coeffs_[k];
        r.coeffs_.push_back(c);
    }
    r.trim();
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    check_ctx(o);
    if (is_zero() || o.is_zero()) return Poly(ctx_);
    Poly r(ctx_);
    r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, ctx_.zero());
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (size_t k = 0; k < o.coeffs_.size(); ++k)
            r.coeffs_[i + k] = r.coeffs_[i + k] + coeffs_[i] * o.coeffs_[k];
    }
    r.trim();
    return r;
}

Poly Poly::operator*(const FieldElem& s) const {
    Poly r = *this;
    for (auto& c : r.coeffs_) c = c * s;
    r.trim();
    return r;
}

std::pair<Poly, Poly> Poly::divrem(const Poly& a, const Poly& b) {
    a.check_ctx(b);
    if (b.is_zero()) throw std::invalid_argument("Poly::divrem: division by zero polynomial");
    Poly quo(a.ctx_);
    Poly rem = a;
    const int db = b.degree();
    if (rem.degree() >= db) quo.coeffs_.assign(static_cast<size_t>(rem.degree() - db) + 1, a.ctx_.zero());
    const FieldElem lead_inv = b.leading().inv();
    while (rem.degree() >= db) {
        const int shift = rem.degree() - db;
        const FieldElem f = rem.leading() * lead_inv;
        quo.coeffs_[static_cast<size_t>(shift)] = f;
        for (int k = 0; k <= db; ++k) {
            auto& target = rem.coeffs_[static_cast<size_t>(k + shift)];
            target = target - f * b.coeffs_[static_cast<size_t>(k)];
        }
        rem.trim();
    }
    quo.trim();
    return {quo, rem};
}

Poly Poly::operator/(const Poly& o) const { return divrem(*this, o).first; }
Poly Poly::operator%(const Poly& o) const { return divrem(*this, o).second; }

Poly Poly::pow(long long e) const {
    if (e < 0) throw std::invalid_argument("Poly::pow: negative exponent");
    Poly acc = Poly::one(ctx_);
    Poly base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

Poly Poly::shifted_arg(const FieldElem& t) const {
    const Poly lin = Poly(ctx_, {t, ctx_.one()});  // x + t
    Poly acc(ctx_);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * lin + Poly::constant(*it);
    return acc;
}

bool operator==(const Poly& a, const Poly& b) {
    a.check_ctx(b);
    if (a.coeffs_.size() != b.coeffs_.size()) return false;
    for (size_t k = 0; k < a.coeffs_.size(); ++k)
        if (a.coeffs_[k] != b.coeffs_[k]) return false;
    return true;
}

Poly gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero())
        throw std::invalid_argument("gcd: both polynomials are zero");
    Poly u = a, v = b;
    while (!v.is_zero()) {
        Poly r = u % v;
        u = v;
        v = r;
    }
    return u.monic();
}

std::map<FieldElem, int, ValueLess> roots(const Poly& p) {
    if (p.is_zero()) throw std::invalid_argument("roots: zero polynomial");
    std::map<FieldElem, int, ValueLess> out;
    Poly rest = p;
    for (const auto& cand : enumerate(p.ctx())) {
        if (rest.degree() < 1) break;
        int mult = 0;
        while (rest.degree() >= 1 && rest.eval(cand).is_zero()) {
            rest = rest / Poly::x_minus(cand);
            ++mult;
        }
        if (mult > 0) out.emplace(cand, mult);
    }
    return out;
}

bool splits(const Poly& p) {
    if (p.is_zero()) throw std::invalid_argument("splits: zero polynomial");
    int total = 0;
    for (const auto& [root, mult] : roots(p)) total += mult;
    return total == p.degree();
}

}  // namespace bupoly
