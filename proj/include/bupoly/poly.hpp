#pragma once

#include <map>
#include <utility>
#include <vector>

#include "bupoly/field.hpp"

namespace bupoly {

/// Dense polynomial over a FieldCtx. Coefficients are stored lowest degree
/// first with no trailing zeros; the zero polynomial has an empty coefficient
/// vector and degree() == -1.
class Poly {
public:
    explicit Poly(const FieldCtx& ctx) : ctx_(ctx) {}
    Poly(const FieldCtx& ctx, std::vector<FieldElem> coeffs);

    static Poly zero(const FieldCtx& ctx) { return Poly(ctx); }
    static Poly one(const FieldCtx& ctx) { return constant(ctx.one()); }
    static Poly constant(const FieldElem& c);
    static Poly x(const FieldCtx& ctx);
    static Poly x_minus(const FieldElem& root);  // x - root, monic linear

    const FieldCtx& ctx() const { return ctx_; }
    const std::vector<FieldElem>& coeffs() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back().is_one(); }

    /// Coefficient of x^k; zero beyond the degree.
    FieldElem coeff(int k) const;
    FieldElem leading() const;

    FieldElem eval(const FieldElem& at) const;
    Poly monic() const;
    Poly pow(long long e) const;

    /// The polynomial P(x + t).
    Poly shifted_arg(const FieldElem& t) const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const FieldElem& s) const;
    Poly operator/(const Poly& o) const;
    Poly operator%(const Poly& o) const;

    /// Quotient and remainder with deg(remainder) < deg(divisor).
    static std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);

    friend bool operator==(const Poly& a, const Poly& b);
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

private:
    void trim();
    void check_ctx(const Poly& o) const;

    FieldCtx ctx_;
    std::vector<FieldElem> coeffs_;
};

/// Monic greatest common divisor; gcd(0, 0) is rejected.
Poly gcd(const Poly& a, const Poly& b);

/// All roots in the ambient field with exact multiplicities, found by trial
/// over enumerate(ctx) followed by repeated division. P must be nonzero.
std::map<FieldElem, int, ValueLess> roots(const Poly& p);

/// True iff the sum of root multiplicities equals deg(P).
bool splits(const Poly& p);

}  // namespace bupoly
