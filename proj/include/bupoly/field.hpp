#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace bupoly {

class FieldElem;

/// Description of a prime field F_p or its quadratic extension F_{p^2}.
///
/// For odd p the extension adjoins alpha with alpha^2 = c, where c is the
/// smallest quadratic non-residue in {2,...,p-1}; for p = 2 the extension is
/// F_4 with alpha^2 = alpha + 1. Contexts are immutable values and compare
/// equal iff they describe the same field with the same construction rule.
struct FieldCtx {
    int p = 2;
    bool quadratic = false;
    int c = 0;  // alpha^2 for odd quadratic contexts, 0 otherwise

    int q() const { return quadratic ? p * p : p; }

    FieldElem elem(long long i, long long j = 0) const;
    FieldElem zero() const;
    FieldElem one() const;
    FieldElem alpha() const;  // quadratic contexts only

    friend bool operator==(const FieldCtx&, const FieldCtx&) = default;
};

bool is_prime(int n);

/// Builds F_p (quadratic = false) or F_{p^2} (quadratic = true).
/// Throws std::invalid_argument unless p is prime.
FieldCtx build_field(int p, bool quadratic);

/// An element i + j*alpha of a FieldCtx; j is always 0 over a prime field.
/// Elements carry their context, and combining elements from different
/// contexts throws std::invalid_argument rather than coercing.
class FieldElem {
public:
    FieldElem(const FieldCtx& ctx, long long i, long long j = 0);

    const FieldCtx& ctx() const { return ctx_; }
    int i() const { return i_; }
    int j() const { return j_; }
    bool is_zero() const { return i_ == 0 && j_ == 0; }
    bool is_one() const { return i_ == 1 && j_ == 0; }

    /// Rank in the order 0, 1, ..., p-1, alpha, 1+alpha, ... (= i + j*p),
    /// used for canonical display and report ordering.
    int value_index() const { return i_ + j_ * ctx_.p; }

    FieldElem operator-() const;
    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator/(const FieldElem& o) const;

    FieldElem inv() const;             // throws on zero
    FieldElem pow(long long e) const;  // e may be negative for nonzero elements

    friend bool operator==(const FieldElem& a, const FieldElem& b);
    friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }

private:
    void check_ctx(const FieldElem& o) const;

    FieldCtx ctx_;
    int i_ = 0;
    int j_ = 0;
};

/// Comparator for element-keyed maps; orders by value_index.
/// Keys of one map must share a context.
struct ValueLess {
    bool operator()(const FieldElem& a, const FieldElem& b) const {
        return a.value_index() < b.value_index();
    }
};

/// All q elements exactly once, ordered lexicographically by (i, j).
std::vector<FieldElem> enumerate(const FieldCtx& ctx);

}  // namespace bupoly
