#include "bupoly/field.hpp"

namespace bupoly {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; static_cast<long long>(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

FieldCtx build_field(int p, bool quadratic) {
    if (!is_prime(p))
        throw std::invalid_argument("build_field: p must be prime, got " + std::to_string(p));
    FieldCtx ctx;
    ctx.p = p;
    ctx.quadratic = quadratic;
    ctx.c = 0;
    if (quadratic && p > 2) {
        std::vector<char> square(static_cast<size_t>(p), 0);
        for (int z = 0; z < p; ++z) square[static_cast<size_t>((z * z) % p)] = 1;
        for (int z = 2; z < p; ++z) {
            if (!square[static_cast<size_t>(z)]) {
                ctx.c = z;
                break;
            }
        }
        // every odd prime has a non-residue in {2,...,p-1}
    }
    return ctx;
}

FieldElem FieldCtx::elem(long long i, long long j) const { return FieldElem(*this, i, j); }
FieldElem FieldCtx::zero() const { return FieldElem(*this, 0); }
FieldElem FieldCtx::one() const { return FieldElem(*this, 1); }

FieldElem FieldCtx::alpha() const {
    if (!quadratic) throw std::invalid_argument("alpha: prime-field context has no alpha");
    return FieldElem(*this, 0, 1);
}

namespace {
int mod_reduce(long long v, int p) {
    long long r = v % p;
    if (r < 0) r += p;
    return static_cast<int>(r);
}
}  // namespace

FieldElem::FieldElem(const FieldCtx& ctx, long long i, long long j) : ctx_(ctx) {
    i_ = mod_reduce(i, ctx_.p);
    j_ = mod_reduce(j, ctx_.p);
    if (!ctx_.quadratic && j_ != 0)
        throw std::invalid_argument("FieldElem: alpha component in a prime-field context");
}

void FieldElem::check_ctx(const FieldElem& o) const {
    if (!(ctx_ == o.ctx_))
        throw std::invalid_argument("FieldElem: mixing elements of different field contexts");
}

bool operator==(const FieldElem& a, const FieldElem& b) {
    a.check_ctx(b);
    return a.i_ == b.i_ && a.j_ == b.j_;
}

FieldElem FieldElem::operator-() const { return FieldElem(ctx_, -i_, -j_); }

FieldElem FieldElem::operator+(const FieldElem& o) const {
    check_ctx(o);
    return FieldElem(ctx_, i_ + o.i_, j_ + o.j_);
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
    check_ctx(o);
    return FieldElem(ctx_, i_ - o.i_, j_ - o.j_);
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
    check_ctx(o);
    const long long a = i_, b = j_, c = o.i_, d = o.j_;
    if (!ctx_.quadratic) return FieldElem(ctx_, a * c);
    if (ctx_.p == 2) {
        // alpha^2 = alpha + 1
        return FieldElem(ctx_, a * c + b * d, a * d + b * c + b * d);
    }
    // alpha^2 = ctx_.c
    return FieldElem(ctx_, a * c + static_cast<long long>(ctx_.c) * b * d, a * d + b * c);
}

FieldElem FieldElem::pow(long long e) const {
    if (e < 0) return inv().pow(-e);
    FieldElem base = *this;
    FieldElem acc = ctx_.one();
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

FieldElem FieldElem::inv() const {
    if (is_zero()) throw std::invalid_argument("FieldElem::inv: zero has no inverse");
    return pow(ctx_.q() - 2);
}

FieldElem FieldElem::operator/(const FieldElem& o) const { return *this * o.inv(); }

std::vector<FieldElem> enumerate(const FieldCtx& ctx) {
    std::vector<FieldElem> out;
    out.reserve(static_cast<size_t>(ctx.q()));
    const int jmax = ctx.quadratic ? ctx.p : 1;
    for (int i = 0; i < ctx.p; ++i)
        for (int j = 0; j < jmax; ++j) out.push_back(FieldElem(ctx, i, j));
    return out;
}

}  // namespace bupoly
