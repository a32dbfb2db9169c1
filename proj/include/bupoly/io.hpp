#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "bupoly/divfun.hpp"

namespace bupoly {

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Element syntax: `i`, `a`, `j*a`, `i+a`, `i+j*a` with decimal residues and
/// `a` denoting alpha. Printing is canonical and round-trips through parsing.
std::string to_string(const FieldElem& e);
FieldElem parse_elem(const FieldCtx& ctx, std::string_view text);

/// Dense syntax: sum of `<coef>*x^<k>` terms, highest degree first, e.g.
/// `x^2+(1+a)*x+1`. Compound coefficients are parenthesized on output.
std::string to_string(const Poly& p);
Poly parse_poly(const FieldCtx& ctx, std::string_view text);

/// Factored syntax: `(x-<elem>)^<exp>` factors joined by `*`. The sign inside
/// a factor applies to the whole trailing element, so `(x+1+a)` is x+(1+a).
/// Output uses `+` in characteristic 2 and `-` otherwise.
std::string to_string(const SplittingPoly& s);
SplittingPoly parse_splitting(const FieldCtx& ctx, std::string_view text);

std::string to_string(const FieldCtx& ctx);

}  // namespace bupoly
