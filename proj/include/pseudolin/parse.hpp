#pragma once

#include "pseudolin/arith.hpp"
#include "pseudolin/ore.hpp"

#include <string_view>

namespace pseudolin {

/// p / q in lowest terms, q with integer content 1 and positive leading
/// coefficient.
struct RatFun2 {
    BiPoly p, q;
};

/// Expressions use + - * / ^, integer literals, x, y, Dx and parentheses;
/// whitespace is ignored. Errors are ParseError with the byte offset.
RatFun2 parse_ratfun2(std::string_view text);
BiPoly parse_bipoly(std::string_view text);
/// sum p_i(x) Dx^i with polynomial coefficients; products do not commute
/// (Dx*x = x*Dx + 1).
OrePoly parse_operator(std::string_view text);
/// Rational function in x alone.
RatFun parse_ratfun(std::string_view text);

} // namespace pseudolin
