#pragma once

#include <string>
#include <string_view>

#include "fqreduce/polyalg.hpp"

namespace fqr {

/// "q=<p> f=<c0>,<c1>,...,<cn>", coefficients ascending in decimal.
std::string format_poly(const Poly& f);

/// format_poly plus "^<mult>" when mult > 1.
std::string format_factor(const FactorPower& fp);

/// Inverse of format_poly; whitespace around tokens is ignored. Throws
/// ParseError on malformed text, a composite q, a residue >= q or a zero
/// leading coefficient.
Poly parse_poly(std::string_view text);

/// Inverse of format_factor.
FactorPower parse_factor(std::string_view text);

}  // namespace fqr
