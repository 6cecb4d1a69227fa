#pragma once

#include <string>
#include <string_view>

#include "planelie/field.hpp"
#include "planelie/report.hpp"

namespace planelie {

// Surface syntax (whitespace-insensitive):
//
//   field    := ['+'|'-'] term (('+'|'-') term)*
//   term     := factor ('*' factor)*
//   factor   := rational | 'sqrt2' | 'exp(' rational '*x' ')' | 'exp(x)'
//             | 'x' ['^' rational] | 'y' ['^' rational] | 'dx' | 'dy'
//             | '(' field ')'
//   rational := ['-'] integer ['/' positive-integer]
//
// Products distribute over parenthesized sums. After expansion every
// product of a field carries exactly one of dx, dy. Note that `y^2/3` reads
// as y^(2/3).

/// ParseError on malformed text, MixedDirections when a product has zero or
/// several direction atoms.
VectorField parse_field(std::string_view text,
                        const std::string& chart = kDefaultChart);

/// Same grammar without direction atoms; yields a coefficient function.
CoefFn parse_function(std::string_view text);

std::string print_rational(const Rational& q);
std::string print_scalar(const Scalar& c);
std::string print_coef(const CoefFn& f);
/// Canonical rendering: dx terms then dy terms, each in monomial order,
/// e.g. "dx + y*dy"; the zero field prints as "0".
std::string print_field(const VectorField& W);

/// One JSON object (no trailing newline) with fields claim_id, anchor,
/// computed, expected, status, note.
std::string report_json(const ClaimReport& r);
std::string report_text(const ClaimReport& r);

}  // namespace planelie
