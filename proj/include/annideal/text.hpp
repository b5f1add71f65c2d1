#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "annideal/field.hpp"

namespace annideal::text {

/// One term c*x^a*z^b; exponents may be negative (inverse forms).
struct Term {
  int x = 0;
  int z = 0;
  FieldElement coeff;
};

/// Parses "c*x^a*z^b + ..." with arbitrary whitespace. Like terms are not merged.
std::vector<Term> parse_terms(const Field& field, std::string_view text);

/// Renders terms in the given order; "0" when empty. Zero coefficients are skipped.
std::string render_terms(const std::vector<Term>& terms);

/// Splits on a separator and trims each piece.
std::vector<std::string> split(std::string_view text, char sep);
std::string_view trim(std::string_view text);

}  // namespace annideal::text
