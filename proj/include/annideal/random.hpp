#pragma once

#include <cstdint>
#include <random>

#include "annideal/invform.hpp"
#include "annideal/sequence.hpp"

namespace annideal {

using Rng = std::mt19937_64;

/// Uniform over a finite field; over Q a fraction a/b with |a| <= 9, 1 <= b <= 4.
FieldElement random_element(const Field& field, Rng& rng);
/// Roughly half the terms vanish when sparse is set.
Sequence random_sequence(const Field& field, int n, Rng& rng, bool sparse = false);
Sequence random_nontrivial_sequence(const Field& field, int n, Rng& rng);
InverseForm random_inverse_form(const Field& field, int degree, Rng& rng);
/// Nonzero; usage error for a negative degree.
Form random_form(const Field& field, int degree, Rng& rng);

}  // namespace annideal
