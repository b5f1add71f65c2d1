#include "annideal/random.hpp"

namespace annideal {

FieldElement random_element(const Field& field, Rng& rng) {
  if (field.is_finite()) {
    std::uniform_int_distribution<std::int64_t> d(0, static_cast<std::int64_t>(field.characteristic()) - 1);
    return field.from_integer(d(rng));
  }
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 4);
  const long a = num(rng);
  const long b = den(rng);
  return field.from_rational(mpq_class(a, static_cast<unsigned long>(b)));
}

Sequence random_sequence(const Field& field, int n, Rng& rng, bool sparse) {
  std::bernoulli_distribution coin(0.5);
  Sequence s;
  s.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) s.push_back(sparse && coin(rng) ? field.zero() : random_element(field, rng));
  return s;
}

Sequence random_nontrivial_sequence(const Field& field, int n, Rng& rng) {
  for (;;) {
    Sequence s = random_sequence(field, n, rng, std::bernoulli_distribution(0.25)(rng));
    if (!is_trivial(s)) return s;
  }
}

InverseForm random_inverse_form(const Field& field, int degree, Rng& rng) {
  const Sequence s = random_nontrivial_sequence(field, 1 - degree, rng);
  return InverseForm::from_coefficients(field, degree, {s.begin(), s.end()});
}

Form random_form(const Field& field, int degree, Rng& rng) {
  if (degree < 0) throw UsageError("random_form: negative degree");
  for (;;) {
    std::vector<FieldElement> c;
    for (int j = 0; j <= degree; ++j) c.push_back(random_element(field, rng));
    Form f = Form::from_coefficients(field, std::move(c));
    if (!f.is_zero()) return f;
  }
}

}  // namespace annideal
