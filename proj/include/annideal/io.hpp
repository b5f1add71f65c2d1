#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "annideal/annihilator.hpp"
#include "annideal/sequence.hpp"

namespace annideal::io {

/// {"field", "degree", "coeffs": [F_m ... F_0]} with coefficients as strings.
std::string inverse_form_json(const InverseForm& F);
InverseForm inverse_form_from_json(std::string_view text);

/// {"f1", "f2", "form_vector", "degree_vector", "lambda", "dimension"}.
std::string result_json(const AnnihilatorResult& r);

struct ResultRecord {
  Form f1;
  Form f2;
  std::vector<Form> form_vector;
  std::vector<int> degree_vector;
  int lambda = 0;
  int dimension = 0;
  friend bool operator==(const ResultRecord&, const ResultRecord&) = default;
};
ResultRecord result_from_json(const Field& field, std::string_view text);

/// Adds "mu", "mu_prime", "lc", "lc_profile" to the pair; "f2" is "0" for a trivial sequence.
std::string sequence_json(std::span<const FieldElement> s);

/// JSON list of canonical polynomial strings.
std::string forms_json(std::span<const Form> G);
std::vector<Form> forms_from_json(const Field& field, std::string_view text);

/// Header "i,q,d,B,f1,f2". With prefix_length the first column is 1 - i.
std::string trace_csv(std::span<const TraceRow> rows, bool prefix_length = false);
/// Aligned columns i, F^(i), q, d, B, f.
std::string trace_table(std::span<const TraceRow> rows, bool prefix_length = false);

}  // namespace annideal::io
