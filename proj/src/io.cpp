#include "annideal/io.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace annideal::io {

namespace {

using nlohmann::json;

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

template <class T>
T get(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("JSON is missing key '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("JSON key '") + key + "': " + e.what());
  }
}

json forms_array(std::span<const Form> G) {
  json a = json::array();
  for (const auto& g : G) a.push_back(g.to_string());
  return a;
}

std::vector<Form> parse_forms(const Field& field, const std::vector<std::string>& texts) {
  std::vector<Form> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(Form::parse(field, t));
  return out;
}

std::string pair_text(const TraceRow& r) { return "(" + r.f1.to_string() + ", " + r.f2.to_string() + ")"; }

}  // namespace

std::string inverse_form_json(const InverseForm& F) {
  json c = json::array();
  for (const auto& v : F.coefficients()) c.push_back(v.to_string());
  return json{{"field", F.field().name()}, {"degree", F.degree()}, {"coeffs", c}}.dump();
}

InverseForm inverse_form_from_json(std::string_view text) {
  const json j = parse_json(text);
  const Field field = Field::parse(get<std::string>(j, "field"));
  const int m = get<int>(j, "degree");
  const json& raw = j.at("coeffs");
  if (!raw.is_array()) throw ParseError("JSON 'coeffs' must be an array");
  std::vector<FieldElement> coeffs;
  for (const auto& c : raw) {
    if (c.is_string()) coeffs.push_back(field.parse_element(c.get<std::string>()));
    else if (c.is_number_integer()) coeffs.push_back(field.from_integer(c.get<std::int64_t>()));
    else throw ParseError("JSON coefficient must be a string or an integer");
  }
  if (m > 0 || coeffs.size() != static_cast<std::size_t>(1 - m))
    throw ParseError("inverse form of degree " + std::to_string(m) + " needs " + std::to_string(1 - m) +
                     " coefficients");
  try {
    return InverseForm::from_coefficients(field, m, std::move(coeffs));
  } catch (const UsageError& e) {
    throw ParseError(e.what());
  }
}

std::string result_json(const AnnihilatorResult& r) {
  json j{{"f1", r.pair.f1.to_string()},
         {"f2", r.pair.f2.to_string()},
         {"form_vector", forms_array(r.form_vector)},
         {"degree_vector", r.degree_vector},
         {"lambda", r.lambda},
         {"dimension", r.big_lambda}};
  return j.dump();
}

ResultRecord result_from_json(const Field& field, std::string_view text) {
  const json j = parse_json(text);
  return ResultRecord{Form::parse(field, get<std::string>(j, "f1")),
                      Form::parse(field, get<std::string>(j, "f2")),
                      parse_forms(field, get<std::vector<std::string>>(j, "form_vector")),
                      get<std::vector<int>>(j, "degree_vector"),
                      get<int>(j, "lambda"),
                      get<int>(j, "dimension")};
}

std::string sequence_json(std::span<const FieldElement> s) {
  const SequencePair f = viable_pair_seq(s);
  const BmPair bm = bm_variant(s);
  json j{{"sequence", to_string(s)},
         {"f1", f.f1.to_string()},
         {"f2", f.f2.to_string()},
         {"mu", bm.mu.to_string()},
         {"mu_prime", bm.mu_prime.to_string()},
         {"lc", f.f1.degree()},
         {"lc_profile", lc_profile(s)}};
  return j.dump();
}

std::string forms_json(std::span<const Form> G) { return forms_array(G).dump(); }

std::vector<Form> forms_from_json(const Field& field, std::string_view text) {
  const json j = parse_json(text);
  if (!j.is_array()) throw ParseError("expected a JSON array of polynomials");
  try {
    return parse_forms(field, j.get<std::vector<std::string>>());
  } catch (const json::exception& e) {
    throw ParseError(std::string("polynomial list: ") + e.what());
  }
}

std::string trace_csv(std::span<const TraceRow> rows, bool prefix_length) {
  std::ostringstream out;
  out << "i,q,d,B,f1,f2\n";
  for (const auto& r : rows) {
    out << (prefix_length ? 1 - r.i : r.i) << ',' << (r.q ? r.q->to_string() : "") << ',' << r.d << ','
        << (r.B ? 1 : 0) << ',' << r.f1.to_string() << ',' << r.f2.to_string() << '\n';
  }
  return out.str();
}

std::string trace_table(std::span<const TraceRow> rows, bool prefix_length) {
  std::vector<std::vector<std::string>> cells;
  cells.push_back({prefix_length ? "n" : "i", "F^(i)", "q", "d", "B", "f"});
  for (const auto& r : rows)
    cells.push_back({std::to_string(prefix_length ? 1 - r.i : r.i), r.subform.to_string(),
                     r.q ? r.q->to_string() : "", std::to_string(r.d), r.B ? "1" : "0", pair_text(r)});
  std::vector<std::size_t> width(cells.front().size(), 0);
  for (const auto& row : cells)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  std::ostringstream out;
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out << row[c];
      if (c + 1 < row.size()) out << std::string(width[c] - row[c].size() + 2, ' ');
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace annideal::io
