#include "annideal/text.hpp"

#include <cctype>

namespace annideal::text {

namespace {

class TermParser {
 public:
  TermParser(const Field& field, std::string_view src) : field_(field), src_(src) {}

  std::vector<Term> run() {
    std::vector<Term> terms;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = get() == '-';
      skip_ws();
    }
    while (true) {
      Term t = term();
      if (negative) t.coeff = -t.coeff;
      terms.push_back(std::move(t));
      skip_ws();
      if (at_end()) break;
      char c = get();
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      negative = c == '-';
      skip_ws();
    }
    return terms;
  }

 private:
  Term term() {
    Term t{0, 0, field_.one()};
    while (true) {
      skip_ws();
      if (at_end()) fail("missing factor");
      char c = peek();
      if (c == 'x' || c == 'z') {
        get();
        int e = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
          get();
          skip_ws();
          bool neg = false;
          if (!at_end() && peek() == '-') {
            neg = true;
            get();
          }
          std::string digits = number();
          e = std::stoi(digits);
          if (neg) e = -e;
        }
        (c == 'x' ? t.x : t.z) += e;
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        std::string lit = number();
        skip_ws();
        if (!at_end() && peek() == '/') {
          get();
          skip_ws();
          if (field_.is_finite()) fail("fractions are only accepted over q");
          lit += "/" + number();
        }
        t.coeff *= field_.parse_element(lit);
      } else {
        fail(std::string("unexpected character '") + c + "'");
      }
      skip_ws();
      if (!at_end() && peek() == '*') {
        get();
        continue;
      }
      return t;
    }
  }

  std::string number() {
    std::string out;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) out += get();
    if (out.empty()) fail("expected a number");
    return out;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= src_.size(); }
  char peek() const { return src_[pos_]; }
  char get() { return src_[pos_++]; }
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("polynomial '" + std::string(src_) + "' at offset " + std::to_string(pos_) +
                     ": " + why);
  }

  const Field& field_;
  std::string_view src_;
  std::size_t pos_ = 0;
};

void append_var(std::string& out, char var, int e) {
  if (e == 0) return;
  if (!out.empty() && out.back() != ' ' && out.back() != '-') out += '*';
  out += var;
  if (e != 1) out += "^" + std::to_string(e);
}

}  // namespace

std::vector<Term> parse_terms(const Field& field, std::string_view text) {
  return TermParser(field, text).run();
}

std::string render_terms(const std::vector<Term>& terms) {
  std::string out;
  for (const Term& t : terms) {
    if (t.coeff.is_zero()) continue;
    bool negative = !t.coeff.field().is_finite() && sgn(t.coeff.rational()) < 0;
    FieldElement mag = negative ? -t.coeff : t.coeff;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    bool constant = t.x == 0 && t.z == 0;
    if (constant || !mag.is_one()) out += mag.to_string();
    append_var(out, 'x', t.x);
    append_var(out, 'z', t.z);
  }
  return out.empty() ? "0" : out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = text.find(sep, start);
    out.emplace_back(trim(text.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace annideal::text
