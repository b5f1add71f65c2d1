#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "annideal/invform.hpp"
#include "annideal/viable_pair.hpp"

namespace annideal {

/// s_0, ..., s_{n-1} with s_0 first; n >= 1.
using Sequence = std::vector<FieldElement>;

/// Comma-separated field elements, e.g. "1,0,0,1,1,0,1,0".
Sequence parse_sequence(const Field& field, std::string_view text);
std::string to_string(std::span<const FieldElement> s);
bool is_trivial(std::span<const FieldElement> s);

/// Output of the sequence variant: a viable pair, or (1, 0) for a trivial sequence.
struct SequencePair {
  Form f1;
  Form f2;
  int length = 0;

  bool trivial() const { return f2.is_zero(); }
  /// Usage error for the trivial sentinel.
  ViablePair viable() const;
  friend bool operator==(const SequencePair&, const SequencePair&) = default;
};

struct BmPair {
  UniPoly mu;
  UniPoly mu_prime;
  friend bool operator==(const BmPair&, const BmPair&) = default;
};

/// F^{(s)} = sum s_{-i} x^i z^{1-n-i}; nullopt for a trivial sequence.
std::optional<InverseForm> inverse_form(std::span<const FieldElement> s);
SequencePair viable_pair_seq(std::span<const FieldElement> s);
/// Membership of psi in Ann_s; the zero polynomial is accepted.
bool is_annihilating(const UniPoly& psi, std::span<const FieldElement> s);
int linear_complexity(std::span<const FieldElement> s);
/// Linear complexity of each prefix s_0 ... s_i.
std::vector<int> lc_profile(std::span<const FieldElement> s);
BmPair bm_variant(std::span<const FieldElement> s);
BmPair dehom_pair(const ViablePair& f);
BmPair dehom_pair(const SequencePair& f);
/// (mu^, mu'^ z^{n+1-|mu|-|mu'|}); usage error when that exponent is below 1.
ViablePair hom_pair(const BmPair& p, int n);
UniPoly minimal_polynomial(std::span<const FieldElement> s);
/// Usage error for trivial input.
std::vector<Form> intersect_annihilators(std::span<const FieldElement> s, std::span<const FieldElement> t);

}  // namespace annideal
