#pragma once

#include <optional>
#include <vector>

#include "annideal/invform.hpp"
#include "annideal/viable_pair.hpp"

namespace annideal {

/// One iteration of the viable-pair construction, for the subform of degree i.
struct TraceRow {
  int i = 0;
  InverseForm subform;
  /// Delta1 / Delta2; absent on the initial row.
  std::optional<FieldElement> q;
  int d = 0;
  /// The next iteration changes length: its discrepancy is nonzero and d > 0.
  bool B = false;
  Form f1;
  Form f2;
};

struct AuxiliaryTriple {
  int m_prime = 0;
  Form f1_prime;
  FieldElement delta_prime;
};

struct AnnihilatorResult {
  ViablePair pair;
  std::vector<Form> form_vector;
  std::vector<int> degree_vector;
  int lambda = 0;
  int big_lambda = 0;
  std::optional<AuxiliaryTriple> triple;
  /// lambda of F^{(i)} for m <= i <= nu.
  std::vector<int> lambda_profile;
};

struct TracedPair {
  ViablePair pair;
  std::vector<TraceRow> trace;
};

struct SyzygyTriple {
  Form s1;
  Form s2;
  FieldElement s3;
};

/// x^{max(d,0)} f1 - q x^{-min(d,0)} f2 with d = |f2| - |f1|.
Form ominus(const Form& f1, const Form& f2, int d, const FieldElement& q);

ViablePair viable_pair(const InverseForm& F);
TracedPair viable_pair_traced(const InverseForm& F);

/// Minimal Groebner basis F with degree vector N; structural properties are
/// checked and reported as InvariantViolation.
AnnihilatorResult form_vector(const InverseForm& F);
std::vector<Form> reduced_gb(const InverseForm& F);

int lambda(const InverseForm& F);
std::vector<int> lambda_profile(const InverseForm& F);
int big_lambda(const InverseForm& F);
/// dim_k R / I_F.
int dimension(const InverseForm& F);

std::optional<AuxiliaryTriple> essential_triple(const InverseForm& F);

/// (s1, s2, s3) with s1 F1 + s2 F2 + s3 F3 = 0; usage error when |F| < 3.
SyzygyTriple syzygy_triple(const AnnihilatorResult& result);

bool is_viable(const ViablePair& pair, const InverseForm& F);

}  // namespace annideal
