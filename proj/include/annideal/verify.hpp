#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace annideal {

struct VerifyCheck {
  std::string name;
  std::uint64_t seed = 0;
  std::size_t cases = 0;
  bool passed = false;
  /// First counterexample or error message.
  std::string detail;
};

/// Cross-checks the fast paths against the brute-force oracles.
std::vector<VerifyCheck> run_verification(std::uint64_t seed);

}  // namespace annideal
