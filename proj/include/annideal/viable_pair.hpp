#pragma once

#include "annideal/bipoly.hpp"

namespace annideal {

/// Generators (f1, f2) of an annihilator ideal with z not dividing LM(f1),
/// z | f2 and |f1| + |f2| = 2 - m.
struct ViablePair {
  Form f1;
  Form f2;
  int source_degree = 0;

  int d() const { return f2.degree() - f1.degree(); }
  friend bool operator==(const ViablePair&, const ViablePair&) = default;
};

}  // namespace annideal
