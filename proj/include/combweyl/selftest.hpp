#pragma once

#include <string>
#include <vector>

namespace combweyl {

struct SelftestResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Fast oracle cross-checks (seconds): lattice vs enumeration, Eq-13 tooth
/// sum vs rectangle count, DtN positivity, inertia vs dense Jacobi, and the
/// Euler-Maclaurin identity.
std::vector<SelftestResult> run_selftest(unsigned seed = 20261014);

}  // namespace combweyl
