#pragma once

// Verdict types shared by all congruence verifiers, plus the unit-root
// comparison record. Serialization to JSON lives in json_io.

#include <map>
#include <optional>
#include <string>

#include "dworkcong/exactnum.hpp"

namespace dwork {

struct FailureLocation {
  std::string where;     // monomial / coefficient index / matrix entry
  std::string expected;  // left-hand side value at that spot
  std::string actual;    // right-hand side value
};

struct CongruenceReport {
  std::string claim;                          // e.g. "mev", "any-m", "main5"
  std::map<std::string, std::string> params;  // p, s, m, T, M, window, ...
  bool holds = false;
  std::optional<FailureLocation> failure;
  double millis = 0.0;

  std::string summary() const;
};

struct UnitRootResult {
  int64_t p = 0;
  int s = 0;
  std::string point;                    // the lifted point used (decimal)
  std::optional<Int> a_p;               // trace from the point-count oracle
  std::optional<ResidueInt> lambda_trunc;
  std::optional<ResidueInt> lambda_hensel;
  bool agree = false;                   // both present and equal mod p^s

  std::string summary() const;
};

// Negative-control hook: before comparison, a verifier adds +1 to one
// coefficient of the first series/matrix object it builds. `index` selects
// the coefficient (power of t, or the index-th key of the first entry).
struct PerturbSpec {
  int index = 0;
};

}  // namespace dwork
