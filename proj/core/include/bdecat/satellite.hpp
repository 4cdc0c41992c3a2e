#pragma once

#include <optional>

#include "bdecat/cfk2cfd.hpp"
#include "bdecat/dmodules.hpp"
#include "bdecat/grothendieck.hpp"

namespace bdecat {

// CFA of a pattern in the 0-framed solid torus, with its winding number.
struct PatternClass {
  AInfModule cfa;
  int winding = 1;
};

struct PatternComponents {
  LaurentHalf q;  // a1 coefficient
  LaurentHalf p;  // a2 coefficient
};

PatternComponents decompose(const PatternClass& pc);

// a(x) - a(y) = alexander_weight_cfa(r, d, p) on every op; reports BigradingViolation.
Report check_cfa_weights(const PatternClass& pc);

LaurentHalf satellite_polynomial(const PatternClass& pc, const CFKComplex& c);

struct SatelliteReport {
  PatternComponents pattern;
  LaurentHalf delta_k;     // normalized Alexander polynomial of the companion
  LaurentHalf lhs;         // satellite_polynomial
  LaurentHalf rhs;         // normalized Q(t) * Delta_K(t^k)
  std::optional<LaurentHalf> box_euler;  // normalized chi of the box tensor, when computed
  Report verdict;
};

SatelliteReport satellite_report(const PatternClass& pc, const CFKComplex& c);
// Reports FormulaMismatch.
Report check_satellite_formula(const PatternClass& pc, const CFKComplex& c);

PatternClass core_pattern();

}  // namespace bdecat
