#pragma once

#include <string>
#include <vector>

#include "bdecat/dmodules.hpp"
#include "bdecat/grothendieck.hpp"

namespace bdecat {

struct CFKGenerator {
  std::string name;
  int maslov = 0;
  int alexander = 0;
};

struct CFKArrow {
  int src = 0;
  int dst = 0;
  int length = 1;
};

// Reduced, simultaneously vertically and horizontally simplified CFK^-.
// Vertical arrows lower A by the length; horizontal arrows raise it.
struct CFKComplex {
  std::vector<CFKGenerator> gens;
  std::vector<CFKArrow> vertical;
  std::vector<CFKArrow> horizontal;
  int tau = 0;

  int index_of(const std::string& name) const;
};

// Generators without vertical (resp. horizontal) arrows.
int xi_v(const CFKComplex& c);
int xi_h(const CFKComplex& c);

// Throws Error(CFKInvariantViolation).
void validate(const CFKComplex& c);

LaurentHalf cfk_euler(const CFKComplex& c);

// Which table row a CFK arrow type uses, and the sign of a on iota0.
struct ChainConvention {
  bool d1_row_for_vertical = true;  // false: D1/D123 chains for horizontal arrows
  int a_sign = 1;

  friend bool operator==(const ChainConvention&, const ChainConvention&) = default;
};

std::vector<ChainConvention> candidate_conventions();
// The first candidate that passes every check on the unknot and the right-handed
// trefoil; computed once and then frozen.
const ChainConvention& calibrated_convention();

// Throws Error(CFKInvariantViolation | CalibrationConflict).
TypeDStructure build_cfd(const CFKComplex& c);
TypeDStructure build_cfd(const CFKComplex& c, const ChainConvention& conv);

// a1 component after normalization; throws Error(Mismatch).
LaurentHalf verify_a1(const TypeDStructure& cfd, const CFKComplex& c);
// Reports A2NonZero.
Report verify_a2_zero(const TypeDStructure& cfd);

CFKComplex unknot_cfk();
CFKComplex right_trefoil_cfk();

}  // namespace bdecat
