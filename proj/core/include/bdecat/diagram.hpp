#pragma once

#include <optional>
#include <vector>

#include "bdecat/combinatorics.hpp"
#include "bdecat/error.hpp"
#include "bdecat/grothendieck.hpp"
#include "bdecat/intmat.hpp"
#include "bdecat/pmc.hpp"

namespace bdecat {

struct DiagramPoint {
  bool on_arc = true;
  int alpha = 1;  // 1-based arc (in lower-endpoint order) or circle index
  int beta = 1;   // 1-based
  int sign = 1;

  friend bool operator==(const DiagramPoint&, const DiagramPoint&) = default;
};

// Signed incidence data of a bordered Heegaard diagram.
struct BorderedDiagram {
  Pmc pmc;
  int genus = 0;
  int alpha_circles = 0;
  std::vector<DiagramPoint> points;

  int k() const { return pmc.genus(); }
  friend bool operator==(const BorderedDiagram&, const BorderedDiagram&) = default;
};

// Throws Error(BadIndex).
void validate(const BorderedDiagram& d);

struct DiagramGenerator {
  std::vector<int> points;  // index into d.points, one per beta circle
  Subset occupied;          // o(x)
  int sigma_x_sign = 1;
  int sigma_o_sign = 1;
  int sign = 1;  // s(x)
  Subset idem_d() const;    // complement of o(x) in [2k]
};

std::vector<DiagramGenerator> enumerate_generators(const BorderedDiagram& d);

// (g + k) x g, rows alpha circles then arcs 1..2k.
IntMatrix intersection_matrix(const BorderedDiagram& d);

// Integer coefficients per k-subset of arcs (t-free).
using IntegerClass = std::map<Subset, BigInt>;

IntegerClass cfd_class_from_determinants(const BorderedDiagram& d);
// sum over generators of s(y) a_{I_D(y)}
IntegerClass signed_generator_class(const BorderedDiagram& d);
ExteriorClass to_exterior(int genus, const IntegerClass& c);

// det M_s = eps sgn(sigma_o) sum_{I_D(y) = s} s(y) for one eps in {+1, -1}.
Report check_duality(const BorderedDiagram& d);

struct HomologyKernel {
  int b1_rel = 0;
  std::optional<BigInt> order;  // empty when infinite
  IntegerClass kernel_wedge;
};

// Assumes the split pmc, where arcs 2i-1 and 2i are dual on F.
HomologyKernel homology_kernel(const BorderedDiagram& d);
// |H1(Y, dY)| from the Smith form of the relative presentation; empty when infinite.
std::optional<BigInt> presentation_order(const BorderedDiagram& d);

Report verify_cfdker(const BorderedDiagram& d);

// Adds the (g-k+j)-th row to the (g-k+i)-th row (arcs i, j are 1-based).
// Throws Error(BadIndex).
IntMatrix arc_slide_rows(const IntMatrix& m, int alpha_circles, int i, int j);

std::string to_string(const IntegerClass& c);

}  // namespace bdecat
