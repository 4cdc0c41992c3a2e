#pragma once

#include <array>
#include <map>
#include <memory>
#include <string>

#include "bdecat/dmodules.hpp"
#include "bdecat/grading.hpp"
#include "bdecat/strands.hpp"

namespace bdecat {

// Multiplicities (r1, r2, r3) of the three boundary intervals.
using IntervalTriple = std::array<long long, 3>;

class TorusAlgebra {
 public:
  // Builds the eight elements from strands and checks the product table;
  // throws Error(Mismatch) if strands disagrees with the table.
  TorusAlgebra();

  const Pmc& pmc() const { return pmc_; }
  const AlgebraBasis& basis() const { return *basis_; }
  // iota0, iota1, rho1, rho2, rho3, rho12, rho23, rho123.
  const AlgebraElement& operator[](const std::string& name) const;
  static const std::array<std::string, 8>& names();
  // Name of a basis element of A(T^2, 0), empty if not one of the eight.
  std::string name_of(const AlgebraElement& a) const;
  // Product according to the table, as a name or "" for zero.
  static std::string table_product(const std::string& a, const std::string& b);

 private:
  Pmc pmc_;
  std::shared_ptr<const AlgebraBasis> basis_;
  std::map<std::string, AlgebraElement> named_;
};

const TorusAlgebra& torus_algebra();

// Refinement with base iota0 = {1} and psi(iota1) = (1/2; 1, 0, 0).
RefinementData torus_refinement();

IntervalTriple triple_of(const AlgebraElement& a);

Rational alexander_weight_cfd(const IntervalTriple& r, long long n);
Rational alexander_weight_cfa(const IntervalTriple& r, long long d, long long p);

// Throws nothing; reports BigradingViolation.
Report check_bigrading(const TypeDStructure& n, long long framing);

}  // namespace bdecat
