#pragma once

#include <map>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "bdecat/pmc.hpp"
#include "bdecat/strands.hpp"

// Boost 1.74 mixed rational/integer equality recurses under C++20 rewritten
// comparisons; these exact matches take precedence over its templates.
namespace boost {
inline bool operator==(const rational<long long>& a, long long b) { return a == rational<long long>(b); }
inline bool operator==(const rational<long long>& a, int b) { return a == rational<long long>(b); }
inline bool operator==(long long b, const rational<long long>& a) { return a == rational<long long>(b); }
inline bool operator==(int b, const rational<long long>& a) { return a == rational<long long>(b); }
}  // namespace boost

namespace bdecat {

using Rational = boost::rational<long long>;

std::string to_string(const Rational& q);
// Accepts "3/2", "-1", "2".
Rational parse_rational(const std::string& text);

// (j; alpha) with alpha the multiplicities of the 4k-1 gaps between
// consecutive marked points (the gap containing z is excluded).
struct GradingElement {
  Rational j{0};
  std::vector<long long> alpha;

  friend bool operator==(const GradingElement&, const GradingElement&) = default;
};

using IntervalVector = std::vector<long long>;

// Average multiplicity of the two gaps next to point p (1-based).
Rational multiplicity(const IntervalVector& alpha, int p);
Rational multiplicity(const IntervalVector& alpha, const std::vector<int>& points);
// L(alpha, beta) = m(beta, boundary of alpha).
Rational linking(const IntervalVector& alpha, const IntervalVector& beta);

// Interval class [a, b] of a chord.
IntervalVector interval_of(int n, const ReebChord& c);

GradingElement identity_grading(int n);
GradingElement lambda(int n);
GradingElement gmul(const GradingElement& x, const GradingElement& y);
GradingElement inverse(const GradingElement& x);
GradingElement gpow(const GradingElement& x, int e);

// j == (1/4) #{p : m(alpha, p) half-integral} (mod 1).
bool satisfies_j_invariant(const GradingElement& x);

std::string to_string(const GradingElement& x);

GradingElement gr_prime(int n, const StrandsGenerator& a);
// Throws Error(NotHomogeneous) if the terms carry different gradings.
GradingElement gr_prime(const AlgebraElement& a);

// M_* of the boundary: coefficient of each pair label (index 0 is unused).
std::vector<long long> boundary_on_pairs(const Pmc& pmc, const IntervalVector& alpha);

struct RefinementData {
  Subset base;
  std::map<Subset, GradingElement> psi;

  friend bool operator==(const RefinementData&, const RefinementData&) = default;
};

RefinementData default_refinement(const Pmc& pmc);
// Refinement for -Z: psi(t) = R(psi_Z(complement t))^{-1}, R reversing alpha.
RefinementData reverse_refinement(const Pmc& pmc, const RefinementData& ref);
GradingElement reverse_grading(const GradingElement& x);

// psi(t1) x psi(t2)^{-1}; throws Error(NotMiddleSummand).
GradingElement refine(const GradingElement& x, const Subset& t1, const Subset& t2,
                      const RefinementData& ref);

// Coordinates h with alpha = sum h_i [a(rho_i)], indexed by pair label
// (index 0 unused). Throws Error(NotInGZ).
std::vector<long long> gz_coordinates(const Pmc& pmc, const IntervalVector& alpha);
bool in_GZ(const Pmc& pmc, const IntervalVector& alpha);

// The mod-2 homomorphism on G(Z). Returns 0 or 1.
int f_s(const GradingElement& x, const Pmc& pmc, const Subset& s0);

// Refined grading of a homogeneous element of A(Z, 0).
GradingElement gr(const AlgebraElement& a, const Pmc& pmc, const RefinementData& ref);
// m = f o gr. Throws Error(NotHomogeneous | NotMiddleSummand).
int m_of(const AlgebraElement& a, const Pmc& pmc, const RefinementData& ref);

}  // namespace bdecat
