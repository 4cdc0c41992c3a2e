#pragma once

#include <map>
#include <string>

#include "bdecat/combinatorics.hpp"
#include "bdecat/dmodules.hpp"
#include "bdecat/grading.hpp"

namespace bdecat {

// Laurent polynomial in t^{1/2}. Exponents are stored doubled.
class LaurentHalf {
 public:
  LaurentHalf() = default;
  static LaurentHalf monomial(long long coeff, Rational exponent);
  static LaurentHalf monomial_doubled(long long coeff, long long doubled_exponent);
  // Polynomial in integer exponents, lowest first.
  static LaurentHalf from_coefficients(long long lowest_exponent, const std::vector<long long>& coeffs);

  const std::map<long long, long long>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  long long coefficient_doubled(long long e2) const;
  long long at_one() const;
  long long min_doubled() const { return terms_.begin()->first; }
  long long max_doubled() const { return terms_.rbegin()->first; }

  LaurentHalf& operator+=(const LaurentHalf& o);
  LaurentHalf& operator-=(const LaurentHalf& o);
  friend LaurentHalf operator+(LaurentHalf a, const LaurentHalf& b) { return a += b; }
  friend LaurentHalf operator-(LaurentHalf a, const LaurentHalf& b) { return a -= b; }
  friend LaurentHalf operator*(const LaurentHalf& a, const LaurentHalf& b);
  LaurentHalf operator-() const;
  LaurentHalf scaled(long long c) const;
  LaurentHalf shifted_doubled(long long e2) const;
  // t -> t^{-1}
  LaurentHalf inverted() const;

  friend bool operator==(const LaurentHalf&, const LaurentHalf&) = default;

 private:
  void add_term(long long e2, long long c);
  std::map<long long, long long> terms_;
};

std::string to_string(const LaurentHalf& p);
// Exponents serialize as "n/2" or "n".
std::string exponent_string(long long doubled);

class ExteriorClass {
 public:
  ExteriorClass() = default;
  explicit ExteriorClass(int genus) : genus_(genus) {}
  static ExteriorClass basis(int genus, const Subset& s, LaurentHalf coeff);

  int genus() const { return genus_; }
  const std::map<Subset, LaurentHalf>& terms() const { return terms_; }
  LaurentHalf coefficient(const Subset& s) const;
  bool is_zero() const { return terms_.empty(); }
  void add(const Subset& s, const LaurentHalf& c);

  ExteriorClass& operator+=(const ExteriorClass& o);
  friend ExteriorClass operator+(ExteriorClass a, const ExteriorClass& b) { return a += b; }
  ExteriorClass scaled(const LaurentHalf& c) const;

  friend bool operator==(const ExteriorClass&, const ExteriorClass&) = default;

 private:
  int genus_ = 0;
  std::map<Subset, LaurentHalf> terms_;
};

std::string to_string(const ExteriorClass& x);

ExteriorClass class_of(const TypeDStructure& n);
ExteriorClass class_of(const AInfModule& m);

// Throws Error(GenusMismatch).
LaurentHalf pair(const ExteriorClass& x, const ExteriorClass& y);

LaurentHalf substitute(const LaurentHalf& p, long long w);
ExteriorClass substitute(const ExteriorClass& x, long long w);

struct Normalized {
  LaurentHalf poly;
  bool symmetric = true;  // false means NotSymmetrizable
};

// Throws Error(ZeroPolynomial).
Normalized normalize_symmetric(const LaurentHalf& p);

LaurentHalf euler_of_complex(const ChainComplex& c);

}  // namespace bdecat
