#include "bdecat/grothendieck.hpp"

#include <sstream>

#include "bdecat/error.hpp"

namespace bdecat {

LaurentHalf LaurentHalf::monomial(long long coeff, Rational exponent) {
  Rational d = exponent * 2;
  if (d.denominator() != 1) throw Error(Errc::ParseError, "exponent is not a half-integer");
  return monomial_doubled(coeff, d.numerator());
}

LaurentHalf LaurentHalf::monomial_doubled(long long coeff, long long doubled_exponent) {
  LaurentHalf p;
  p.add_term(doubled_exponent, coeff);
  return p;
}

LaurentHalf LaurentHalf::from_coefficients(long long lowest_exponent, const std::vector<long long>& coeffs) {
  LaurentHalf p;
  for (size_t i = 0; i < coeffs.size(); ++i) p.add_term(2 * (lowest_exponent + static_cast<long long>(i)), coeffs[i]);
  return p;
}

void LaurentHalf::add_term(long long e2, long long c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e2, 0);
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

long long LaurentHalf::coefficient_doubled(long long e2) const {
  auto it = terms_.find(e2);
  return it == terms_.end() ? 0 : it->second;
}

long long LaurentHalf::at_one() const {
  long long s = 0;
  for (auto [e, c] : terms_) s += c;
  return s;
}

LaurentHalf& LaurentHalf::operator+=(const LaurentHalf& o) {
  for (auto [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentHalf& LaurentHalf::operator-=(const LaurentHalf& o) {
  for (auto [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentHalf operator*(const LaurentHalf& a, const LaurentHalf& b) {
  LaurentHalf p;
  for (auto [e1, c1] : a.terms_)
    for (auto [e2, c2] : b.terms_) p.add_term(e1 + e2, c1 * c2);
  return p;
}

LaurentHalf LaurentHalf::operator-() const { return scaled(-1); }

LaurentHalf LaurentHalf::scaled(long long c) const {
  LaurentHalf p;
  for (auto [e, v] : terms_) p.add_term(e, v * c);
  return p;
}

LaurentHalf LaurentHalf::shifted_doubled(long long e2) const {
  LaurentHalf p;
  for (auto [e, v] : terms_) p.add_term(e + e2, v);
  return p;
}

LaurentHalf LaurentHalf::inverted() const {
  LaurentHalf p;
  for (auto [e, v] : terms_) p.add_term(-e, v);
  return p;
}

std::string exponent_string(long long doubled) {
  if (doubled % 2 == 0) return std::to_string(doubled / 2);
  return std::to_string(doubled) + "/2";
}

namespace {

std::string power(long long e2) {
  long long a = e2 < 0 ? -e2 : e2;
  std::string body;
  if (a == 2) body = "t";
  else if (a % 2 == 0) body = "t^" + std::to_string(a / 2);
  else body = "t^(" + std::to_string(a) + "/2)";
  return e2 < 0 ? "1/" + body : body;
}

}  // namespace

std::string to_string(const LaurentHalf& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    auto [e2, c] = *it;
    long long mag = c < 0 ? -c : c;
    if (first) out << (c < 0 ? "-" : "");
    else out << (c < 0 ? " - " : " + ");
    first = false;
    if (e2 == 0) {
      out << mag;
    } else {
      if (mag != 1) out << mag << "*";
      out << power(e2);
    }
  }
  return out.str();
}

ExteriorClass ExteriorClass::basis(int genus, const Subset& s, LaurentHalf coeff) {
  ExteriorClass x(genus);
  x.add(s, coeff);
  return x;
}

LaurentHalf ExteriorClass::coefficient(const Subset& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? LaurentHalf{} : it->second;
}

void ExteriorClass::add(const Subset& s, const LaurentHalf& c) {
  auto [it, inserted] = terms_.try_emplace(s);
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

ExteriorClass& ExteriorClass::operator+=(const ExteriorClass& o) {
  if (genus_ != o.genus_) throw Error(Errc::GenusMismatch, "adding classes of different genus");
  for (const auto& [s, c] : o.terms_) add(s, c);
  return *this;
}

ExteriorClass ExteriorClass::scaled(const LaurentHalf& c) const {
  ExteriorClass x(genus_);
  for (const auto& [s, v] : terms_) x.add(s, v * c);
  return x;
}

std::string to_string(const ExteriorClass& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [s, c] : x.terms()) {
    if (!out.empty()) out += " + ";
    out += "(" + to_string(c) + ")*a{";
    for (size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
    out += "}";
  }
  return out;
}

namespace {

template <class Gens>
ExteriorClass class_from(int genus, const Gens& gens) {
  ExteriorClass x(genus);
  for (const auto& g : gens) {
    Rational a = g.a.value_or(Rational(0));
    x.add(g.idem, LaurentHalf::monomial(g.m % 2 == 0 ? 1 : -1, a));
  }
  return x;
}

}  // namespace

ExteriorClass class_of(const TypeDStructure& n) { return class_from(n.pmc.genus(), n.gens); }
ExteriorClass class_of(const AInfModule& m) { return class_from(m.pmc.genus(), m.gens); }

LaurentHalf pair(const ExteriorClass& x, const ExteriorClass& y) {
  if (x.genus() != y.genus())
    throw Error(Errc::GenusMismatch, "genus " + std::to_string(x.genus()) + " vs " + std::to_string(y.genus()));
  LaurentHalf out;
  for (const auto& [s, c] : x.terms()) out += c * y.coefficient(s);
  return out;
}

LaurentHalf substitute(const LaurentHalf& p, long long w) {
  LaurentHalf out;
  for (auto [e, c] : p.terms()) out += LaurentHalf::monomial_doubled(c, e * w);
  return out;
}

ExteriorClass substitute(const ExteriorClass& x, long long w) {
  ExteriorClass out(x.genus());
  for (const auto& [s, c] : x.terms()) out.add(s, substitute(c, w));
  return out;
}

Normalized normalize_symmetric(const LaurentHalf& p) {
  if (p.is_zero()) throw Error(Errc::ZeroPolynomial, "cannot normalize the zero polynomial");
  // The only shift that can make q(t) = q(1/t) centers the exponent range.
  LaurentHalf q = p.shifted_doubled(-(p.min_doubled() + p.max_doubled()) / 2);
  if ((p.min_doubled() + p.max_doubled()) % 2 != 0) {
    // Odd doubled span: centering needs a quarter shift, never symmetric.
    return {p.terms().rbegin()->second < 0 ? -p : p, false};
  }
  Normalized out;
  out.symmetric = (q == q.inverted());
  long long v = q.at_one();
  bool flip = out.symmetric && v != 0 ? v < 0 : q.terms().rbegin()->second < 0;
  out.poly = flip ? -q : q;
  return out;
}

LaurentHalf euler_of_complex(const ChainComplex& c) {
  LaurentHalf out;
  for (const auto& g : c.gens) out += LaurentHalf::monomial(g.m % 2 == 0 ? 1 : -1, g.a.value_or(Rational(0)));
  return out;
}

}  // namespace bdecat
