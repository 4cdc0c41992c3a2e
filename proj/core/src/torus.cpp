#include "bdecat/torus.hpp"

#include "bdecat/error.hpp"

namespace bdecat {

namespace {

AlgebraElement chord(const Pmc& pmc, int a, int b) { return a_of(pmc, {{a, b}}, 0); }

}  // namespace

const std::array<std::string, 8>& TorusAlgebra::names() {
  static const std::array<std::string, 8> n{"iota0", "iota1", "rho1", "rho2", "rho3", "rho12", "rho23", "rho123"};
  return n;
}

std::string TorusAlgebra::table_product(const std::string& a, const std::string& b) {
  static const std::map<std::pair<std::string, std::string>, std::string> table{
      {{"rho1", "rho2"}, "rho12"},   {{"rho2", "rho3"}, "rho23"},  {{"rho1", "rho23"}, "rho123"},
      {{"rho12", "rho3"}, "rho123"}, {{"iota0", "iota0"}, "iota0"}, {{"iota1", "iota1"}, "iota1"},
  };
  if (auto it = table.find({a, b}); it != table.end()) return it->second;
  // Idempotents act on either side of a chord.
  static const std::map<std::string, std::pair<std::string, std::string>> ends{
      {"rho1", {"iota0", "iota1"}},  {"rho2", {"iota1", "iota0"}},  {"rho3", {"iota0", "iota1"}},
      {"rho12", {"iota0", "iota0"}}, {"rho23", {"iota1", "iota1"}}, {"rho123", {"iota0", "iota1"}},
  };
  if (auto it = ends.find(b); it != ends.end() && a == it->second.first) return b;
  if (auto it = ends.find(a); it != ends.end() && b == it->second.second) return a;
  return "";
}

TorusAlgebra::TorusAlgebra() : pmc_(Pmc::torus()), basis_(middle_basis(pmc_)) {
  named_["iota0"] = idempotent(pmc_, {1});
  named_["iota1"] = idempotent(pmc_, {2});
  named_["rho1"] = chord(pmc_, 1, 2);
  named_["rho2"] = chord(pmc_, 2, 3);
  named_["rho3"] = chord(pmc_, 3, 4);
  named_["rho12"] = chord(pmc_, 1, 3);
  named_["rho23"] = chord(pmc_, 2, 4);
  named_["rho123"] = chord(pmc_, 1, 4);
  if (basis_->size() != 8) throw Error(Errc::Mismatch, "A(T^2, 0) does not have eight basis elements");
  for (const auto& a : names())
    for (const auto& b : names()) {
      auto expect = table_product(a, b);
      AlgebraElement got = named_[a] * named_[b];
      bool ok = expect.empty() ? got.is_zero() : got == named_[expect];
      if (!ok) throw Error(Errc::Mismatch, "torus table disagrees with strands at " + a + "*" + b);
    }
}

const AlgebraElement& TorusAlgebra::operator[](const std::string& name) const {
  auto it = named_.find(name);
  if (it == named_.end()) throw Error(Errc::ParseError, "unknown torus element " + name);
  return it->second;
}

std::string TorusAlgebra::name_of(const AlgebraElement& a) const {
  for (const auto& [n, e] : named_)
    if (e == a) return n;
  return "";
}

const TorusAlgebra& torus_algebra() {
  static const TorusAlgebra t;
  return t;
}

RefinementData torus_refinement() {
  RefinementData ref;
  ref.base = {1};
  ref.psi[{1}] = identity_grading(4);
  ref.psi[{2}] = GradingElement{Rational(1, 2), {1, 0, 0}};
  return ref;
}

IntervalTriple triple_of(const AlgebraElement& a) {
  GradingElement g = gr_prime(a);
  if (g.alpha.size() != 3) throw Error(Errc::PmcMismatch, "not an element of the torus algebra");
  return {g.alpha[0], g.alpha[1], g.alpha[2]};
}

Rational alexander_weight_cfd(const IntervalTriple& r, long long n) {
  return Rational(n + 1, 2) * r[0] + Rational(n - 1, 2) * r[1] + Rational(-n - 1, 2) * r[2];
}

Rational alexander_weight_cfa(const IntervalTriple& r, long long d, long long p) {
  return Rational(d - p * (r[1] + r[2]));
}

Report check_bigrading(const TypeDStructure& n, long long framing) {
  if (!(n.pmc == Pmc::torus())) return Report::fail(Errc::PmcMismatch, "not a torus-algebra structure");
  const auto& basis = *middle_basis(n.pmc);
  for (const auto& g : n.gens)
    if (!g.a) return Report::fail(Errc::MissingGrading, "generator " + g.name + " has no Alexander grading");
  for (const auto& e : n.delta) {
    const auto& x = n.gens[e.src];
    const auto& y = n.gens[e.dst];
    for (int b : basis.decompose(e.coeff)) {
      const AlgebraElement& el = basis.element(b);
      Rational w = basis.is_idempotent(b) ? Rational(0) : alexander_weight_cfd(triple_of(el), framing);
      int mb = basis.is_idempotent(b) ? 0 : m_of(el, n.pmc, n.ref);
      std::string where = x.name + " -> " + y.name + " via " + basis.label(b);
      if (*x.a - *y.a != w)
        return Report::fail(Errc::BigradingViolation, where + ": a difference " + to_string(*x.a - *y.a) +
                                                          " but weight " + to_string(w));
      if ((x.m - mb - y.m - 1) % 2 != 0) return Report::fail(Errc::BigradingViolation, where + ": m mismatch");
    }
  }
  return Report::pass();
}

}  // namespace bdecat
