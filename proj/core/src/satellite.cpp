#include "bdecat/satellite.hpp"

#include "bdecat/torus.hpp"

namespace bdecat {

PatternComponents decompose(const PatternClass& pc) {
  ExteriorClass x = class_of(pc.cfa);
  return {x.coefficient({1}), x.coefficient({2})};
}

Report check_cfa_weights(const PatternClass& pc) {
  for (const auto& op : pc.cfa.ops) {
    IntervalTriple r{0, 0, 0};
    for (const auto& a : op.algs) {
      IntervalTriple t = triple_of(a);
      for (int i = 0; i < 3; ++i) r[i] += t[i];
    }
    const auto& x = pc.cfa.gens[op.x];
    const auto& y = pc.cfa.gens[op.y];
    Rational diff = x.a.value_or(Rational(0)) - y.a.value_or(Rational(0));
    if (diff != alexander_weight_cfa(r, op.d, pc.winding))
      return Report::fail(Errc::BigradingViolation, "op " + x.name + " -> " + y.name + " has a difference " +
                                                        to_string(diff));
  }
  return Report::pass();
}

LaurentHalf satellite_polynomial(const PatternClass& pc, const CFKComplex& c) {
  TypeDStructure cfd = build_cfd(c);
  return normalize_symmetric(pair(class_of(pc.cfa), substitute(class_of(cfd), pc.winding))).poly;
}

SatelliteReport satellite_report(const PatternClass& pc, const CFKComplex& c) {
  SatelliteReport r;
  TypeDStructure cfd = build_cfd(c);
  r.pattern = decompose(pc);
  r.delta_k = verify_a1(cfd, c);
  r.lhs = normalize_symmetric(pair(class_of(pc.cfa), substitute(class_of(cfd), pc.winding))).poly;
  r.rhs = normalize_symmetric(r.pattern.q * substitute(r.delta_k, pc.winding)).poly;
  if (check_ainf(pc.cfa)) {
    // A finite list of operations bounds the A-infinity side.
    LaurentHalf chi = euler_of_complex(box_tensor(pc.cfa, cfd, pc.winding, false));
    if (!chi.is_zero()) r.box_euler = normalize_symmetric(chi).poly;
  }
  if (!(r.lhs == r.rhs))
    r.verdict = Report::fail(Errc::FormulaMismatch, "pairing gives " + to_string(r.lhs) + " but Q(t) Delta_K(t^k) is " +
                                                        to_string(r.rhs));
  else if (r.box_euler && !(*r.box_euler == r.lhs))
    r.verdict = Report::fail(Errc::FormulaMismatch, "box tensor Euler characteristic " + to_string(*r.box_euler) +
                                                        " differs from the pairing " + to_string(r.lhs));
  return r;
}

Report check_satellite_formula(const PatternClass& pc, const CFKComplex& c) { return satellite_report(pc, c).verdict; }

PatternClass core_pattern() {
  const auto& T = torus_algebra();
  AInfModule m{T.pmc(), torus_refinement(), {{"x", {1}, 0, Rational(0)}}, {}};
  return {m, 1};
}

}  // namespace bdecat
