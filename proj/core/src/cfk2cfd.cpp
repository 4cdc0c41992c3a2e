#include "bdecat/cfk2cfd.hpp"

#include <map>

#include "bdecat/error.hpp"
#include "bdecat/torus.hpp"

namespace bdecat {

int CFKComplex::index_of(const std::string& name) const {
  for (size_t i = 0; i < gens.size(); ++i)
    if (gens[i].name == name) return static_cast<int>(i);
  return -1;
}

namespace {

std::vector<int> untouched(const CFKComplex& c, const std::vector<CFKArrow>& arrows) {
  std::vector<int> hit(c.gens.size(), 0), out;
  for (const auto& a : arrows) {
    hit[a.src] = 1;
    hit[a.dst] = 1;
  }
  for (size_t i = 0; i < hit.size(); ++i)
    if (!hit[i]) out.push_back(static_cast<int>(i));
  return out;
}

void violation(const std::string& what) { throw Error(Errc::CFKInvariantViolation, what); }

}  // namespace

int xi_v(const CFKComplex& c) {
  auto u = untouched(c, c.vertical);
  if (u.size() != 1) violation("expected exactly one generator without vertical arrows");
  return u.front();
}

int xi_h(const CFKComplex& c) {
  auto u = untouched(c, c.horizontal);
  if (u.size() != 1) violation("expected exactly one generator without horizontal arrows");
  return u.front();
}

void validate(const CFKComplex& c) {
  const int n = static_cast<int>(c.gens.size());
  if (n == 0) violation("no generators");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (c.gens[i].name == c.gens[j].name) violation("duplicate generator " + c.gens[i].name);
  auto check = [&](const std::vector<CFKArrow>& arrows, bool vertical) {
    std::vector<int> degree(n, 0);
    for (const auto& a : arrows) {
      if (a.src < 0 || a.src >= n || a.dst < 0 || a.dst >= n || a.src == a.dst)
        violation("arrow with bad endpoints");
      if (a.length < 1) violation("arrow length must be positive");
      if (++degree[a.src] > 1 || ++degree[a.dst] > 1)
        violation(std::string("more than one ") + (vertical ? "vertical" : "horizontal") + " arrow at a generator");
      const auto& s = c.gens[a.src];
      const auto& d = c.gens[a.dst];
      int da = vertical ? -a.length : a.length;
      int dm = vertical ? -1 : 2 * a.length - 1;
      if (d.alexander - s.alexander != da || d.maslov - s.maslov != dm)
        violation("gradings of arrow " + s.name + " -> " + d.name + " are inconsistent");
    }
  };
  check(c.vertical, true);
  check(c.horizontal, false);
  int v = xi_v(c), h = xi_h(c);
  if (c.gens[v].alexander != c.tau || c.gens[h].alexander != -c.tau)
    violation("tau does not match the Alexander gradings of xi^v and xi^h");
  long long e = cfk_euler(c).at_one();
  if (e != 1 && e != -1) violation("Euler characteristic at t = 1 is not +-1");
}

LaurentHalf cfk_euler(const CFKComplex& c) {
  LaurentHalf p;
  for (const auto& g : c.gens) p += LaurentHalf::monomial(g.maslov % 2 == 0 ? 1 : -1, Rational(g.alexander));
  return p;
}

std::vector<ChainConvention> candidate_conventions() {
  return {{false, 1}, {false, -1}, {true, 1}, {true, -1}};
}

namespace {

struct Builder {
  const CFKComplex& c;
  const ChainConvention& conv;
  const TorusAlgebra& T = torus_algebra();
  std::vector<ModuleGenerator> gens;
  std::vector<DeltaEntry> delta;

  int add(const std::string& name, int idem, int m, Rational a) {
    gens.push_back({name, {idem}, ((m % 2) + 2) % 2, a});
    return static_cast<int>(gens.size()) - 1;
  }
  void edge(int s, const char* coeff, int d) { delta.push_back({s, T[coeff], d}); }

  void expect(int src, int dst, int dm, Rational da, const std::string& what) {
    const auto& s = gens[src];
    const auto& d = gens[dst];
    if ((d.m - s.m - dm) % 2 != 0 || *d.a - *s.a != da)
      throw Error(Errc::CalibrationConflict, what + " from " + s.name + " to " + d.name +
                                                 " does not reach the stored grading");
  }

  // S ->D1 g1 <-D23 g2 ... <-D23 g_l <-D123 T
  void d1_chain(int s, int t, int l, const std::string& tag) {
    std::vector<int> g;
    for (int i = 1; i <= l; ++i)
      g.push_back(add(tag + "_" + std::to_string(i), 2, gens[s].m, *gens[s].a + Rational(1, 2) - i));
    edge(s, "rho1", g[0]);
    for (int i = 1; i < l; ++i) edge(g[i], "rho23", g[i - 1]);
    edge(t, "rho123", g[l - 1]);
    expect(s, t, 1, Rational(-l), tag + " chain");
  }

  // S ->D3 g1 ->D23 g2 ... ->D23 g_l ->D2 T
  void d3_chain(int s, int t, int l, const std::string& tag) {
    std::vector<int> g;
    for (int i = 1; i <= l; ++i)
      g.push_back(add(tag + "_" + std::to_string(i), 2, gens[s].m, *gens[s].a + i - Rational(1, 2)));
    edge(s, "rho3", g[0]);
    for (int i = 1; i < l; ++i) edge(g[i - 1], "rho23", g[i]);
    edge(g[l - 1], "rho2", t);
    expect(s, t, 1, Rational(l), tag + " chain");
  }

  void unstable(int s, int t, int tau) {
    if (tau == 0) {
      edge(s, "rho12", t);
      expect(s, t, 0, Rational(0), "unstable chain");
      return;
    }
    const int len = 2 * (tau > 0 ? tau : -tau);
    std::vector<int> g;
    if (tau > 0) {
      // xi^v ->D1 u1 <-D23 ... <-D23 u_{2tau} <-D3 xi^h
      for (int i = 1; i <= len; ++i)
        g.push_back(add("u_" + std::to_string(i), 2, gens[s].m, *gens[s].a + Rational(1, 2) - i));
      edge(s, "rho1", g[0]);
      for (int i = 1; i < len; ++i) edge(g[i], "rho23", g[i - 1]);
      edge(t, "rho3", g[len - 1]);
    } else {
      // xi^v ->D123 u1 ->D23 ... ->D23 u_{2|tau|} ->D2 xi^h
      for (int i = 1; i <= len; ++i)
        g.push_back(add("u_" + std::to_string(i), 2, gens[s].m + 1, *gens[s].a + i - Rational(1, 2)));
      edge(s, "rho123", g[0]);
      for (int i = 1; i < len; ++i) edge(g[i - 1], "rho23", g[i]);
      edge(g[len - 1], "rho2", t);
    }
    expect(s, t, 0, Rational(-2 * tau), "unstable chain");
  }
};

}  // namespace

TypeDStructure build_cfd(const CFKComplex& c, const ChainConvention& conv) {
  validate(c);
  Builder b{c, conv, torus_algebra(), {}, {}};
  for (const auto& g : c.gens) b.add(g.name, 1, g.maslov, Rational(conv.a_sign * g.alexander));
  for (size_t i = 0; i < c.vertical.size(); ++i) {
    const auto& a = c.vertical[i];
    std::string tag = "v" + std::to_string(i + 1);
    if (conv.d1_row_for_vertical) b.d1_chain(a.src, a.dst, a.length, tag);
    else b.d3_chain(a.src, a.dst, a.length, tag);
  }
  for (size_t i = 0; i < c.horizontal.size(); ++i) {
    const auto& a = c.horizontal[i];
    std::string tag = "h" + std::to_string(i + 1);
    if (conv.d1_row_for_vertical) b.d3_chain(a.src, a.dst, a.length, tag);
    else b.d1_chain(a.src, a.dst, a.length, tag);
  }
  b.unstable(xi_v(c), xi_h(c), c.tau);
  const auto& T = torus_algebra();
  return {T.pmc(), torus_refinement(), std::move(b.gens), std::move(b.delta)};
}

CFKComplex unknot_cfk() { return {{{"x", 0, 0}}, {}, {}, 0}; }

CFKComplex right_trefoil_cfk() {
  return {{{"a", 0, 1}, {"b", -1, 0}, {"c", -2, -1}}, {{1, 2, 1}}, {{1, 0, 1}}, 1};
}

const ChainConvention& calibrated_convention() {
  static const ChainConvention chosen = [] {
    for (const auto& conv : candidate_conventions()) {
      bool ok = true;
      for (const auto& c : {unknot_cfk(), right_trefoil_cfk()}) {
        try {
          TypeDStructure n = build_cfd(c, conv);
          if (!check_type_d(n) || !check_bigrading(n, 0) || !verify_a2_zero(n)) ok = false;
          else verify_a1(n, c);
        } catch (const Error&) {
          ok = false;
        }
        if (!ok) break;
      }
      if (ok) return conv;
    }
    throw Error(Errc::CalibrationConflict, "no chain convention passes the calibration fixtures");
  }();
  return chosen;
}

TypeDStructure build_cfd(const CFKComplex& c) { return build_cfd(c, calibrated_convention()); }

LaurentHalf verify_a1(const TypeDStructure& cfd, const CFKComplex& c) {
  LaurentHalf a1 = class_of(cfd).coefficient({1});
  LaurentHalf delta = cfk_euler(c);
  if (a1.is_zero()) throw Error(Errc::Mismatch, "a1 component is zero");
  auto lhs = normalize_symmetric(a1).poly;
  auto rhs = normalize_symmetric(delta).poly;
  if (!(lhs == rhs))
    throw Error(Errc::Mismatch, "a1 component " + to_string(lhs) + " differs from " + to_string(rhs));
  return lhs;
}

Report verify_a2_zero(const TypeDStructure& cfd) {
  std::map<Rational, std::pair<int, int>> counts;
  for (const auto& g : cfd.gens) {
    if (g.idem != Subset{2}) continue;
    auto& slot = counts[g.a.value_or(Rational(0))];
    (g.m % 2 == 0 ? slot.first : slot.second)++;
  }
  for (const auto& [a, mc] : counts)
    if (mc.first != mc.second)
      return Report::fail(Errc::A2NonZero, "at a = " + to_string(a) + ": " + std::to_string(mc.first) +
                                               " with m = 0, " + std::to_string(mc.second) + " with m = 1");
  return Report::pass();
}

}  // namespace bdecat
