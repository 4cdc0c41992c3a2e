#include "doctest.h"

#include <map>

#include "bdecat/cfk2cfd.hpp"
#include "bdecat/error.hpp"
#include "bdecat/torus.hpp"

using namespace bdecat;

TEST_CASE("strands products reproduce the torus table") {
  const auto& T = torus_algebra();
  // Nonzero products of non-idempotents, restated independently.
  const std::map<std::pair<std::string, std::string>, std::string> chords{
      {{"rho1", "rho2"}, "rho12"}, {{"rho2", "rho3"}, "rho23"},
      {{"rho1", "rho23"}, "rho123"}, {{"rho12", "rho3"}, "rho123"}};
  int checked = 0;
  for (const auto& a : TorusAlgebra::names())
    for (const auto& b : TorusAlgebra::names()) {
      AlgebraElement prod = T[a] * T[b];
      std::string want = TorusAlgebra::table_product(a, b);
      CHECK(T.name_of(prod) == want);
      if (want.empty()) CHECK(prod.is_zero());
      if (a.rfind("rho", 0) == 0 && b.rfind("rho", 0) == 0) {
        auto it = chords.find({a, b});
        CHECK(want == (it == chords.end() ? "" : it->second));
      }
      ++checked;
    }
  CHECK(checked == 64);
  AlgebraElement one = T["iota0"] + T["iota1"];
  for (const auto& a : TorusAlgebra::names()) {
    CHECK(one * T[a] == T[a]);
    CHECK(T[a] * one == T[a]);
    CHECK(differential(T[a]).is_zero());
  }
  CHECK((T["rho2"] * T["rho1"]).is_zero());
}

TEST_CASE("interval triples") {
  const auto& T = torus_algebra();
  CHECK(triple_of(T["rho1"]) == IntervalTriple{1, 0, 0});
  CHECK(triple_of(T["rho23"]) == IntervalTriple{0, 1, 1});
  CHECK(triple_of(T["rho123"]) == IntervalTriple{1, 1, 1});
}

TEST_CASE("CFD Alexander weights") {
  CHECK(alexander_weight_cfd({1, 0, 0}, 0) == Rational(1, 2));
  CHECK(alexander_weight_cfd({0, 1, 0}, 0) == Rational(-1, 2));
  CHECK(alexander_weight_cfd({0, 0, 1}, 0) == Rational(-1, 2));
  CHECK(alexander_weight_cfd({0, 0, 0}, 5) == Rational(0));
  CHECK(alexander_weight_cfd({1, 1, 0}, 0) == Rational(0));
  for (long long n = -4; n <= 4; ++n)
    for (long long c = -2; c <= 2; ++c) CHECK(alexander_weight_cfd({c, c * (n + 1), c * n}, n) == Rational(0));
}

TEST_CASE("CFA Alexander weights") {
  CHECK(alexander_weight_cfa({0, 0, 0}, 1, 3) == Rational(1));
  CHECK(alexander_weight_cfa({2, 1, 5}, 4, 0) == Rational(4));
  // The displayed functional takes (0,1,1; d) to d - 2p; its kernel on this
  // ray is d = 2p.
  for (long long p = -3; p <= 3; ++p) {
    CHECK(alexander_weight_cfa({0, 1, 1}, p, p) == Rational(-p));
    CHECK(alexander_weight_cfa({0, 1, 1}, 2 * p, p) == Rational(0));
  }
}

TEST_CASE("check_bigrading") {
  const auto& T = torus_algebra();
  TypeDStructure unknot = make_type_d(T.pmc(), {{"x", {1}, 0, Rational(0)}}, {{0, T["rho12"], 0}});
  unknot.ref = torus_refinement();
  CHECK(check_bigrading(unknot, 0));
  TypeDStructure tref = build_cfd(right_trefoil_cfk());
  CHECK(check_bigrading(tref, 0));
  for (size_t i = 0; i < tref.gens.size(); ++i) {
    TypeDStructure bad = tref;
    bad.gens[i].a = *bad.gens[i].a + Rational(1);
    Report r = check_bigrading(bad, 0);
    CHECK_FALSE(r.ok);
    CHECK(r.code == Errc::BigradingViolation);
  }
  TypeDStructure missing = tref;
  missing.gens[0].a.reset();
  CHECK(check_bigrading(missing, 0).code == Errc::MissingGrading);
  TypeDStructure g2 = make_type_d(Pmc::split(2), {}, {});
  CHECK(check_bigrading(g2, 0).code == Errc::PmcMismatch);
}
