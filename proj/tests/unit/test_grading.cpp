#include "doctest.h"

#include <algorithm>
#include <optional>

#include "bdecat/error.hpp"
#include "bdecat/grading.hpp"
#include "bdecat/torus.hpp"
#include "generators.hpp"

using namespace bdecat;

namespace {

GradingElement ge(Rational j, std::vector<long long> a) { return {j, std::move(a)}; }

// Pieces I(s) a(rho_i) I(t) of the pair chord element. Their refined gradings
// share alpha and agree up to an even power of lambda, which f_s cannot see.
GradingElement g_i(const Pmc& pmc, const RefinementData& ref, int i) {
  AlgebraElement a = a_of(pmc, {pmc.pair_chord(i)}, 0);
  std::optional<GradingElement> out;
  for (const auto& s : k_subsets(pmc.num_pairs(), pmc.genus()))
    for (const auto& t : k_subsets(pmc.num_pairs(), pmc.genus())) {
      AlgebraElement piece = idempotent(pmc, s) * a * idempotent(pmc, t);
      if (piece.is_zero()) continue;
      GradingElement g = gr(piece, pmc, ref);
      if (out) {
        CHECK(g.alpha == out->alpha);
        Rational dj = g.j - out->j;
        CHECK(dj.denominator() == 1);
        CHECK(dj.numerator() % 2 == 0);
      }
      CHECK(f_s(g, pmc, ref.base) == 1);
      out = g;
    }
  REQUIRE(out.has_value());
  return *out;
}

std::vector<Pmc> test_pmcs() { return {Pmc::torus(), Pmc::split(2), Pmc({1, 2, 3, 4, 1, 2, 3, 4})}; }

}  // namespace

TEST_CASE("multiplicity and linking examples") {
  CHECK(multiplicity({1, 0, 0}, 1) == Rational(1, 2));
  CHECK(multiplicity({1, 1, 0}, 2) == Rational(1));
  CHECK(multiplicity({0, 0, 0}, 3) == Rational(0));
  CHECK(multiplicity({0, 0, 1}, 4) == Rational(1, 2));
  for (int p = 0; p < 3; ++p) {
    IntervalVector e(3, 0);
    e[p] = 1;
    CHECK(linking(e, e) == Rational(0));
    CHECK(linking({0, 0, 0}, e) == Rational(0));
  }
  gen::Rng rng(2);
  for (int t = 0; t < 500; ++t) {
    IntervalVector a(7), b(7);
    for (auto& v : a) v = rng.uniform(-3, 3);
    for (auto& v : b) v = rng.uniform(-3, 3);
    CHECK((linking(a, b) + linking(b, a)).denominator() == 1);
  }
}

TEST_CASE("group law") {
  GradingElement x = ge(Rational(1, 2), {1, 1, 0});
  GradingElement lam = lambda(4);
  CHECK(gmul(lam, x) == ge(Rational(3, 2), {1, 1, 0}));
  CHECK(gmul(x, lam) == gmul(lam, x));
  CHECK(gmul(x, inverse(x)) == identity_grading(4));
  GradingElement e1 = ge(Rational(-1, 2), {1, 0, 0});
  GradingElement e2 = ge(Rational(-1, 2), {0, 1, 0});
  GradingElement p = gmul(e1, e2);
  CHECK(p.alpha == IntervalVector{1, 1, 0});
  CHECK(p.j == Rational(-1) + linking(e1.alpha, e2.alpha));
  CHECK(gpow(x, 3) == gmul(x, gmul(x, x)));
  CHECK(gpow(x, -2) == inverse(gmul(x, x)));
}

TEST_CASE("gr' examples") {
  CHECK(gr_prime(4, StrandsGenerator::identity_on({1, 3})) == identity_grading(4));
  CHECK(gr_prime(4, StrandsGenerator::from_strands({{1, 2}})) == ge(Rational(-1, 2), {1, 0, 0}));
  for (Pmc pmc : {Pmc::torus(), Pmc::split(2)}) {
    const int n = pmc.num_points();
    for (int i = -pmc.genus(); i <= pmc.genus(); ++i)
      for (const auto& x : basis_of_AZ(pmc, i))
        for (const auto& g : x.terms()) {
          AlgebraElement d = differential(n, g);
          GradingElement expect = gmul(inverse(lambda(n)), gr_prime(n, g));
          for (const auto& h : d.terms()) CHECK(gr_prime(n, h) == expect);
          CHECK(satisfies_j_invariant(gr_prime(n, g)));
        }
  }
}

TEST_CASE("gr' is multiplicative on nonzero products") {
  for (Pmc pmc : {Pmc::torus(), Pmc::split(2)}) {
    const int n = pmc.num_points();
    auto basis = basis_of_AZ(pmc, 0);
    for (const auto& a : basis)
      for (const auto& b : basis)
        for (const auto& ga : a.terms())
          for (const auto& gb : b.terms()) {
            auto p = multiply(ga, gb);
            if (p) CHECK(gr_prime(n, *p) == gmul(gr_prime(n, ga), gr_prime(n, gb)));
          }
  }
}

TEST_CASE("default refinement") {
  for (Pmc pmc : test_pmcs()) {
    RefinementData ref = default_refinement(pmc);
    Subset s0;
    for (int i = 1; i <= pmc.genus(); ++i) s0.push_back(i);
    CHECK(ref.base == s0);
    CHECK(ref.psi.at(s0) == identity_grading(pmc.num_points()));
    for (const auto& [t, psi] : ref.psi) {
      auto b = boundary_on_pairs(pmc, psi.alpha);
      for (int i = 1; i <= pmc.num_pairs(); ++i) {
        long long want = (std::count(t.begin(), t.end(), i) ? 1 : 0) - (std::count(s0.begin(), s0.end(), i) ? 1 : 0);
        CHECK(b[i] == want);
      }
    }
    RefinementData rev = reverse_refinement(pmc, ref);
    CHECK(rev.psi.size() == ref.psi.size());
  }
  RefinementData torus = default_refinement(Pmc::torus());
  CHECK(torus.psi.at({2}) == gr_prime(4, StrandsGenerator::from_strands({{1, 2}})));
  // The torus refinement differs from the default by the central lambda.
  CHECK(torus_refinement().psi.at({2}) == gmul(lambda(4), torus.psi.at({2})));
}

TEST_CASE("refined gradings lie in G(Z) and are multiplicative") {
  for (Pmc pmc : {Pmc::torus(), Pmc::split(2)}) {
    RefinementData ref = default_refinement(pmc);
    auto basis = middle_basis(pmc);
    for (int a = 0; a < basis->size(); ++a) {
      GradingElement ga = gr(basis->element(a), pmc, ref);
      CHECK(in_GZ(pmc, ga.alpha));
      if (basis->is_idempotent(a)) CHECK(ga == identity_grading(pmc.num_points()));
      for (int b = 0; b < basis->size(); ++b)
        for (int c : basis->product(a, b))
          CHECK(gr(basis->element(c), pmc, ref) == gmul(ga, gr(basis->element(b), pmc, ref)));
    }
  }
  CHECK_THROWS_AS(refine(identity_grading(4), {1, 2}, {1}, default_refinement(Pmc::torus())), Error);
}

TEST_CASE("pair chord gradings and f_s on generators") {
  for (Pmc pmc : test_pmcs()) {
    for (RefinementData ref : {default_refinement(pmc)}) {
      CHECK(f_s(lambda(pmc.num_points()), pmc, ref.base) == 1);
      CHECK(f_s(identity_grading(pmc.num_points()), pmc, ref.base) == 0);
      for (int i = 1; i <= pmc.num_pairs(); ++i) {
        GradingElement g = g_i(pmc, ref, i);
        bool in_s = std::count(ref.base.begin(), ref.base.end(), i) > 0;
        Rational shifted = g.j + (in_s ? Rational(1, 2) : Rational(-1, 2));
        CHECK(shifted.denominator() == 1);
        CHECK(shifted.numerator() % 2 == 0);
        CHECK(g.alpha == interval_of(pmc.num_points(), pmc.pair_chord(i)));
        CHECK(f_s(g, pmc, ref.base) == 1);
      }
    }
  }
}

TEST_CASE("f_s is a homomorphism on random G(Z) elements") {
  gen::Rng rng(23);
  for (Pmc pmc : test_pmcs()) {
    RefinementData ref = default_refinement(pmc);
    for (int t = 0; t < 1000; ++t) {
      GradingElement x = gen::random_gz(rng, pmc, ref);
      GradingElement y = gen::random_gz(rng, pmc, ref);
      CHECK((f_s(x, pmc, ref.base) + f_s(y, pmc, ref.base)) % 2 == f_s(gmul(x, y), pmc, ref.base));
    }
  }
}

TEST_CASE("f_s on words in the generators equals the word length mod 2") {
  gen::Rng rng(29);
  for (Pmc pmc : test_pmcs()) {
    RefinementData ref = default_refinement(pmc);
    std::vector<GradingElement> gens{lambda(pmc.num_points())};
    for (int i = 1; i <= pmc.num_pairs(); ++i) gens.push_back(g_i(pmc, ref, i));
    for (int t = 0; t < 300; ++t) {
      GradingElement x = identity_grading(pmc.num_points());
      int len = rng.uniform(0, 8);
      for (int s = 0; s < len; ++s) {
        GradingElement g = rng.pick(gens);
        x = gmul(x, rng.coin() ? g : inverse(g));
      }
      CHECK(f_s(x, pmc, ref.base) == len % 2);
    }
  }
}

TEST_CASE("m is a grading on A(Z, 0)") {
  for (Pmc pmc : {Pmc::torus(), Pmc::split(2)}) {
    RefinementData ref = default_refinement(pmc);
    auto basis = middle_basis(pmc);
    std::vector<int> m(basis->size());
    for (int b = 0; b < basis->size(); ++b) m[b] = m_of(basis->element(b), pmc, ref);
    for (int b = 0; b < basis->size(); ++b) {
      if (basis->is_idempotent(b)) CHECK(m[b] == 0);
      for (int d : basis->differential(b)) CHECK(m[d] == (m[b] + 1) % 2);
      for (int c = 0; c < basis->size(); ++c)
        for (int p : basis->product(b, c)) CHECK(m[p] == (m[b] + m[c]) % 2);
    }
  }
}

TEST_CASE("torus m values are consistent") {
  const auto& T = torus_algebra();
  auto ref = torus_refinement();
  auto m = [&](const char* n) { return m_of(T[n], T.pmc(), ref); };
  CHECK(m("rho12") == (m("rho1") + m("rho2")) % 2);
  CHECK(m("rho23") == (m("rho2") + m("rho3")) % 2);
  CHECK(m("rho123") == (m("rho1") + m("rho2") + m("rho3")) % 2);
  CHECK(m("rho1") == 1);
  CHECK(m("rho2") == 0);
  CHECK(m("rho3") == 1);
}

TEST_CASE("f_s rejects elements outside G(Z)") {
  CHECK_THROWS_AS(f_s(ge(Rational(-1, 2), {1, 0, 0}), Pmc::torus(), {1}), Error);
  CHECK_THROWS_AS(gz_coordinates(Pmc::torus(), {1, 0, 0}), Error);
  CHECK(gz_coordinates(Pmc::torus(), {1, 2, 1}) == std::vector<long long>{0, 1, 1});
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/2") == Rational(3, 2));
  CHECK(parse_rational("-1") == Rational(-1));
  CHECK(to_string(Rational(-3, 2)) == "-3/2");
  CHECK_THROWS_AS(parse_rational("x"), Error);
}
