#include "doctest.h"

#include <algorithm>
#include <functional>
#include <optional>
#include <map>
#include <set>

#include "bdecat/error.hpp"
#include "bdecat/strands.hpp"
#include "generators.hpp"

using namespace bdecat;

namespace {

// Reference strands arithmetic on explicit strand lists.
using Strands = std::vector<std::pair<int, int>>;

int inversions(const Strands& s) {
  int c = 0;
  for (size_t i = 0; i < s.size(); ++i)
    for (size_t j = 0; j < s.size(); ++j)
      if (s[i].first < s[j].first && s[i].second > s[j].second) ++c;
  return c;
}

std::optional<Strands> ref_multiply(const Strands& a, const Strands& b) {
  std::map<int, int> bmap(b.begin(), b.end());
  std::set<int> ta, sb;
  for (auto [s, t] : a) ta.insert(t);
  for (auto [s, t] : b) sb.insert(s);
  if (ta != sb) return std::nullopt;
  Strands out;
  for (auto [s, t] : a) out.push_back({s, bmap[t]});
  std::sort(out.begin(), out.end());
  if (inversions(out) != inversions(a) + inversions(b)) return std::nullopt;
  return out;
}

std::multiset<Strands> ref_differential(const Strands& a) {
  std::multiset<Strands> out;
  const int base = inversions(a);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a.size(); ++j) {
      if (!(a[i].first < a[j].first && a[i].second > a[j].second)) continue;
      Strands r = a;
      std::swap(r[i].second, r[j].second);
      if (inversions(r) == base - 1) out.insert(r);
    }
  return out;
}

AlgebraElement from_multiset(int n, const std::multiset<Strands>& terms) {
  std::vector<StrandsGenerator> g;
  for (const auto& s : terms) g.push_back(StrandsGenerator::from_strands(s));
  return AlgebraElement(n, g);
}

std::vector<std::pair<Pmc, int>> test_algebras() {
  std::vector<std::pair<Pmc, int>> out;
  for (int i = -1; i <= 1; ++i) out.push_back({Pmc::torus(), i});
  for (int i = -2; i <= 2; ++i) out.push_back({Pmc::split(2), i});
  return out;
}

}  // namespace

TEST_CASE("a0 examples") {
  auto e = a0(4, {}, 2);
  CHECK(e.size() == 6);  // one idempotent per 2-subset of 4 points
  auto one = a0(4, {{1, 3}}, 1);
  REQUIRE(one.size() == 1);
  CHECK(one.terms()[0].strands() == Strands{{1, 3}});
  // Horizontal strand at 2 or 4; points 1 and 3 are taken by the chord.
  auto two = a0(4, {{1, 3}}, 2);
  CHECK(two.size() == 2);
  std::set<Strands> got;
  for (const auto& t : two.terms()) got.insert(t.strands());
  CHECK(got == std::set<Strands>{{{1, 3}, {2, 2}}, {{1, 3}, {4, 4}}});
  CHECK_THROWS_AS(a0(4, {{1, 3}, {1, 2}}, 2), Error);
}

TEST_CASE("torus algebra has eight basis elements") {
  auto basis = basis_of_AZ(Pmc::torus(), 0);
  CHECK(basis.size() == 8);
  auto mb = middle_basis(Pmc::torus());
  CHECK(mb->size() == 8);
  int idems = 0;
  for (int b = 0; b < mb->size(); ++b) idems += mb->is_idempotent(b);
  CHECK(idems == 2);
}

TEST_CASE("multiply and differential agree with the reference on generators") {
  for (int n : {4, 6}) {
    // All strands generators on n points with up to 3 strands.
    std::vector<Strands> all;
    std::function<void(int, Strands&, std::set<int>&)> rec = [&](int p, Strands& cur, std::set<int>& used) {
      if (p > n) {
        if (cur.size() <= 3) all.push_back(cur);
        return;
      }
      rec(p + 1, cur, used);
      if (cur.size() == 3) return;
      for (int t = p; t <= n; ++t) {
        if (used.count(t)) continue;
        used.insert(t);
        cur.push_back({p, t});
        rec(p + 1, cur, used);
        cur.pop_back();
        used.erase(t);
      }
    };
    Strands cur;
    std::set<int> used;
    rec(1, cur, used);
    gen::Rng rng(5);
    for (const auto& a : all) {
      auto ga = StrandsGenerator::from_strands(a);
      CHECK(differential(n, ga) == from_multiset(n, ref_differential(a)));
      CHECK(ga.inv() == inversions(a));
    }
    for (int trial = 0; trial < 3000; ++trial) {
      const auto& a = rng.pick(all);
      const auto& b = rng.pick(all);
      auto got = multiply(StrandsGenerator::from_strands(a), StrandsGenerator::from_strands(b));
      auto want = ref_multiply(a, b);
      REQUIRE(got.has_value() == want.has_value());
      if (got) CHECK(got->strands() == *want);
    }
  }
}

TEST_CASE("d squared vanishes on every summand") {
  for (const auto& [pmc, i] : test_algebras()) {
    for (const auto& x : basis_of_AZ(pmc, i)) CHECK(differential(differential(x)).is_zero());
  }
}

TEST_CASE("Leibniz rule on basis pairs of A(Z, 0)") {
  for (Pmc pmc : {Pmc::torus(), Pmc::split(2)}) {
    auto basis = basis_of_AZ(pmc, 0);
    for (const auto& a : basis)
      for (const auto& b : basis) {
        auto lhs = differential(a * b);
        auto rhs = differential(a) * b + a * differential(b);
        CHECK(lhs == rhs);
      }
  }
}

TEST_CASE("associativity") {
  auto torus = basis_of_AZ(Pmc::torus(), 0);
  for (const auto& a : torus)
    for (const auto& b : torus)
      for (const auto& c : torus) CHECK((a * b) * c == a * (b * c));
  auto g2 = basis_of_AZ(Pmc::split(2), 0);
  gen::Rng rng(17);
  for (int t = 0; t < 600; ++t) {
    const auto& a = rng.pick(g2);
    const auto& b = rng.pick(g2);
    const auto& c = rng.pick(g2);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("each basis element has unique idempotents") {
  for (const auto& [pmc, i] : test_algebras()) {
    auto idems = k_subsets(pmc.num_pairs(), pmc.genus() + i);
    for (const auto& x : basis_of_AZ(pmc, i)) {
      auto st = idempotents_of(pmc, x);
      REQUIRE(st.has_value());
      int hits = 0;
      for (const auto& s : idems)
        for (const auto& t : idems)
          if (idempotent(pmc, s) * x * idempotent(pmc, t) == x) ++hits;
      CHECK(hits == 1);
      CHECK(idempotent(pmc, st->first) * x * idempotent(pmc, st->second) == x);
    }
  }
}

TEST_CASE("basis decomposition round-trips") {
  auto b = middle_basis(Pmc::split(2));
  for (int i = 0; i < b->size(); ++i) CHECK(b->decompose(b->element(i)) == std::vector<int>{i});
  gen::Rng rng(3);
  for (int t = 0; t < 200; ++t) {
    int x = rng.uniform(0, b->size() - 1), y = rng.uniform(0, b->size() - 1);
    auto prod = b->element(x) * b->element(y);
    CHECK(b->compose(b->product(x, y)) == prod);
    CHECK(b->compose(b->differential(x)) == differential(b->element(x)));
  }
}

TEST_CASE("generator notation round-trips") {
  auto g = parse_generator("{1,2}->{2,3}:[3,2]");
  CHECK(g.strands() == Strands{{1, 3}, {2, 2}});
  CHECK(to_string(g) == "{1,2}->{2,3}:[3,2]");
  CHECK_THROWS_AS(parse_generator("{1,2}->{2}:[3]"), Error);
  CHECK_THROWS_AS(StrandsGenerator::from_strands({{3, 1}}), Error);
}

TEST_CASE("ambient mismatch throws") {
  AlgebraElement a(4, {StrandsGenerator::identity_on({1})});
  AlgebraElement b(8, {StrandsGenerator::identity_on({1})});
  try {
    (void)(a * b);
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::AmbientMismatch);
  }
}
