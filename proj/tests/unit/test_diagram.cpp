#include "doctest.h"

#include <optional>
#include <set>

#include "bdecat/diagram.hpp"
#include "bdecat/error.hpp"
#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace bdecat;

namespace {

using oracle::sign_relating;

IntegerClass single(const Subset& s, long long v) { return {{s, BigInt(v)}}; }

}  // namespace

TEST_CASE("fixture classes") {
  struct Case {
    const char* name;
    IntegerClass cls;
    long long order;
  };
  std::vector<Case> cases{{"solid_torus", single({2}, 1), 1},   {"handlebody_13", single({2, 4}, 1), 1},
                          {"handlebody_14", single({2, 3}, 1), 1}, {"twisted_p2", single({2}, 2), 2},
                          {"twisted_p3", single({2}, 3), 3},    {"rank_deficient", {}, 0}};
  for (const auto& c : cases) {
    CAPTURE(c.name);
    BorderedDiagram d = fixtures::diagram(c.name);
    CHECK_NOTHROW(validate(d));
    IntegerClass cls = cfd_class_from_determinants(d);
    CHECK(sign_relating(cls, c.cls).has_value());
    CHECK(check_duality(d));
    CHECK(verify_cfdker(d));
    HomologyKernel h = homology_kernel(d);
    auto po = presentation_order(d);
    if (c.order == 0) {
      CHECK(h.b1_rel == 1);
      CHECK_FALSE(h.order.has_value());
      CHECK_FALSE(po.has_value());
    } else {
      CHECK(h.b1_rel == 0);
      REQUIRE(h.order.has_value());
      CHECK(*h.order == c.order);
      REQUIRE(po.has_value());
      CHECK(*po == c.order);
    }
  }
}

TEST_CASE("kernel wedge agrees with the Smith-form oracle") {
  for (const auto& name : fixtures::diagram_names()) {
    CAPTURE(name);
    BorderedDiagram d = fixtures::diagram(name);
    oracle::DiagramOracle o = oracle::diagram_oracle(d);
    HomologyKernel h = homology_kernel(d);
    CHECK(h.b1_rel == o.b1_rel);
    if (o.b1_rel > 0) continue;
    CHECK(*h.order == o.order);
    IntegerClass scaled = oracle::scaled_kernel_wedge(o, d.k());
    IntegerClass wedge;
    for (const auto& [s, w] : scaled) wedge[s] = w / o.order;
    CHECK(sign_relating(h.kernel_wedge, wedge).has_value());
    CHECK(sign_relating(cfd_class_from_determinants(d), scaled).has_value());
  }
}

TEST_CASE("determinants factor through the circle block on random diagrams") {
  gen::Rng rng(101);
  int full = 0;
  for (int t = 0; t < 200; ++t) {
    BorderedDiagram d = gen::random_diagram(rng, 4);
    IntegerClass cls = cfd_class_from_determinants(d);
    oracle::DiagramOracle o = oracle::diagram_oracle(d);
    if (o.b1_rel > 0) {
      CHECK(cls.empty());
      CHECK_FALSE(presentation_order(d).has_value());
      continue;
    }
    ++full;
    CHECK(presentation_order(d) == std::optional<BigInt>(o.order));
    CHECK(homology_kernel(d).order == std::optional<BigInt>(o.order));
    // Coefficient of a_s is +- order times the minor of C K on the rows left after deleting s.
    IntegerClass predicted = oracle::predicted_determinants(o, d.k());
    CHECK(sign_relating(cls, predicted).has_value());
  }
  CHECK(full > 50);
}

TEST_CASE("determinant-enumeration duality on random diagrams") {
  gen::Rng rng(103);
  for (int t = 0; t < 200; ++t) {
    BorderedDiagram d = gen::random_diagram(rng, 4);
    CHECK(check_duality(d));
  }
}

TEST_CASE("generator signs are multiplicative under disjoint union") {
  gen::Rng rng(107);
  int checked = 0;
  while (checked < 40) {
    BorderedDiagram a = gen::random_diagram(rng, 3), b = gen::random_diagram(rng, 3);
    if (a.k() + b.k() > 2) continue;
    BorderedDiagram u{Pmc::split(a.k() + b.k()), a.genus + b.genus, a.alpha_circles + b.alpha_circles, {}};
    for (auto p : a.points) u.points.push_back(p);
    for (auto p : b.points) {
      if (p.on_arc) p.alpha += 2 * a.k();
      else p.alpha += a.alpha_circles;
      p.beta += a.genus;
      u.points.push_back(p);
    }
    IntegerClass ca = cfd_class_from_determinants(a), cb = cfd_class_from_determinants(b);
    IntegerClass product;
    for (const auto& [s, x] : ca)
      for (const auto& [r, y] : cb) {
        Subset st = s;
        for (int v : r) st.push_back(v + 2 * a.k());
        product[st] = x * y;
      }
    CHECK(sign_relating(cfd_class_from_determinants(u), product).has_value());
    CHECK(sign_relating(signed_generator_class(u), [&] {
            IntegerClass p;
            auto ga = signed_generator_class(a), gb = signed_generator_class(b);
            for (const auto& [s, x] : ga)
              for (const auto& [r, y] : gb) {
                Subset st = s;
                for (int v : r) st.push_back(v + 2 * a.k());
                p[st] = x * y;
              }
            return p;
          }()).has_value());
    ++checked;
  }
}

TEST_CASE("arc slides and validation") {
  BorderedDiagram d = fixtures::diagram("handlebody_13");
  IntMatrix m = intersection_matrix(d);
  IntMatrix slid = arc_slide_rows(m, d.alpha_circles, 1, 2);
  IntMatrix expect = m;
  expect.add_row(d.alpha_circles, d.alpha_circles + 1, 1);
  CHECK(slid == expect);
  CHECK_THROWS_AS(arc_slide_rows(m, d.alpha_circles, 1, 1), Error);
  CHECK_THROWS_AS(arc_slide_rows(m, d.alpha_circles, 0, 2), Error);
  BorderedDiagram bad = d;
  bad.points.push_back({true, 9, 1, 1});
  CHECK_THROWS_AS(validate(bad), Error);
  BorderedDiagram torus = fixtures::diagram("solid_torus");
  torus.pmc = Pmc({1, 2, 3, 4, 1, 2, 3, 4});
  torus.genus = 2;
  torus.points.push_back({true, 3, 2, 1});
  CHECK_THROWS_AS(homology_kernel(torus), Error);
}

TEST_CASE("generator enumeration on the solid torus") {
  BorderedDiagram d = fixtures::diagram("solid_torus");
  auto gens = enumerate_generators(d);
  REQUIRE(gens.size() == 1);
  CHECK(gens[0].occupied == Subset{1});
  CHECK(gens[0].idem_d() == Subset{2});
  CHECK(to_string(cfd_class_from_determinants(d)).find("a{2}") != std::string::npos);
}
