#pragma once

#include <random>
#include <vector>

#include "bdecat/diagram.hpp"
#include "bdecat/dmodules.hpp"
#include "bdecat/grading.hpp"
#include "bdecat/grothendieck.hpp"

namespace gen {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(eng_); }
  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<size_t>(uniform(0, static_cast<int>(v.size()) - 1))];
  }
  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
};

// Valid, bounded type D structure over the torus algebra with m and a
// consistent along every coefficient (n = 0 Alexander weights). Generator
// order is shuffled.
bdecat::TypeDStructure bounded_type_d(Rng& rng, int max_gens = 6);

// Arbitrary coefficient digraph over the torus algebra (cycles allowed,
// structure equation not enforced).
bdecat::TypeDStructure random_digraph(Rng& rng, int max_gens = 7, double density = 0.3);

// Small valid A-infinity module over the torus algebra with consistent m.
bdecat::AInfModule small_ainf(Rng& rng, int max_gens = 4);

// Combinatorial diagram with k in {1, 2} (torus or split2) and g <= max_genus.
bdecat::BorderedDiagram random_diagram(Rng& rng, int max_genus = 4);

// Element of G(Z): random word in refined gradings of basis elements and lambda.
bdecat::GradingElement random_gz(Rng& rng, const bdecat::Pmc& pmc, const bdecat::RefinementData& ref);

bdecat::LaurentHalf random_laurent(Rng& rng, int max_terms = 4, int span = 6);

}  // namespace gen
