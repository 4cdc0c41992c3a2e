#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bdecat/combinatorics.hpp"
#include "bdecat/pmc.hpp"

namespace bdecat {

// Partial permutation (S, T, phi) on points 1..n with phi(i) >= i.
// Packed as one nibble per source point holding its image (0 = unused).
class StrandsGenerator {
 public:
  static constexpr int kMaxPoints = 15;

  StrandsGenerator() = default;
  // Throws Error(BadIndex) on repeated sources/targets or a downward strand.
  static StrandsGenerator from_strands(const std::vector<std::pair<int, int>>& strands);
  static StrandsGenerator identity_on(const std::vector<int>& points);

  int image(int p) const { return static_cast<int>((code_ >> (4 * (p - 1))) & 0xFu); }
  std::vector<int> sources() const;
  std::vector<int> targets() const;
  // Images in source order.
  std::vector<int> phi() const;
  std::vector<std::pair<int, int>> strands() const;
  int size() const;
  int inv() const;
  bool is_idempotent() const;
  std::uint64_t code() const { return code_; }

  friend bool operator==(const StrandsGenerator&, const StrandsGenerator&) = default;
  friend auto operator<=>(const StrandsGenerator&, const StrandsGenerator&) = default;

 private:
  std::uint64_t code_ = 0;
};

// F2-linear combination of strands generators in A(n).
class AlgebraElement {
 public:
  AlgebraElement() = default;
  explicit AlgebraElement(int n) : n_(n) {}
  // Sorts and cancels repeated terms in pairs.
  AlgebraElement(int n, std::vector<StrandsGenerator> terms);

  int n() const { return n_; }
  const std::vector<StrandsGenerator>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  AlgebraElement& operator+=(const AlgebraElement& other);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;
  friend auto operator<=>(const AlgebraElement&, const AlgebraElement&) = default;

 private:
  int n_ = 0;
  std::vector<StrandsGenerator> terms_;
};

std::optional<StrandsGenerator> multiply(const StrandsGenerator& a, const StrandsGenerator& b);
// Throws Error(AmbientMismatch).
AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);

AlgebraElement differential(int n, const StrandsGenerator& g);
AlgebraElement differential(const AlgebraElement& a);

// Sum over all horizontal completions of the chord set, with `count` strands.
// Throws Error(EndpointClash) when two chords share a start or an end.
AlgebraElement a0(int n, const std::vector<ReebChord>& rho, int count);

// Matched idempotent I(s) = sum over sections of s.
AlgebraElement idempotent(const Pmc& pmc, const Subset& s);
// Sum of I(s) over |s| = k + i.
AlgebraElement unit(const Pmc& pmc, int i);

// I * a0(rho) * I in A(4k, k+i).
AlgebraElement a_of(const Pmc& pmc, const std::vector<ReebChord>& rho, int i);

// Pair labels occupied by a point set (sorted); nullopt if two points share a pair.
std::optional<Subset> pairs_of(const Pmc& pmc, const std::vector<int>& points);

// Matched idempotents s, t with I(s) x I(t) = x, if x is nonzero and homogeneous.
std::optional<std::pair<Subset, Subset>> idempotents_of(const Pmc& pmc, const AlgebraElement& x);

// Basis of A(Z, i) made of nonzero I(s) a(rho) I(t).
std::vector<AlgebraElement> basis_of_AZ(const Pmc& pmc, int i);

std::string to_string(const StrandsGenerator& g);
std::string to_string(const AlgebraElement& a);
// Parses "{1,2}->{2,3}:[3,2]"; throws Error(ParseError).
StrandsGenerator parse_generator(const std::string& text);

// Indexed basis of A(Z, i) with cached products and differentials.
class AlgebraBasis {
 public:
  AlgebraBasis(const Pmc& pmc, int i);

  const Pmc& pmc() const { return pmc_; }
  int summand() const { return summand_; }
  int n() const { return pmc_.num_points(); }
  int size() const { return static_cast<int>(elements_.size()); }

  const AlgebraElement& element(int b) const { return elements_[b]; }
  const Subset& left(int b) const { return left_[b]; }
  const Subset& right(int b) const { return right_[b]; }
  bool is_idempotent(int b) const { return idempotent_[b]; }
  std::optional<int> idempotent_index(const Subset& s) const;
  // Moving strands of the basis element, i.e. its chord set.
  std::vector<ReebChord> chords(int b) const;

  // Sorted basis indices; throws Error(Mismatch) if x is outside the span.
  std::vector<int> decompose(const AlgebraElement& x) const;
  AlgebraElement compose(const std::vector<int>& coords) const;

  std::vector<int> product(int a, int b) const;
  std::vector<int> differential(int b) const;

  std::string label(int b) const;

 private:
  Pmc pmc_;
  int summand_ = 0;
  std::vector<AlgebraElement> elements_;
  std::vector<Subset> left_, right_;
  std::vector<bool> idempotent_;
  std::unordered_map<std::uint64_t, int> owner_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<int, int>, std::vector<int>> products_;
  mutable std::map<int, std::vector<int>> differentials_;
};

// Shared, cached basis for A(Z, 0).
std::shared_ptr<const AlgebraBasis> middle_basis(const Pmc& pmc);

}  // namespace bdecat
