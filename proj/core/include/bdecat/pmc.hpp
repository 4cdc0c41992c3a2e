#pragma once

#include <array>
#include <string>
#include <vector>

#include "bdecat/combinatorics.hpp"

namespace bdecat {

// A chord [start, end] in Z minus the basepoint, start < end.
struct ReebChord {
  int start = 0;
  int end = 0;
  friend bool operator==(const ReebChord&, const ReebChord&) = default;
  friend auto operator<=>(const ReebChord&, const ReebChord&) = default;
};

// Points 1..4k in circle order starting after z; matching[p-1] = M(p).
class Pmc {
 public:
  Pmc() = default;
  // Throws Error(MalformedMatching | DisconnectedSurgery).
  explicit Pmc(std::vector<int> matching);

  static Pmc torus();
  // Split circle of genus k: [1,2,1,2, 3,4,3,4, ...].
  static Pmc split(int k);

  int num_points() const { return static_cast<int>(matching_.size()); }
  int genus() const { return num_points() / 4; }
  int num_pairs() const { return num_points() / 2; }
  const std::vector<int>& matching() const { return matching_; }

  int pair_of(int point) const { return matching_[point - 1]; }
  // Both points of a matched pair, ascending.
  std::array<int, 2> points_of(int pair) const;
  int partner(int point) const;

  // Pair labels ordered by their lower endpoint.
  std::vector<int> arcs_by_lower_endpoint() const;

  // Relabel pairs so pair i has the i-th smallest lower endpoint.
  Pmc canonical() const;
  bool is_canonical() const;

  // Chord joining the two points of a pair.
  ReebChord pair_chord(int pair) const;

  friend bool operator==(const Pmc& a, const Pmc& b) { return a.matching_ == b.matching_; }

 private:
  std::vector<int> matching_;
};

enum class PmcStatus { Ok, MalformedMatching, DisconnectedSurgery };

// Does not throw; Pmc's constructor uses it.
PmcStatus validate(const std::vector<int>& matching);
// Number of circles produced by oriented surgery on the matched 0-spheres.
int surgery_circle_count(const std::vector<int>& matching);

int genus(const Pmc& p);
Pmc reverse(const Pmc& p);

std::string to_string(const Pmc& p);

}  // namespace bdecat
