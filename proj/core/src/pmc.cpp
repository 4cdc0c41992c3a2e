#include "bdecat/pmc.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "bdecat/error.hpp"

namespace bdecat {

namespace {

bool well_formed(const std::vector<int>& m) {
  const int n = static_cast<int>(m.size());
  if (n == 0 || n % 4 != 0) return false;
  std::vector<int> count(n / 2 + 1, 0);
  for (int v : m) {
    if (v < 1 || v > n / 2) return false;
    ++count[v];
  }
  return std::all_of(count.begin() + 1, count.end(), [](int c) { return c == 2; });
}

}  // namespace

int surgery_circle_count(const std::vector<int>& m) {
  const int n = static_cast<int>(m.size());
  std::vector<int> partner(n + 1, 0);
  for (int p = 1; p <= n; ++p)
    for (int q = 1; q <= n; ++q)
      if (q != p && m[q - 1] == m[p - 1]) partner[p] = q;
  // State: the segment of Z leaving point p. It runs to the next point
  // (wrapping through z), where surgery sends us to the partner's segment.
  std::vector<bool> seen(n + 1, false);
  int circles = 0;
  for (int start = 1; start <= n; ++start) {
    if (seen[start]) continue;
    ++circles;
    int p = start;
    while (!seen[p]) {
      seen[p] = true;
      int next = p == n ? 1 : p + 1;
      p = partner[next];
    }
  }
  return circles;
}

PmcStatus validate(const std::vector<int>& matching) {
  if (!well_formed(matching)) return PmcStatus::MalformedMatching;
  if (surgery_circle_count(matching) != 1) return PmcStatus::DisconnectedSurgery;
  return PmcStatus::Ok;
}

Pmc::Pmc(std::vector<int> matching) : matching_(std::move(matching)) {
  switch (validate(matching_)) {
    case PmcStatus::MalformedMatching:
      throw Error(Errc::MalformedMatching,
                  "matching must have length 4k with each of 1..2k appearing twice");
    case PmcStatus::DisconnectedSurgery:
      throw Error(Errc::DisconnectedSurgery,
                  "surgery yields " + std::to_string(surgery_circle_count(matching_)) +
                      " circles");
    case PmcStatus::Ok:
      break;
  }
}

Pmc Pmc::torus() { return Pmc({1, 2, 1, 2}); }

Pmc Pmc::split(int k) {
  std::vector<int> m;
  for (int i = 0; i < k; ++i) {
    int a = 2 * i + 1, b = 2 * i + 2;
    m.insert(m.end(), {a, b, a, b});
  }
  return Pmc(std::move(m));
}

std::array<int, 2> Pmc::points_of(int pair) const {
  std::array<int, 2> out{0, 0};
  int found = 0;
  for (int p = 1; p <= num_points() && found < 2; ++p)
    if (matching_[p - 1] == pair) out[found++] = p;
  return out;
}

int Pmc::partner(int point) const {
  auto pts = points_of(pair_of(point));
  return pts[0] == point ? pts[1] : pts[0];
}

std::vector<int> Pmc::arcs_by_lower_endpoint() const {
  std::vector<int> order;
  std::vector<bool> seen(num_pairs() + 1, false);
  for (int v : matching_)
    if (!seen[v]) {
      seen[v] = true;
      order.push_back(v);
    }
  return order;
}

Pmc Pmc::canonical() const {
  auto order = arcs_by_lower_endpoint();
  std::vector<int> rank(num_pairs() + 1);
  for (size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<int>(i) + 1;
  std::vector<int> m(matching_.size());
  for (size_t i = 0; i < m.size(); ++i) m[i] = rank[matching_[i]];
  return Pmc(std::move(m));
}

bool Pmc::is_canonical() const {
  auto order = arcs_by_lower_endpoint();
  for (size_t i = 0; i < order.size(); ++i)
    if (order[i] != static_cast<int>(i) + 1) return false;
  return true;
}

ReebChord Pmc::pair_chord(int pair) const {
  auto pts = points_of(pair);
  return {pts[0], pts[1]};
}

int genus(const Pmc& p) { return p.genus(); }

Pmc reverse(const Pmc& p) {
  std::vector<int> m(p.matching().rbegin(), p.matching().rend());
  return Pmc(std::move(m));
}

std::string to_string(const Pmc& p) {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < p.matching().size(); ++i) os << (i ? "," : "") << p.matching()[i];
  os << ']';
  return os.str();
}

}  // namespace bdecat
