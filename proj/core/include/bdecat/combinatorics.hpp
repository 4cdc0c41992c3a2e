#pragma once

#include <vector>

namespace bdecat {

using Subset = std::vector<int>;  // sorted, 1-based

// All k-element subsets of {1..n} in lexicographic order.
std::vector<Subset> k_subsets(int n, int k);

// {1..n} minus s.
Subset complement(const Subset& s, int n);

// Sign of a permutation given as images of 0..n-1 (or 1..n).
int permutation_sign(const std::vector<int>& images);

}  // namespace bdecat
