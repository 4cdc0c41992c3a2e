#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "bdecat/error.hpp"
#include "bdecat/pmc.hpp"

namespace bdecat::cli {

// 0 success, 1 verification failure, 2 input or usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

// Exhaustive checks on the basis of A(Z, 0): d^2 = 0, Leibniz, associativity,
// and additivity of m over products and under d.
Report algebra_selftest(const Pmc& pmc);

}  // namespace bdecat::cli
