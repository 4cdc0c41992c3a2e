#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bdecat/error.hpp"
#include "bdecat/grading.hpp"
#include "bdecat/pmc.hpp"
#include "bdecat/strands.hpp"

namespace bdecat {

struct ModuleGenerator {
  std::string name;
  Subset idem;  // k-element subset of pair labels
  int m = 0;    // Z/2 grading
  std::optional<Rational> a;

  friend bool operator==(const ModuleGenerator&, const ModuleGenerator&) = default;
};

struct DeltaEntry {
  int src = 0;
  AlgebraElement coeff;
  int dst = 0;

  friend bool operator==(const DeltaEntry&, const DeltaEntry&) = default;
};

struct TypeDStructure {
  Pmc pmc;
  RefinementData ref;
  std::vector<ModuleGenerator> gens;
  std::vector<DeltaEntry> delta;

  int index_of(const std::string& name) const;  // -1 if absent
  friend bool operator==(const TypeDStructure&, const TypeDStructure&) = default;
};

// y appears in m_{i}(x, algs...) with i = algs.size() + 1.
struct AInfOp {
  int x = 0;
  std::vector<AlgebraElement> algs;
  int y = 0;
  int d = 0;  // basepoint multiplicity of the domain, used by Alexander checks

  friend bool operator==(const AInfOp&, const AInfOp&) = default;
};

struct AInfModule {
  Pmc pmc;
  RefinementData ref;
  std::vector<ModuleGenerator> gens;
  std::vector<AInfOp> ops;

  int index_of(const std::string& name) const;
  int max_arity() const;  // largest number of algebra inputs among ops
  friend bool operator==(const AInfModule&, const AInfModule&) = default;
};

struct ChainComplex {
  struct Gen {
    std::string name;
    int m = 0;
    std::optional<Rational> a;
  };
  std::vector<Gen> gens;
  std::vector<std::pair<int, int>> diff;  // (src, dst) over F2
};

// Type D structure tied to the basis of A(Z, 0).
TypeDStructure make_type_d(const Pmc& pmc, std::vector<ModuleGenerator> gens,
                           std::vector<DeltaEntry> delta);
AInfModule make_ainf(const Pmc& pmc, std::vector<ModuleGenerator> gens, std::vector<AInfOp> ops);

Report check_type_d(const TypeDStructure& n);
bool is_bounded(const TypeDStructure& n);

// Element of A^{(x)k} (x) N: basis indices of A(Z,0) followed by a generator.
struct TensorTerm {
  std::vector<int> algs;
  int gen = 0;
  friend auto operator<=>(const TensorTerm&, const TensorTerm&) = default;
};
using TensorSum = std::set<TensorTerm>;

void toggle(TensorSum& s, const TensorTerm& t);

// delta_k; throws Error(Unbounded) when a nonzero iterate exceeds the generator count.
TensorSum delta_k(const TypeDStructure& n, int x, int k);

Report check_ainf(const AInfModule& m);
// m(y) = m(x) + sum m(a_j) + i - 2 for every recorded op; reports GradingIncompatible.
Report check_ainf_gradings(const AInfModule& m);

// Output generators reachable as m_{i}(x, algs) in F2.
std::set<int> evaluate_op(const AInfModule& m, int x, const std::vector<int>& algs);

// A finite ops list makes m bounded, so an unbounded n is only accepted when
// require_bounded_d is false. Throws Error(BothUnbounded | PmcMismatch).
ChainComplex box_tensor(const AInfModule& m, const TypeDStructure& n, long long weight = 1,
                        bool require_bounded_d = true);

bool squares_to_zero(const ChainComplex& c);
bool lowers_m_by_one(const ChainComplex& c);

}  // namespace bdecat
