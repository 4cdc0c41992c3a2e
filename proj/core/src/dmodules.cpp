#include "bdecat/dmodules.hpp"

#include <algorithm>
#include <functional>

#include "bdecat/error.hpp"

namespace bdecat {

int TypeDStructure::index_of(const std::string& name) const {
  for (size_t i = 0; i < gens.size(); ++i)
    if (gens[i].name == name) return static_cast<int>(i);
  return -1;
}

int AInfModule::index_of(const std::string& name) const {
  for (size_t i = 0; i < gens.size(); ++i)
    if (gens[i].name == name) return static_cast<int>(i);
  return -1;
}

int AInfModule::max_arity() const {
  int k = 0;
  for (const auto& op : ops) k = std::max(k, static_cast<int>(op.algs.size()));
  return k;
}

TypeDStructure make_type_d(const Pmc& pmc, std::vector<ModuleGenerator> gens,
                           std::vector<DeltaEntry> delta) {
  return {pmc, default_refinement(pmc), std::move(gens), std::move(delta)};
}

AInfModule make_ainf(const Pmc& pmc, std::vector<ModuleGenerator> gens, std::vector<AInfOp> ops) {
  return {pmc, default_refinement(pmc), std::move(gens), std::move(ops)};
}

namespace {

std::string gen_name(const std::vector<ModuleGenerator>& g, int i) {
  return i >= 0 && i < static_cast<int>(g.size()) ? g[i].name : "#" + std::to_string(i);
}

Report check_generators(const Pmc& pmc, const std::vector<ModuleGenerator>& gens) {
  for (const auto& g : gens) {
    if (static_cast<int>(g.idem.size()) != pmc.genus())
      return Report::fail(Errc::StructureEquationFails,
                          "generator " + g.name + " is not in the middle summand");
    for (int v : g.idem)
      if (v < 1 || v > pmc.num_pairs())
        return Report::fail(Errc::StructureEquationFails, "generator " + g.name + " has a bad idempotent");
  }
  return Report::pass();
}

}  // namespace

Report check_type_d(const TypeDStructure& n) {
  if (auto r = check_generators(n.pmc, n.gens); !r) return r;
  const int size = static_cast<int>(n.gens.size());
  auto basis = middle_basis(n.pmc);
  for (const auto& e : n.delta) {
    if (e.src < 0 || e.src >= size || e.dst < 0 || e.dst >= size)
      return Report::fail(Errc::StructureEquationFails, "delta entry references a missing generator");
    AlgebraElement projected =
        idempotent(n.pmc, n.gens[e.src].idem) * e.coeff * idempotent(n.pmc, n.gens[e.dst].idem);
    if (e.coeff.is_zero() || projected != e.coeff)
      return Report::fail(Errc::StructureEquationFails,
                          "coefficient " + gen_name(n.gens, e.src) + " -> " + gen_name(n.gens, e.dst) +
                              " is not compatible with the idempotents");
  }
  // (d (x) id) delta + (mu (x) id)(id (x) delta) delta, collected per (src, dst).
  std::vector<std::vector<const DeltaEntry*>> out(size);
  for (const auto& e : n.delta) out[e.src].push_back(&e);
  for (int x = 0; x < size; ++x) {
    std::map<int, AlgebraElement> residual;
    auto add = [&](int dst, const AlgebraElement& v) {
      auto [it, inserted] = residual.try_emplace(dst, AlgebraElement(n.pmc.num_points()));
      it->second += v;
    };
    for (const auto* e : out[x]) {
      add(e->dst, differential(e->coeff));
      for (const auto* f : out[e->dst]) add(f->dst, e->coeff * f->coeff);
    }
    for (const auto& [dst, v] : residual)
      if (!v.is_zero())
        return Report::fail(Errc::StructureEquationFails,
                            "(" + gen_name(n.gens, x) + ", " + gen_name(n.gens, dst) +
                                ") residual " + to_string(v));
  }
  for (const auto& e : n.delta) {
    for (int b : basis->decompose(e.coeff)) {
      int mb = basis->is_idempotent(b) ? 0 : m_of(basis->element(b), n.pmc, n.ref);
      if ((n.gens[e.src].m - mb - n.gens[e.dst].m - 1) % 2 != 0)
        return Report::fail(Errc::GradingIncompatible,
                            "m(" + gen_name(n.gens, e.src) + ") != m(" + basis->label(b) + ") + m(" +
                                gen_name(n.gens, e.dst) + ") + 1");
    }
  }
  return Report::pass();
}

bool is_bounded(const TypeDStructure& n) {
  const int size = static_cast<int>(n.gens.size());
  std::vector<std::vector<int>> adj(size);
  for (const auto& e : n.delta)
    if (!e.coeff.is_zero()) adj[e.src].push_back(e.dst);
  std::vector<int> color(size, 0);
  std::function<bool(int)> cyclic = [&](int v) {
    color[v] = 1;
    for (int w : adj[v]) {
      if (color[w] == 1) return true;
      if (color[w] == 0 && cyclic(w)) return true;
    }
    color[v] = 2;
    return false;
  };
  for (int v = 0; v < size; ++v)
    if (color[v] == 0 && cyclic(v)) return false;
  return true;
}

void toggle(TensorSum& s, const TensorTerm& t) {
  auto it = s.find(t);
  if (it == s.end()) s.insert(t);
  else s.erase(it);
}

namespace {

// delta as basis-level triples.
std::vector<std::vector<std::pair<int, int>>> delta_table(const TypeDStructure& n) {
  auto basis = middle_basis(n.pmc);
  std::vector<std::vector<std::pair<int, int>>> table(n.gens.size());
  std::vector<std::map<std::pair<int, int>, int>> parity(n.gens.size());
  for (const auto& e : n.delta)
    for (int b : basis->decompose(e.coeff)) parity[e.src][{b, e.dst}] ^= 1;
  for (size_t x = 0; x < n.gens.size(); ++x)
    for (auto [key, p] : parity[x])
      if (p) table[x].push_back(key);
  return table;
}

}  // namespace

namespace {

TensorSum iterate_delta(const TypeDStructure& n, const std::vector<std::vector<std::pair<int, int>>>& table,
                        int x, int k, bool strict) {
  TensorSum cur{{{}, x}};
  for (int step = 0; step < k && !cur.empty(); ++step) {
    TensorSum next;
    for (const auto& t : cur)
      for (auto [b, y] : table[t.gen]) {
        TensorTerm u{t.algs, y};
        u.algs.push_back(b);
        toggle(next, u);
      }
    cur = std::move(next);
    if (strict && step + 1 > static_cast<int>(n.gens.size()) && !cur.empty())
      throw Error(Errc::Unbounded, "delta_" + std::to_string(step + 1) + " is nonzero past the generator count");
  }
  return cur;
}

}  // namespace

TensorSum delta_k(const TypeDStructure& n, int x, int k) {
  return iterate_delta(n, delta_table(n), x, k, true);
}

// ---- A-infinity modules -----------------------------------------------------

namespace {

struct OpTable {
  std::map<std::pair<int, std::vector<int>>, std::set<int>> ops;
  std::shared_ptr<const AlgebraBasis> basis;
};

OpTable build_ops(const AInfModule& m) {
  OpTable t;
  t.basis = middle_basis(m.pmc);
  for (const auto& op : m.ops) {
    std::vector<int> seq;
    for (const auto& a : op.algs) {
      auto d = t.basis->decompose(a);
      if (d.size() != 1)
        throw Error(Errc::AInfRelationFails, "operation inputs must be single basis elements of A(Z,0)");
      seq.push_back(d.front());
    }
    auto& ys = t.ops[{op.x, seq}];
    if (!ys.insert(op.y).second) ys.erase(op.y);
  }
  return t;
}

std::set<int> eval(const AInfModule& m, const OpTable& t, int x, const std::vector<int>& algs) {
  if (algs.size() == 1 && t.basis->is_idempotent(algs[0])) {
    if (t.basis->left(algs[0]) == m.gens[x].idem) return {x};
    return {};
  }
  for (int a : algs)
    if (t.basis->is_idempotent(a)) return {};
  auto it = t.ops.find({x, algs});
  return it == t.ops.end() ? std::set<int>{} : it->second;
}

void toggle_set(std::set<int>& s, int v) {
  if (!s.insert(v).second) s.erase(v);
}

// Left side of the A-infinity relation at (x, a_1..a_n).
std::set<int> relation(const AInfModule& m, const OpTable& t, int x, const std::vector<int>& a) {
  std::set<int> out;
  const size_t n = a.size();
  for (size_t i = 0; i <= n; ++i) {
    std::vector<int> head(a.begin(), a.begin() + i), tail(a.begin() + i, a.end());
    for (int y : eval(m, t, x, head))
      for (int z : eval(m, t, y, tail)) toggle_set(out, z);
  }
  for (size_t l = 0; l < n; ++l)
    for (int c : t.basis->differential(a[l])) {
      auto b = a;
      b[l] = c;
      for (int z : eval(m, t, x, b)) toggle_set(out, z);
    }
  for (size_t l = 0; l + 1 < n; ++l)
    for (int c : t.basis->product(a[l], a[l + 1])) {
      std::vector<int> b(a.begin(), a.begin() + l);
      b.push_back(c);
      b.insert(b.end(), a.begin() + l + 2, a.end());
      for (int z : eval(m, t, x, b)) toggle_set(out, z);
    }
  return out;
}

}  // namespace

std::set<int> evaluate_op(const AInfModule& m, int x, const std::vector<int>& algs) {
  return eval(m, build_ops(m), x, algs);
}

Report check_ainf(const AInfModule& m) {
  if (auto r = check_generators(m.pmc, m.gens); !r)
    return Report::fail(Errc::AInfRelationFails, r.detail);
  OpTable t;
  try {
    t = build_ops(m);
  } catch (const Error& e) {
    return Report::fail(Errc::AInfRelationFails, e.detail());
  }
  const auto& B = *t.basis;
  const int size = static_cast<int>(m.gens.size());
  for (const auto& [key, ys] : t.ops) {
    const auto& [x, seq] = key;
    if (x < 0 || x >= size)
      return Report::fail(Errc::AInfRelationFails, "operation references a missing generator");
    Subset cur = m.gens[x].idem;
    for (int b : seq) {
      if (B.is_idempotent(b))
        return Report::fail(Errc::AInfRelationFails, "unitality: idempotent input recorded at " + m.gens[x].name);
      if (B.left(b) != cur)
        return Report::fail(Errc::AInfRelationFails, "input " + B.label(b) + " not composable at " + m.gens[x].name);
      cur = B.right(b);
    }
    for (int y : ys) {
      if (y < 0 || y >= size)
        return Report::fail(Errc::AInfRelationFails, "operation references a missing generator");
      if (m.gens[y].idem != cur)
        return Report::fail(Errc::AInfRelationFails, "output " + m.gens[y].name + " has the wrong idempotent");
    }
  }

  // Any nonzero term of a relation involves a recorded operation, so it
  // suffices to test the sequences that recorded operations can reach.
  std::set<std::pair<int, std::vector<int>>> candidates;
  for (int x = 0; x < size; ++x) candidates.insert({x, {}});
  std::map<int, std::vector<int>> d_preimage;
  std::map<int, std::vector<std::pair<int, int>>> mu_preimage;
  bool have_preimages = false;
  auto preimages = [&] {
    if (have_preimages) return;
    have_preimages = true;
    for (int a = 0; a < B.size(); ++a) {
      if (B.is_idempotent(a)) continue;
      for (int c : B.differential(a)) d_preimage[c].push_back(a);
      for (int b = 0; b < B.size(); ++b)
        if (!B.is_idempotent(b) && B.right(a) == B.left(b))
          for (int c : B.product(a, b)) mu_preimage[c].push_back({a, b});
    }
  };
  for (const auto& [key, ys] : t.ops) {
    const auto& [x, seq] = key;
    candidates.insert(key);
    for (int y : ys)
      for (const auto& [key2, zs] : t.ops)
        if (key2.first == y) {
          auto cat = seq;
          cat.insert(cat.end(), key2.second.begin(), key2.second.end());
          candidates.insert({x, cat});
        }
    if (!seq.empty()) preimages();
    for (size_t l = 0; l < seq.size(); ++l) {
      for (int a : d_preimage[seq[l]]) {
        auto b = seq;
        b[l] = a;
        candidates.insert({x, b});
      }
      for (auto [a1, a2] : mu_preimage[seq[l]]) {
        std::vector<int> b(seq.begin(), seq.begin() + l);
        b.push_back(a1);
        b.push_back(a2);
        b.insert(b.end(), seq.begin() + l + 1, seq.end());
        candidates.insert({x, b});
      }
    }
  }
  for (const auto& [x, seq] : candidates) {
    auto r = relation(m, t, x, seq);
    if (!r.empty()) {
      std::string inputs;
      for (int b : seq) inputs += (inputs.empty() ? "" : ", ") + B.label(b);
      return Report::fail(Errc::AInfRelationFails,
                          "arity " + std::to_string(seq.size() + 1) + " at " + m.gens[x].name + " with [" +
                              inputs + "]");
    }
  }
  return Report::pass();
}

Report check_ainf_gradings(const AInfModule& m) {
  auto basis = middle_basis(m.pmc);
  for (const auto& op : m.ops) {
    int total = m.gens[op.x].m + static_cast<int>(op.algs.size()) - 1;
    for (const auto& a : op.algs) total += m_of(a, m.pmc, m.ref);
    if ((total - m.gens[op.y].m) % 2 != 0)
      return Report::fail(Errc::GradingIncompatible,
                          "m_" + std::to_string(op.algs.size() + 1) + " from " + m.gens[op.x].name + " to " +
                              m.gens[op.y].name + " has the wrong parity");
  }
  return Report::pass();
}

// ---- box tensor ---------------------------------------------------------------

ChainComplex box_tensor(const AInfModule& m, const TypeDStructure& n, long long weight, bool require_bounded_d) {
  if (!(m.pmc == n.pmc)) throw Error(Errc::PmcMismatch, "modules live over different pointed matched circles");
  if (require_bounded_d && !is_bounded(n))
    throw Error(Errc::BothUnbounded, "the type D side is unbounded and A-infinity modules are not assumed bounded");
  OpTable t = build_ops(m);
  ChainComplex c;
  std::map<std::pair<int, int>, int> index;
  for (size_t x = 0; x < m.gens.size(); ++x)
    for (size_t y = 0; y < n.gens.size(); ++y) {
      if (m.gens[x].idem != n.gens[y].idem) continue;
      index[{static_cast<int>(x), static_cast<int>(y)}] = static_cast<int>(c.gens.size());
      ChainComplex::Gen g;
      g.name = m.gens[x].name + "*" + n.gens[y].name;
      g.m = (m.gens[x].m + n.gens[y].m) % 2;
      if (m.gens[x].a || n.gens[y].a)
        g.a = m.gens[x].a.value_or(Rational(0)) + Rational(weight) * n.gens[y].a.value_or(Rational(0));
      c.gens.push_back(g);
    }
  // m_k vanishes past the largest recorded arity, so the sum is finite.
  const int depth = std::max(1, m.max_arity());
  auto table = delta_table(n);
  std::set<std::pair<int, int>> diff;
  for (const auto& [xy, src] : index) {
    auto [x, y] = xy;
    for (int j = 0; j <= depth; ++j)
      for (const auto& term : iterate_delta(n, table, y, j, false))
        for (int out : eval(m, t, x, term.algs)) {
          auto it = index.find({out, term.gen});
          if (it == index.end()) continue;
          std::pair<int, int> e{src, it->second};
          if (!diff.insert(e).second) diff.erase(e);
        }
  }
  c.diff.assign(diff.begin(), diff.end());
  return c;
}

bool squares_to_zero(const ChainComplex& c) {
  std::vector<std::vector<int>> adj(c.gens.size());
  for (auto [s, d] : c.diff) adj[s].push_back(d);
  for (size_t s = 0; s < c.gens.size(); ++s) {
    std::map<int, int> hits;
    for (int mid : adj[s])
      for (int d : adj[mid]) hits[d] ^= 1;
    for (auto [d, p] : hits)
      if (p) return false;
  }
  return true;
}

bool lowers_m_by_one(const ChainComplex& c) {
  for (auto [s, d] : c.diff)
    if ((c.gens[s].m - c.gens[d].m - 1) % 2 != 0) return false;
  return true;
}

}  // namespace bdecat
