#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "bdecat/config.hpp"
#include "bdecat/grading.hpp"
#include "bdecat/strands.hpp"
#include "bdecat/torus.hpp"
#include "bdecat_cli/cli.hpp"

namespace bdecat::cli {

namespace {

std::vector<int> xor_merge(std::vector<int> a, const std::vector<int>& b) {
  std::vector<int> out;
  std::sort(a.begin(), a.end());
  std::vector<int> bb = b;
  std::sort(bb.begin(), bb.end());
  std::set_symmetric_difference(a.begin(), a.end(), bb.begin(), bb.end(), std::back_inserter(out));
  return out;
}

std::vector<int> times(const AlgebraBasis& B, const std::vector<int>& xs, int y) {
  std::vector<int> out;
  for (int x : xs) out = xor_merge(out, B.product(x, y));
  return out;
}

std::vector<int> times(const AlgebraBasis& B, int x, const std::vector<int>& ys) {
  std::vector<int> out;
  for (int y : ys) out = xor_merge(out, B.product(x, y));
  return out;
}

}  // namespace

Report algebra_selftest(const Pmc& pmc) {
  auto basis = middle_basis(pmc);
  const AlgebraBasis& B = *basis;
  const RefinementData ref = pmc == Pmc::torus() ? torus_refinement() : default_refinement(pmc);
  const int n = B.size();
  for (int a = 0; a < n; ++a) {
    std::vector<int> dd;
    for (int c : B.differential(a)) dd = xor_merge(dd, B.differential(c));
    if (!dd.empty()) return Report::fail(Errc::Mismatch, "d^2 != 0 on " + B.label(a));
    if (!B.is_idempotent(a)) {
      int ma = m_of(B.element(a), pmc, ref);
      for (int c : B.differential(a))
        if (B.is_idempotent(c) || m_of(B.element(c), pmc, ref) != (ma + 1) % 2)
          return Report::fail(Errc::Mismatch, "m(d a) != m(a) + 1 on " + B.label(a));
    }
  }
  std::mutex mu;
  std::string failure;
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int a = next++; a < n; a = next++) {
      for (int b = 0; b < n; ++b) {
        auto ab = B.product(a, b);
        auto lhs = std::vector<int>();
        for (int c : ab) lhs = xor_merge(lhs, B.differential(c));
        auto rhs = xor_merge(times(B, B.differential(a), b), times(B, a, B.differential(b)));
        std::string bad;
        if (lhs != rhs) bad = "Leibniz fails on " + B.label(a) + ", " + B.label(b);
        if (bad.empty() && !B.is_idempotent(a) && !B.is_idempotent(b))
          for (int c : ab)
            if (m_of(B.element(c), pmc, ref) != (m_of(B.element(a), pmc, ref) + m_of(B.element(b), pmc, ref)) % 2)
              bad = "m(ab) != m(a) + m(b) on " + B.label(a) + ", " + B.label(b);
        for (int c = 0; bad.empty() && c < n; ++c)
          if (times(B, ab, c) != times(B, a, B.product(b, c)))
            bad = "associativity fails on " + B.label(a) + ", " + B.label(b) + ", " + B.label(c);
        if (!bad.empty()) {
          std::lock_guard<std::mutex> lock(mu);
          if (failure.empty()) failure = bad;
          return;
        }
      }
    }
  };
  int threads = parallel_enabled() ? std::max(1u, std::thread::hardware_concurrency()) : 1;
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (!failure.empty()) return Report::fail(Errc::Mismatch, failure);
  return Report::pass();
}

}  // namespace bdecat::cli
