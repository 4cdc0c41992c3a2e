#include "bdecat/grading.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "bdecat/error.hpp"

namespace bdecat {

std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

Rational parse_rational(const std::string& text) {
  try {
    auto slash = text.find('/');
    if (slash == std::string::npos) {
      size_t used = 0;
      long long v = std::stoll(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return Rational(v);
    }
    size_t u1 = 0, u2 = 0;
    long long a = std::stoll(text.substr(0, slash), &u1);
    long long b = std::stoll(text.substr(slash + 1), &u2);
    if (u1 != slash || u2 != text.size() - slash - 1 || b == 0) throw std::invalid_argument(text);
    return Rational(a, b);
  } catch (const std::exception&) {
    throw Error(Errc::ParseError, "not a rational number: '" + text + "'");
  }
}

Rational multiplicity(const IntervalVector& alpha, int p) {
  const int gaps = static_cast<int>(alpha.size());
  long long left = (p - 1 >= 1 && p - 1 <= gaps) ? alpha[p - 2] : 0;
  long long right = (p >= 1 && p <= gaps) ? alpha[p - 1] : 0;
  return Rational(left + right, 2);
}

Rational multiplicity(const IntervalVector& alpha, const std::vector<int>& points) {
  Rational s(0);
  for (int p : points) s += multiplicity(alpha, p);
  return s;
}

Rational linking(const IntervalVector& alpha, const IntervalVector& beta) {
  Rational s(0);
  for (size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i] == 0) continue;
    int p = static_cast<int>(i) + 1;
    s += alpha[i] * (multiplicity(beta, p + 1) - multiplicity(beta, p));
  }
  return s;
}

IntervalVector interval_of(int n, const ReebChord& c) {
  IntervalVector v(n - 1, 0);
  for (int p = c.start; p < c.end; ++p) v[p - 1] = 1;
  return v;
}

GradingElement identity_grading(int n) { return {Rational(0), IntervalVector(n - 1, 0)}; }
GradingElement lambda(int n) { return {Rational(1), IntervalVector(n - 1, 0)}; }

GradingElement gmul(const GradingElement& x, const GradingElement& y) {
  GradingElement out{x.j + y.j + linking(x.alpha, y.alpha), x.alpha};
  for (size_t i = 0; i < out.alpha.size(); ++i) out.alpha[i] += y.alpha[i];
  return out;
}

GradingElement inverse(const GradingElement& x) {
  GradingElement out{-x.j, x.alpha};
  for (auto& v : out.alpha) v = -v;
  // x * out = (x.j + out.j + L(alpha, -alpha); 0) must vanish.
  out.j = -x.j + linking(x.alpha, x.alpha);
  return out;
}

GradingElement gpow(const GradingElement& x, int e) {
  GradingElement out = identity_grading(static_cast<int>(x.alpha.size()) + 1);
  GradingElement step = e >= 0 ? x : inverse(x);
  for (int i = 0; i < std::abs(e); ++i) out = gmul(out, step);
  return out;
}

bool satisfies_j_invariant(const GradingElement& x) {
  const int n = static_cast<int>(x.alpha.size()) + 1;
  int half = 0;
  for (int p = 1; p <= n; ++p) half += multiplicity(x.alpha, p).denominator() == 2;
  Rational d = x.j - Rational(half, 4);
  return d.denominator() == 1;
}

std::string to_string(const GradingElement& x) {
  std::ostringstream os;
  os << '(' << to_string(x.j) << ';';
  for (size_t i = 0; i < x.alpha.size(); ++i) os << (i ? "," : " ") << x.alpha[i];
  os << ')';
  return os.str();
}

GradingElement gr_prime(int n, const StrandsGenerator& a) {
  IntervalVector alpha(n - 1, 0);
  for (auto [s, t] : a.strands())
    for (int p = s; p < t; ++p) ++alpha[p - 1];
  Rational iota = Rational(a.inv()) - multiplicity(alpha, a.sources());
  return {iota, alpha};
}

GradingElement gr_prime(const AlgebraElement& a) {
  if (a.is_zero()) throw Error(Errc::NotHomogeneous, "zero element has no grading");
  GradingElement g = gr_prime(a.n(), a.terms().front());
  for (const auto& t : a.terms())
    if (gr_prime(a.n(), t) != g)
      throw Error(Errc::NotHomogeneous, "terms of " + to_string(a) + " have different gradings");
  return g;
}

std::vector<long long> boundary_on_pairs(const Pmc& pmc, const IntervalVector& alpha) {
  std::vector<long long> out(pmc.num_pairs() + 1, 0);
  for (size_t i = 0; i < alpha.size(); ++i) {
    int p = static_cast<int>(i) + 1;
    out[pmc.pair_of(p + 1)] += alpha[i];
    out[pmc.pair_of(p)] -= alpha[i];
  }
  return out;
}

RefinementData default_refinement(const Pmc& pmc) {
  const int n = pmc.num_points();
  const int k = pmc.genus();
  auto arcs = pmc.arcs_by_lower_endpoint();
  auto lower = [&](int rank) { return pmc.points_of(arcs[rank - 1])[0]; };
  auto labels = [&](const Subset& ranks) {
    Subset s;
    for (int r : ranks) s.push_back(arcs[r - 1]);
    std::sort(s.begin(), s.end());
    return s;
  };
  RefinementData ref;
  ref.base = labels(k_subsets(2 * k, k).front());
  for (const auto& ranks : k_subsets(2 * k, k)) {
    std::vector<std::pair<int, int>> st;
    for (int i = 1; i <= k; ++i) st.emplace_back(lower(i), lower(ranks[i - 1]));
    ref.psi[labels(ranks)] = gr_prime(n, StrandsGenerator::from_strands(st));
  }
  return ref;
}

GradingElement reverse_grading(const GradingElement& x) {
  return {x.j, IntervalVector(x.alpha.rbegin(), x.alpha.rend())};
}

RefinementData reverse_refinement(const Pmc& pmc, const RefinementData& ref) {
  const int m = pmc.num_pairs();
  RefinementData out;
  out.base = complement(ref.base, m);
  for (const auto& [t, g] : ref.psi) out.psi[complement(t, m)] = inverse(reverse_grading(g));
  return out;
}

GradingElement refine(const GradingElement& x, const Subset& t1, const Subset& t2,
                      const RefinementData& ref) {
  if (t1.size() != ref.base.size() || t2.size() != ref.base.size())
    throw Error(Errc::NotMiddleSummand, "refinement is only defined on the middle summand");
  auto a = ref.psi.find(t1), b = ref.psi.find(t2);
  if (a == ref.psi.end() || b == ref.psi.end())
    throw Error(Errc::NotMiddleSummand, "idempotent missing from refinement data");
  return gmul(gmul(a->second, x), inverse(b->second));
}

std::vector<long long> gz_coordinates(const Pmc& pmc, const IntervalVector& alpha) {
  const int m = pmc.num_pairs();
  const int rows = static_cast<int>(alpha.size());
  // Columns: interval classes of the pair chords; last column: alpha.
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(m + 1, Rational(0)));
  for (int i = 1; i <= m; ++i) {
    auto c = interval_of(pmc.num_points(), pmc.pair_chord(i));
    for (int r = 0; r < rows; ++r) a[r][i - 1] = c[r];
  }
  for (int r = 0; r < rows; ++r) a[r][m] = alpha[r];
  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < m && row < rows; ++col) {
    int sel = -1;
    for (int r = row; r < rows; ++r)
      if (a[r][col] != 0) { sel = r; break; }
    if (sel < 0) continue;
    std::swap(a[sel], a[row]);
    for (int r = 0; r < rows; ++r) {
      if (r == row || a[r][col] == 0) continue;
      Rational f = a[r][col] / a[row][col];
      for (int c = col; c <= m; ++c) a[r][c] -= f * a[row][c];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (int r = row; r < rows; ++r)
    if (a[r][m] != 0) throw Error(Errc::NotInGZ, "alpha is not in the span of the pair chords");
  std::vector<long long> h(m + 1, 0);
  for (int r = 0; r < row; ++r) {
    Rational v = a[r][m] / a[r][pivot_col[r]];
    if (v.denominator() != 1) throw Error(Errc::NotInGZ, "non-integral coordinates");
    h[pivot_col[r] + 1] = v.numerator();
  }
  return h;
}

bool in_GZ(const Pmc& pmc, const IntervalVector& alpha) {
  auto b = boundary_on_pairs(pmc, alpha);
  return std::all_of(b.begin(), b.end(), [](long long v) { return v == 0; });
}

int f_s(const GradingElement& x, const Pmc& pmc, const Subset& s0) {
  auto h = gz_coordinates(pmc, x.alpha);
  auto order = pmc.arcs_by_lower_endpoint();
  Rational v = x.j;
  for (int i = 1; i <= pmc.num_pairs(); ++i) {
    bool in_s = std::binary_search(s0.begin(), s0.end(), i);
    v += in_s ? Rational(-h[i], 2) : Rational(h[i], 2);
  }
  const int n = pmc.num_points();
  for (size_t a = 0; a < order.size(); ++a)
    for (size_t b = a + 1; b < order.size(); ++b) {
      int i1 = order[a], i2 = order[b];
      if (h[i1] == 0 || h[i2] == 0) continue;
      Rational delta = linking(interval_of(n, pmc.pair_chord(i1)), interval_of(n, pmc.pair_chord(i2)));
      v += Rational(h[i1] * h[i2]) * delta;
    }
  if (v.denominator() != 1)
    throw Error(Errc::NotInGZ, "f_s evaluated to the non-integer " + to_string(v) +
                                   " on " + to_string(x));
  long long r = v.numerator() % 2;
  return static_cast<int>(r < 0 ? r + 2 : r);
}

GradingElement gr(const AlgebraElement& a, const Pmc& pmc, const RefinementData& ref) {
  auto idem = idempotents_of(pmc, a);
  if (!idem) throw Error(Errc::NotHomogeneous, "element has no unique idempotent pair");
  return refine(gr_prime(a), idem->first, idem->second, ref);
}

int m_of(const AlgebraElement& a, const Pmc& pmc, const RefinementData& ref) {
  return f_s(gr(a, pmc, ref), pmc, ref.base);
}

}  // namespace bdecat
