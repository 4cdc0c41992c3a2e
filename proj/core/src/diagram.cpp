#include "bdecat/diagram.hpp"

#include <functional>

namespace bdecat {

void validate(const BorderedDiagram& d) {
  const int k = d.k();
  if (d.alpha_circles != d.genus - k)
    throw Error(Errc::BadIndex, "a diagram of genus g with 2k arcs needs g - k alpha circles");
  for (const auto& p : d.points) {
    int limit = p.on_arc ? 2 * k : d.alpha_circles;
    if (p.alpha < 1 || p.alpha > limit) throw Error(Errc::BadIndex, "point on a missing alpha curve");
    if (p.beta < 1 || p.beta > d.genus) throw Error(Errc::BadIndex, "point on a missing beta circle");
    if (p.sign != 1 && p.sign != -1) throw Error(Errc::BadIndex, "intersection sign must be +-1");
  }
}

Subset DiagramGenerator::idem_d() const {
  // |o(x)| = k, so the arc count is twice its size.
  return complement(occupied, 2 * static_cast<int>(occupied.size()));
}

std::vector<DiagramGenerator> enumerate_generators(const BorderedDiagram& d) {
  validate(d);
  const int g = d.genus, k = d.k();
  std::vector<std::vector<int>> on_beta(g + 1);
  for (size_t i = 0; i < d.points.size(); ++i) on_beta[d.points[i].beta].push_back(static_cast<int>(i));
  std::vector<DiagramGenerator> out;
  std::vector<int> chosen;
  std::vector<char> arc_used(2 * k + 1, 0), circle_used(d.alpha_circles + 1, 0);
  std::function<void(int)> rec = [&](int beta) {
    if (beta > g) {
      int circles = 0;
      for (int c = 1; c <= d.alpha_circles; ++c) circles += circle_used[c];
      if (circles != d.alpha_circles) return;
      DiagramGenerator x;
      x.points = chosen;
      for (int a = 1; a <= 2 * k; ++a)
        if (arc_used[a]) x.occupied.push_back(a);
      // Position of each chosen alpha in the order: occupied arcs, then circles.
      std::vector<int> images;
      int prod = 1;
      for (int pi : chosen) {
        const auto& p = d.points[pi];
        int pos = 0;
        if (p.on_arc) {
          for (int a : x.occupied) pos += a <= p.alpha;
        } else {
          pos = k + p.alpha;
        }
        images.push_back(pos);
        prod *= p.sign;
      }
      x.sigma_x_sign = permutation_sign(images);
      std::vector<int> so = x.occupied;
      for (int a : complement(x.occupied, 2 * k)) so.push_back(a);
      x.sigma_o_sign = permutation_sign(so);
      x.sign = x.sigma_o_sign * x.sigma_x_sign * prod;
      out.push_back(std::move(x));
      return;
    }
    for (int pi : on_beta[beta]) {
      const auto& p = d.points[pi];
      auto& used = p.on_arc ? arc_used[p.alpha] : circle_used[p.alpha];
      if (used) continue;
      used = 1;
      chosen.push_back(pi);
      rec(beta + 1);
      chosen.pop_back();
      used = 0;
    }
  };
  rec(1);
  return out;
}

IntMatrix intersection_matrix(const BorderedDiagram& d) {
  validate(d);
  IntMatrix m(d.genus + d.k(), d.genus);
  for (const auto& p : d.points) {
    int row = p.on_arc ? d.alpha_circles + p.alpha - 1 : p.alpha - 1;
    m(row, p.beta - 1) += p.sign;
  }
  return m;
}

IntegerClass cfd_class_from_determinants(const BorderedDiagram& d) {
  IntMatrix m = intersection_matrix(d);
  IntegerClass out;
  for (const auto& s : k_subsets(2 * d.k(), d.k())) {
    std::vector<int> drop;
    for (int a : s) drop.push_back(d.alpha_circles + a - 1);
    BigInt det = determinant(m.without_rows(drop));
    if (det != 0) out[s] = det;
  }
  return out;
}

IntegerClass signed_generator_class(const BorderedDiagram& d) {
  IntegerClass out;
  for (const auto& x : enumerate_generators(d)) {
    BigInt& c = out[x.idem_d()];
    c += x.sign;
    if (c == 0) out.erase(x.idem_d());
  }
  return out;
}

ExteriorClass to_exterior(int genus, const IntegerClass& c) {
  ExteriorClass x(genus);
  for (const auto& [s, v] : c) x.add(s, LaurentHalf::monomial(static_cast<long long>(v), Rational(0)));
  return x;
}

namespace {

BigInt coefficient(const IntegerClass& c, const Subset& s) {
  auto it = c.find(s);
  return it == c.end() ? BigInt(0) : it->second;
}

// Finds eps in {+1, -1} with lhs_s = eps * rhs_s for every s, if any.
std::optional<int> common_sign(const IntegerClass& lhs, const IntegerClass& rhs, int k) {
  std::optional<int> eps;
  for (const auto& s : k_subsets(2 * k, k)) {
    BigInt a = coefficient(lhs, s), b = coefficient(rhs, s);
    if (a == 0 && b == 0) continue;
    int e = a == b ? 1 : (a == -b ? -1 : 0);
    if (e == 0 || (eps && *eps != e)) return std::nullopt;
    eps = e;
  }
  return eps.value_or(1);
}

}  // namespace

Report check_duality(const BorderedDiagram& d) {
  const int k = d.k();
  IntegerClass dets = cfd_class_from_determinants(d);
  IntegerClass counted;
  for (const auto& [s, v] : signed_generator_class(d)) {
    std::vector<int> so = complement(s, 2 * k);
    for (int a : s) so.push_back(a);
    counted[s] = permutation_sign(so) * v;
  }
  if (!common_sign(dets, counted, k))
    return Report::fail(Errc::Mismatch, "determinants " + to_string(dets) + " vs generator count " + to_string(counted));
  return Report::pass();
}

HomologyKernel homology_kernel(const BorderedDiagram& d) {
  const int g = d.genus, k = d.k(), top = d.alpha_circles;
  if (!(d.pmc == Pmc::split(k)))
    throw Error(Errc::PmcMismatch, "the kernel computation uses the split pointed matched circle");
  IntMatrix m = intersection_matrix(d);
  for (int i = 0; i < k; ++i) m.swap_rows(top + 2 * i, top + 2 * i + 1);
  HomologyKernel out;
  std::vector<int> top_rows, all_cols;
  for (int r = 0; r < top; ++r) top_rows.push_back(r);
  for (int c = 0; c < g; ++c) all_cols.push_back(c);
  out.b1_rel = top - rank(m.select(top_rows, all_cols));
  if (out.b1_rel > 0) return out;

  // Column operations bringing the top block to [0 | B], B upper triangular.
  for (int r = top - 1; r >= 0; --r) {
    const int pivot = k + r;
    for (int c = 0; c < pivot; ++c) {
      if (m(r, c) == 0) continue;
      BigInt a = m(r, pivot), b = m(r, c);
      // Extended gcd: x a + y b = gcd.
      BigInt x0 = 1, y0 = 0, x1 = 0, y1 = 1, aa = a, bb = b;
      while (bb != 0) {
        BigInt q = aa / bb;
        BigInt t = aa - q * bb;
        aa = bb;
        bb = t;
        t = x0 - q * x1;
        x0 = x1;
        x1 = t;
        t = y0 - q * y1;
        y0 = y1;
        y1 = t;
      }
      BigInt gcd = aa;
      BigInt ua = a / gcd, ub = b / gcd;
      // [pivot, c] -> [x0 pivot + y0 c, -ub pivot + ua c], determinant x0 ua + y0 ub = 1.
      for (int row = 0; row < m.rows(); ++row) {
        BigInt p = m(row, pivot), q = m(row, c);
        m(row, pivot) = x0 * p + y0 * q;
        m(row, c) = -ub * p + ua * q;
      }
    }
  }
  BigInt order = 1;
  for (int r = 0; r < top; ++r) order *= m(r, k + r);
  out.order = order < 0 ? BigInt(-order) : order;
  std::vector<int> first;
  for (int c = 0; c < k; ++c) first.push_back(c);
  for (const auto& s : k_subsets(2 * k, k)) {
    std::vector<int> rows;
    for (int a : s) rows.push_back(top + a - 1);
    BigInt w = determinant(m.select(rows, first));
    if (w != 0) out.kernel_wedge[s] = w;
  }
  return out;
}

std::optional<BigInt> presentation_order(const BorderedDiagram& d) {
  // Generators gamma (circles) and alpha' (arcs); relations the beta columns
  // and every alpha'. What is left is Z^{g-k} modulo the top block.
  IntMatrix m = intersection_matrix(d);
  const int rows = m.rows(), g = d.genus, arcs = 2 * d.k();
  IntMatrix p(rows, g + arcs);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < g; ++c) p(r, c) = m(r, c);
  for (int a = 0; a < arcs; ++a) p(d.alpha_circles + a, g + a) = 1;
  SmithForm s = smith_normal_form(p);
  BigInt order = 1;
  for (int i = 0; i < rows; ++i) {
    if (i >= s.d.cols() || s.d(i, i) == 0) return std::nullopt;
    order *= s.d(i, i);
  }
  return order;
}

Report verify_cfdker(const BorderedDiagram& d) {
  IntegerClass cls = cfd_class_from_determinants(d);
  HomologyKernel h = homology_kernel(d);
  if (h.b1_rel > 0) {
    if (!cls.empty())
      return Report::fail(Errc::TheoremViolation, "b1(Y, dY) > 0 but the class is " + to_string(cls));
    return Report::pass();
  }
  IntegerClass rhs;
  for (const auto& [s, w] : h.kernel_wedge) rhs[s] = *h.order * w;
  if (!common_sign(cls, rhs, d.k()))
    return Report::fail(Errc::TheoremViolation, "class " + to_string(cls) + " vs order * wedge " + to_string(rhs));
  return Report::pass();
}

IntMatrix arc_slide_rows(const IntMatrix& m, int alpha_circles, int i, int j) {
  const int arcs = m.rows() - alpha_circles;
  if (i < 1 || i > arcs || j < 1 || j > arcs || i == j) throw Error(Errc::BadIndex, "bad arc indices for a slide");
  IntMatrix out = m;
  out.add_row(alpha_circles + i - 1, alpha_circles + j - 1, 1);
  return out;
}

std::string to_string(const IntegerClass& c) {
  if (c.empty()) return "0";
  std::string out;
  for (const auto& [s, v] : c) {
    if (!out.empty()) out += " + ";
    out += v.str() + "*a{";
    for (size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
    out += "}";
  }
  return out;
}

}  // namespace bdecat
