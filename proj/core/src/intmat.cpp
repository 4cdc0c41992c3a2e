#include "bdecat/intmat.hpp"

#include <sstream>
#include <utility>

#include "bdecat/error.hpp"

namespace bdecat {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long long>>& rows, int cols) {
  int c = cols >= 0 ? cols : (rows.empty() ? 0 : static_cast<int>(rows.front().size()));
  IntMatrix m(static_cast<int>(rows.size()), c);
  for (int r = 0; r < m.rows(); ++r) {
    if (static_cast<int>(rows[r].size()) != c) throw Error(Errc::ParseError, "ragged matrix");
    for (int j = 0; j < c; ++j) m(r, j) = rows[r][j];
  }
  return m;
}

IntMatrix IntMatrix::select(const std::vector<int>& rs, const std::vector<int>& cs) const {
  IntMatrix m(static_cast<int>(rs.size()), static_cast<int>(cs.size()));
  for (size_t i = 0; i < rs.size(); ++i)
    for (size_t j = 0; j < cs.size(); ++j) m(static_cast<int>(i), static_cast<int>(j)) = (*this)(rs[i], cs[j]);
  return m;
}

IntMatrix IntMatrix::without_rows(const std::vector<int>& drop) const {
  std::vector<int> keep, all;
  for (int r = 0; r < rows_; ++r) {
    bool skip = false;
    for (int d : drop) skip = skip || d == r;
    if (!skip) keep.push_back(r);
  }
  for (int c = 0; c < cols_; ++c) all.push_back(c);
  return select(keep, all);
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

void IntMatrix::swap_rows(int a, int b) {
  if (a == b) return;
  for (int c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(int a, int b) {
  if (a == b) return;
  for (int r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row(int dst, int src, const BigInt& f) {
  for (int c = 0; c < cols_; ++c) (*this)(dst, c) += f * (*this)(src, c);
}

void IntMatrix::add_col(int dst, int src, const BigInt& f) {
  for (int r = 0; r < rows_; ++r) (*this)(r, dst) += f * (*this)(r, src);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw Error(Errc::BadIndex, "matrix shapes do not compose");
  IntMatrix m(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (int j = 0; j < b.cols(); ++j) m(i, j) += a(i, k) * b(k, j);
    }
  return m;
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream out;
  for (int r = 0; r < m.rows(); ++r) {
    out << "[";
    for (int c = 0; c < m.cols(); ++c) out << (c ? " " : "") << m(r, c);
    out << "]\n";
  }
  return out.str();
}

BigInt determinant(const IntMatrix& in) {
  if (in.rows() != in.cols()) throw Error(Errc::BadIndex, "determinant of a non-square matrix");
  const int n = in.rows();
  if (n == 0) return 1;
  IntMatrix a = in;
  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a(k, k) == 0) {
      int p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

int rank(const IntMatrix& in) {
  IntMatrix a = in;
  int r = 0;
  for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
    int p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(r, p);
    for (int i = r + 1; i < a.rows(); ++i) {
      if (a(i, c) == 0) continue;
      BigInt f = a(i, c), g = a(r, c);
      for (int j = c; j < a.cols(); ++j) a(i, j) = a(i, j) * g - a(r, j) * f;
    }
    ++r;
  }
  return r;
}

SmithForm smith_normal_form(const IntMatrix& m) {
  SmithForm s{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
  IntMatrix& d = s.d;
  const int rows = d.rows(), cols = d.cols();
  for (int t = 0; t < std::min(rows, cols); ++t) {
    // Pivot on the smallest nonzero entry of the remaining block until it
    // divides its row and column, then everything else.
    while (true) {
      int pr = -1, pc = -1;
      for (int i = t; i < rows; ++i)
        for (int j = t; j < cols; ++j)
          if (d(i, j) != 0 && (pr < 0 || abs(d(i, j)) < abs(d(pr, pc)))) pr = i, pc = j;
      if (pr < 0) return s;
      d.swap_rows(t, pr);
      s.u.swap_rows(t, pr);
      d.swap_cols(t, pc);
      s.v.swap_cols(t, pc);
      bool clean = true;
      for (int i = t + 1; i < rows; ++i) {
        BigInt q = d(i, t) / d(t, t);
        if (q != 0) {
          d.add_row(i, t, -q);
          s.u.add_row(i, t, -q);
        }
        clean = clean && d(i, t) == 0;
      }
      for (int j = t + 1; j < cols; ++j) {
        BigInt q = d(t, j) / d(t, t);
        if (q != 0) {
          d.add_col(j, t, -q);
          s.v.add_col(j, t, -q);
        }
        clean = clean && d(t, j) == 0;
      }
      if (!clean) continue;
      int bad = -1;
      for (int i = t + 1; i < rows && bad < 0; ++i)
        for (int j = t + 1; j < cols; ++j)
          if (d(i, j) % d(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      d.add_row(t, bad, 1);
      s.u.add_row(t, bad, 1);
    }
    if (d(t, t) < 0) {
      for (int j = 0; j < cols; ++j) d(t, j) = -d(t, j);
      for (int j = 0; j < rows; ++j) s.u(t, j) = -s.u(t, j);
    }
  }
  return s;
}

}  // namespace bdecat
