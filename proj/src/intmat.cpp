#include "artc/intmat.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace artc {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("IntMatrix: shape mismatch");
  IntMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const mpz_class& aik = at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < o.cols_; ++j) {
        r.at(i, j) += aik * o.at(k, j);
      }
    }
  }
  return r;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

void IntMatrix::swap_rows(int a, int b) {
  if (a == b) return;
  for (int j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

void IntMatrix::swap_cols(int a, int b) {
  if (a == b) return;
  for (int i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
}

void IntMatrix::negate_row(int i) {
  for (int j = 0; j < cols_; ++j) at(i, j) = -at(i, j);
}

void IntMatrix::negate_col(int j) {
  for (int i = 0; i < rows_; ++i) at(i, j) = -at(i, j);
}

void IntMatrix::add_row_multiple(int dst, int src, const mpz_class& q) {
  if (q == 0) return;
  for (int j = 0; j < cols_; ++j) at(dst, j) += q * at(src, j);
}

void IntMatrix::add_col_multiple(int dst, int src, const mpz_class& q) {
  if (q == 0) return;
  for (int i = 0; i < rows_; ++i) at(i, dst) += q * at(i, src);
}

IntMatrix IntMatrix::row_slice(int from, int to) const {
  IntMatrix r(to - from, cols_);
  for (int i = from; i < to; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i - from, j) = at(i, j);
  return r;
}

IntMatrix IntMatrix::stacked(const IntMatrix& below) const {
  if (rows_ > 0 && below.rows_ > 0 && cols_ != below.cols_) {
    throw std::invalid_argument("IntMatrix::stacked: column mismatch");
  }
  const int cols = rows_ > 0 ? cols_ : below.cols_;
  IntMatrix r(rows_ + below.rows_, cols);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
  for (int i = 0; i < below.rows_; ++i)
    for (int j = 0; j < below.cols_; ++j) r.at(rows_ + i, j) = below.at(i, j);
  return r;
}

bool IntMatrix::is_zero() const {
  for (const auto& x : a_) {
    if (x != 0) return false;
  }
  return true;
}

mpz_class IntMatrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant: not square");
  const int n = rows_;
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  IntMatrix a = *this;
  mpz_class prev = 1;
  int sign = 1;
  for (int t = 0; t < n - 1; ++t) {
    if (a.at(t, t) == 0) {
      int p = -1;
      for (int i = t + 1; i < n; ++i) {
        if (a.at(i, t) != 0) { p = i; break; }
      }
      if (p < 0) return 0;
      a.swap_rows(t, p);
      sign = -sign;
    }
    for (int i = t + 1; i < n; ++i) {
      for (int j = t + 1; j < n; ++j) {
        mpz_class num = a.at(i, j) * a.at(t, t) - a.at(i, t) * a.at(t, j);
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
        a.at(i, j) = q;
      }
      a.at(i, t) = 0;
    }
    prev = a.at(t, t);
  }
  return sign * a.at(n - 1, n - 1);
}

long long IntMatrix::rank() const {
  return smith_normal_form(*this).rank;
}

SmithForm smith_normal_form(const IntMatrix& m) {
  SmithForm f;
  f.d = m;
  f.left = IntMatrix::identity(m.rows());
  f.right = IntMatrix::identity(m.cols());
  IntMatrix& a = f.d;
  const int r = m.rows(), c = m.cols();

  auto find_pivot = [&](int t, int& pi, int& pj) {
    pi = -1;
    pj = -1;
    mpz_class best;
    for (int i = t; i < r; ++i) {
      for (int j = t; j < c; ++j) {
        if (a.at(i, j) == 0) continue;
        mpz_class v = abs(a.at(i, j));
        if (pi < 0 || v < best) {
          best = v;
          pi = i;
          pj = j;
        }
      }
    }
    return pi >= 0;
  };

  // Quotient of nearest-integer division; keeps every remainder within half
  // a pivot, which is what holds intermediate entries small.
  auto nearest_quotient = [](const mpz_class& x, const mpz_class& d) {
    mpz_class q = x / d;  // truncated
    mpz_class rem = x - q * d;
    if (2 * abs(rem) > abs(d)) {
      q += (rem > 0) == (d > 0) ? 1 : -1;
    }
    return q;
  };

  int t = 0;
  while (t < r && t < c) {
    // The pivot is re-picked as the globally smallest entry after every
    // sweep, so remainders immediately become pivots and the magnitude
    // strictly decreases until the column and row are clean.
    int pi, pj;
    if (!find_pivot(t, pi, pj)) break;
    while (true) {
      a.swap_rows(t, pi);
      f.left.swap_rows(t, pi);
      a.swap_cols(t, pj);
      f.right.swap_cols(t, pj);

      bool dirty = false;
      for (int i = t + 1; i < r; ++i) {
        if (a.at(i, t) == 0) continue;
        mpz_class q = nearest_quotient(a.at(i, t), a.at(t, t));
        a.add_row_multiple(i, t, -q);
        f.left.add_row_multiple(i, t, -q);
        if (a.at(i, t) != 0) dirty = true;
      }
      for (int j = t + 1; j < c; ++j) {
        if (a.at(t, j) == 0) continue;
        mpz_class q = nearest_quotient(a.at(t, j), a.at(t, t));
        a.add_col_multiple(j, t, -q);
        f.right.add_col_multiple(j, t, -q);
        if (a.at(t, j) != 0) dirty = true;
      }
      if (dirty) {
        find_pivot(t, pi, pj);
        continue;
      }

      // Column and row are clean. The pivot must also divide the interior;
      // if some entry resists, pull its row in and reduce from the top.
      int bi = -1, bj = -1;
      for (int i = t + 1; i < r && bi < 0; ++i) {
        for (int j = t + 1; j < c; ++j) {
          if (a.at(i, j) % a.at(t, t) != 0) {
            bi = i;
            bj = j;
            break;
          }
        }
      }
      if (bi < 0) break;
      a.add_row_multiple(t, bi, 1);
      f.left.add_row_multiple(t, bi, 1);
      find_pivot(t, pi, pj);
    }
    ++t;
  }

  for (int i = 0; i < std::min(r, c); ++i) {
    if (a.at(i, i) < 0) {
      a.negate_row(i);
      f.left.negate_row(i);
    }
    if (a.at(i, i) != 0) {
      f.invariant_factors.push_back(a.at(i, i));
      ++f.rank;
    }
  }
  return f;
}

IntMatrix left_kernel(const IntMatrix& m) {
  SmithForm f = smith_normal_form(m);
  // v * m == 0 iff v lies in the span of the rows of `left` past the rank.
  return f.left.row_slice(f.rank, m.rows());
}

}  // namespace artc
