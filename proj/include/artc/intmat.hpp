#pragma once

#include <gmpxx.h>

#include <vector>

namespace artc {

/// Dense matrix of exact integers (arbitrary precision), row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  mpz_class& at(int i, int j) { return a_[i * cols_ + j]; }
  const mpz_class& at(int i, int j) const { return a_[i * cols_ + j]; }

  IntMatrix operator*(const IntMatrix& o) const;
  IntMatrix transpose() const;
  bool operator==(const IntMatrix&) const = default;

  void swap_rows(int a, int b);
  void swap_cols(int a, int b);
  void negate_row(int i);
  void negate_col(int j);
  // row[dst] += q * row[src]
  void add_row_multiple(int dst, int src, const mpz_class& q);
  void add_col_multiple(int dst, int src, const mpz_class& q);

  IntMatrix row_slice(int from, int to) const;  // rows [from, to)
  // Stacks rows of `below` under this matrix (column counts must agree).
  IntMatrix stacked(const IntMatrix& below) const;

  bool is_zero() const;
  mpz_class determinant() const;  // Bareiss, square matrices only
  long long rank() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<mpz_class> a_;
};

struct SmithForm {
  IntMatrix d;      // diagonal, nonnegative, divisibility chain
  IntMatrix left;   // unimodular; left * m * right == d
  IntMatrix right;  // unimodular
  std::vector<mpz_class> invariant_factors;  // nonzero diagonal entries
  int rank = 0;
};

// Smallest-|pivot| strategy with full row/column elimination; deterministic
// tie-break by position.
SmithForm smith_normal_form(const IntMatrix& m);

// Rows spanning { v : v * m == 0 }; the span is a saturated sublattice.
IntMatrix left_kernel(const IntMatrix& m);

}  // namespace artc
