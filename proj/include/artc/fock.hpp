#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "artc/trace_words.hpp"

namespace artc {

inline constexpr std::size_t default_basis_cap = 200000;

/// Orthonormal basis of the truncated representation space: all canonical
/// trace words of length <= max_len, ordered by (length, lex).
class FockBasis {
 public:
  static FockBasis build(const Graph& g, int max_len,
                         std::size_t cap = default_basis_cap);

  const Graph& graph() const { return graph_; }
  int max_len() const { return max_len_; }
  int size() const { return static_cast<int>(words_.size()); }
  const TraceWord& word(int i) const { return words_[i]; }
  const std::vector<TraceWord>& words() const { return words_; }
  int index_of(const TraceWord& w) const;  // -1 if absent
  // Number of basis words of length <= len (a prefix of the ordering).
  int count_up_to(int len) const;

 private:
  Graph graph_;
  int max_len_ = 0;
  std::vector<TraceWord> words_;
  std::unordered_map<std::string, int> index_;
  std::vector<int> cumulative_;  // cumulative_[l] = #words of length <= l
};

/// Sparse integer matrix on the basis; generators are partial permutations
/// (at most one entry per row and per column, value 1) and the adjoint is
/// exactly the transpose.
class SparseOperator {
 public:
  SparseOperator() = default;
  explicit SparseOperator(int dim) : dim_(dim), cols_(dim) {}
  static SparseOperator identity(int dim);

  int dim() const { return dim_; }
  void set(int row, int col, long long value);
  const std::vector<std::pair<int, long long>>& col(int j) const {
    return cols_[j];
  }

  SparseOperator operator*(const SparseOperator& o) const;
  SparseOperator operator+(const SparseOperator& o) const;
  SparseOperator operator-(const SparseOperator& o) const;
  SparseOperator transpose() const;

  // Zeroes every column past the first `keep_cols` ones.
  SparseOperator restrict_columns(int keep_cols) const;

  bool is_zero() const;
  long long max_abs() const;
  long long nonzero_count() const;
  // Exact rank over the rationals (fraction-free elimination on the
  // nonzero support).
  long long rank() const;

 private:
  int dim_ = 0;
  std::vector<std::vector<std::pair<int, long long>>> cols_;  // sorted by row
};

// Matrix of the isometry for vertex s: column w holds a single 1 at
// normal_form(s . w) while |w| < max_len; columns at maximal length are zero.
SparseOperator generator_matrix(int s, const FockBasis& basis);

// I - V_s V_s^*.
SparseOperator defect_projection(int s, const FockBasis& basis);

struct RelationCheck {
  std::string name;
  std::string subspace;
  long long residual = 0;
  bool pass = false;
};

struct RelationReport {
  std::vector<RelationCheck> checks;
  int interior_len = 0;
  bool all_pass = true;
};

// Isometry, commutation and orthogonal-range relations, each restricted to
// the interior subspace of words of length <= L-2 where the truncation is
// invisible. Residuals are exact integers and must all be zero.
RelationReport check_relations(const Graph& g, int max_len,
                               std::size_t cap = default_basis_cap);

// Rank of the product of all defect projections; exactly 1 (the vacuum
// projection) on the full truncated basis.
long long vacuum_rank(const Graph& g, int max_len,
                      std::size_t cap = default_basis_cap);

// Residual of (prod over gamma-prime defects) - V (prod over gamma-k
// defects) V^* - (vacuum projection), on the interior subspace. The vacuum
// correction accounts for the kernel ideal of the quotient.
long long eq6_check(const Graph& g, const RemovalStep& removal, int max_len,
                    std::size_t cap = default_basis_cap);

// Applies a star word to a single basis word with the truncated-matrix
// semantics (a plain letter at maximal length yields zero); nullopt = 0.
std::optional<TraceWord> apply_star_word(const StarWord& w, TraceWord u,
                                         const Graph& g, int max_len);

// True iff the truncated matrices of `w` and of its reduced form agree on
// every basis word of length <= max_len - |w|. Requires max_len >= |w| + 2.
bool word_oracle(const StarWord& w, const ReducedForm& r, const Graph& g,
                 int max_len);

}  // namespace artc
