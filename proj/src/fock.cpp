#include "artc/fock.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <stdexcept>

#include "artc/euler.hpp"

namespace artc {

namespace {

std::string word_key(const std::vector<int>& letters) {
  std::string k;
  k.reserve(letters.size());
  for (int v : letters) k.push_back(static_cast<char>(v + 1));
  return k;
}

}  // namespace

FockBasis FockBasis::build(const Graph& g, int max_len, std::size_t cap) {
  if (max_len < 0) throw std::invalid_argument("FockBasis: negative length");
  FockBasis b;
  b.graph_ = g;
  b.max_len_ = max_len;
  b.words_.push_back(TraceWord{});
  b.index_.emplace(word_key({}), 0);
  b.cumulative_.push_back(1);
  std::vector<std::vector<int>> level = {{}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& w : level) {
      for (int a = 0; a < g.n(); ++a) {
        if (!can_append_canonical(w, a, g)) continue;
        std::vector<int> ext = w;
        ext.push_back(a);
        if (b.words_.size() + next.size() + 1 > cap) {
          throw resource_error(
              "FockBasis: basis cap of " + std::to_string(cap) +
              " words exceeded at length " + std::to_string(len));
        }
        next.push_back(std::move(ext));
      }
    }
    for (auto& w : next) {
      b.index_.emplace(word_key(w), static_cast<int>(b.words_.size()));
      b.words_.push_back(TraceWord{w});
    }
    b.cumulative_.push_back(static_cast<int>(b.words_.size()));
    level = std::move(next);
  }
  while (static_cast<int>(b.cumulative_.size()) <= max_len) {
    b.cumulative_.push_back(static_cast<int>(b.words_.size()));
  }
  return b;
}

int FockBasis::index_of(const TraceWord& w) const {
  auto it = index_.find(word_key(w.letters));
  return it == index_.end() ? -1 : it->second;
}

int FockBasis::count_up_to(int len) const {
  if (len < 0) return 0;
  if (len >= static_cast<int>(cumulative_.size())) return size();
  return cumulative_[len];
}

SparseOperator SparseOperator::identity(int dim) {
  SparseOperator m(dim);
  for (int i = 0; i < dim; ++i) m.cols_[i].push_back({i, 1});
  return m;
}

void SparseOperator::set(int row, int col, long long value) {
  if (value == 0) return;
  auto& c = cols_[col];
  auto it = std::lower_bound(
      c.begin(), c.end(), row,
      [](const std::pair<int, long long>& e, int r) { return e.first < r; });
  if (it != c.end() && it->first == row) {
    it->second = value;
  } else {
    c.insert(it, {row, value});
  }
}

SparseOperator SparseOperator::operator*(const SparseOperator& o) const {
  if (dim_ != o.dim_) throw std::invalid_argument("SparseOperator: dim mismatch");
  SparseOperator r(dim_);
  std::map<int, long long> acc;
  for (int j = 0; j < dim_; ++j) {
    acc.clear();
    for (auto [k, bv] : o.cols_[j]) {
      for (auto [i, av] : cols_[k]) {
        acc[i] = checked_add(acc[i], checked_mul(av, bv));
      }
    }
    for (auto [i, v] : acc) {
      if (v != 0) r.cols_[j].push_back({i, v});
    }
  }
  return r;
}

SparseOperator SparseOperator::operator+(const SparseOperator& o) const {
  if (dim_ != o.dim_) throw std::invalid_argument("SparseOperator: dim mismatch");
  SparseOperator r(dim_);
  for (int j = 0; j < dim_; ++j) {
    auto& out = r.cols_[j];
    const auto& a = cols_[j];
    const auto& b = o.cols_[j];
    std::size_t ia = 0, ib = 0;
    while (ia < a.size() || ib < b.size()) {
      if (ib == b.size() || (ia < a.size() && a[ia].first < b[ib].first)) {
        out.push_back(a[ia++]);
      } else if (ia == a.size() || b[ib].first < a[ia].first) {
        out.push_back(b[ib++]);
      } else {
        long long v = checked_add(a[ia].second, b[ib].second);
        if (v != 0) out.push_back({a[ia].first, v});
        ++ia;
        ++ib;
      }
    }
  }
  return r;
}

SparseOperator SparseOperator::operator-(const SparseOperator& o) const {
  SparseOperator neg = o;
  for (auto& c : neg.cols_) {
    for (auto& e : c) e.second = -e.second;
  }
  return *this + neg;
}

SparseOperator SparseOperator::transpose() const {
  SparseOperator r(dim_);
  for (int j = 0; j < dim_; ++j) {
    for (auto [i, v] : cols_[j]) r.cols_[i].push_back({j, v});
  }
  return r;
}

SparseOperator SparseOperator::restrict_columns(int keep_cols) const {
  SparseOperator r(dim_);
  for (int j = 0; j < std::min(dim_, keep_cols); ++j) r.cols_[j] = cols_[j];
  return r;
}

bool SparseOperator::is_zero() const {
  for (const auto& c : cols_) {
    if (!c.empty()) return false;
  }
  return true;
}

long long SparseOperator::max_abs() const {
  long long m = 0;
  for (const auto& c : cols_) {
    for (auto [i, v] : c) m = std::max(m, v < 0 ? -v : v);
  }
  return m;
}

long long SparseOperator::nonzero_count() const {
  long long m = 0;
  for (const auto& c : cols_) m += static_cast<long long>(c.size());
  return m;
}

long long SparseOperator::rank() const {
  // Gather the nonzero support and run fraction-free elimination there.
  std::vector<int> live_cols;
  std::map<int, int> row_id;
  for (int j = 0; j < dim_; ++j) {
    if (cols_[j].empty()) continue;
    live_cols.push_back(j);
    for (auto [i, v] : cols_[j]) row_id.emplace(i, 0);
  }
  int nr = 0;
  for (auto& [row, id] : row_id) id = nr++;
  const int nc = static_cast<int>(live_cols.size());
  if (nc == 0) return 0;
  std::vector<std::vector<mpz_class>> a(nr, std::vector<mpz_class>(nc));
  for (int cj = 0; cj < nc; ++cj) {
    for (auto [i, v] : cols_[live_cols[cj]]) {
      a[row_id[i]][cj] = static_cast<long>(v);
    }
  }
  long long rank = 0;
  int row = 0;
  for (int col = 0; col < nc && row < nr; ++col) {
    int p = -1;
    for (int i = row; i < nr; ++i) {
      if (a[i][col] != 0) { p = i; break; }
    }
    if (p < 0) continue;
    std::swap(a[p], a[row]);
    for (int i = row + 1; i < nr; ++i) {
      if (a[i][col] == 0) continue;
      mpz_class f = a[i][col];
      for (int j = col; j < nc; ++j) {
        a[i][j] = a[i][j] * a[row][col] - f * a[row][j];
      }
    }
    ++row;
    ++rank;
  }
  return rank;
}

SparseOperator generator_matrix(int s, const FockBasis& basis) {
  const Graph& g = basis.graph();
  if (s < 0 || s >= g.n()) {
    throw std::invalid_argument("generator_matrix: invalid vertex");
  }
  SparseOperator m(basis.size());
  for (int j = 0; j < basis.size(); ++j) {
    const TraceWord& w = basis.word(j);
    if (static_cast<int>(w.size()) >= basis.max_len()) continue;  // truncated
    std::vector<int> ext;
    ext.reserve(w.size() + 1);
    ext.push_back(s);
    ext.insert(ext.end(), w.letters.begin(), w.letters.end());
    int row = basis.index_of(normal_form(std::move(ext), g));
    m.set(row, j, 1);
  }
  return m;
}

SparseOperator defect_projection(int s, const FockBasis& basis) {
  SparseOperator v = generator_matrix(s, basis);
  return SparseOperator::identity(basis.size()) - v * v.transpose();
}

RelationReport check_relations(const Graph& g, int max_len, std::size_t cap) {
  if (max_len < 3) {
    throw std::invalid_argument("check_relations: need max_len >= 3");
  }
  FockBasis basis = FockBasis::build(g, max_len, cap);
  const int interior = basis.count_up_to(max_len - 2);
  const std::string subspace =
      "words of length <= " + std::to_string(max_len - 2);

  std::vector<SparseOperator> v, vt;
  v.reserve(g.n());
  for (int s = 0; s < g.n(); ++s) {
    v.push_back(generator_matrix(s, basis));
    vt.push_back(v.back().transpose());
  }
  SparseOperator id = SparseOperator::identity(basis.size());

  RelationReport report;
  report.interior_len = max_len - 2;
  auto add = [&](const std::string& name, const SparseOperator& diff) {
    long long residual = diff.restrict_columns(interior).max_abs();
    report.checks.push_back({name, subspace, residual, residual == 0});
    report.all_pass = report.all_pass && residual == 0;
  };

  for (int s = 0; s < g.n(); ++s) {
    add("V" + g.label(s) + "* V" + g.label(s) + " = I", vt[s] * v[s] - id);
  }
  for (int s = 0; s < g.n(); ++s) {
    for (int t = s + 1; t < g.n(); ++t) {
      const std::string a = g.label(s), b = g.label(t);
      if (g.adjacent(s, t)) {
        add("V" + a + " V" + b + " = V" + b + " V" + a,
            v[s] * v[t] - v[t] * v[s]);
        add("V" + a + "* V" + b + " = V" + b + " V" + a + "*",
            vt[s] * v[t] - v[t] * vt[s]);
      } else {
        add("V" + a + "* V" + b + " = 0", vt[s] * v[t]);
      }
    }
  }
  return report;
}

long long vacuum_rank(const Graph& g, int max_len, std::size_t cap) {
  FockBasis basis = FockBasis::build(g, max_len, cap);
  SparseOperator p = SparseOperator::identity(basis.size());
  for (int s = 0; s < g.n(); ++s) p = p * defect_projection(s, basis);
  return p.rank();
}

long long eq6_check(const Graph& g, const RemovalStep& removal, int max_len,
                    std::size_t cap) {
  if (max_len < 3) throw std::invalid_argument("eq6_check: need max_len >= 3");
  if (!is_connected(complement(g))) {
    throw hypothesis_error("eq6_check: complement of the graph is disconnected");
  }
  FockBasis basis = FockBasis::build(g, max_len, cap);
  const int v_idx = removal.removed_vertex;
  if (v_idx < 0 || v_idx >= g.n()) {
    throw std::invalid_argument("eq6_check: bad removal step");
  }

  SparseOperator lhs = SparseOperator::identity(basis.size());
  for (int s = 0; s < g.n(); ++s) {
    if (s != v_idx) lhs = lhs * defect_projection(s, basis);
  }
  SparseOperator inner = SparseOperator::identity(basis.size());
  for (const std::string& label : removal.gamma_k.labels()) {
    int s = g.index_of(label);
    if (s < 0) throw std::invalid_argument("eq6_check: gamma_k vertex not in graph");
    inner = inner * defect_projection(s, basis);
  }
  SparseOperator v = generator_matrix(v_idx, basis);
  SparseOperator rhs = v * inner * v.transpose();

  SparseOperator vacuum(basis.size());
  vacuum.set(0, 0, 1);  // rank-one projection onto the empty word

  const int interior = basis.count_up_to(max_len - 2);
  return (lhs - rhs - vacuum).restrict_columns(interior).max_abs();
}

std::optional<TraceWord> apply_star_word(const StarWord& w, TraceWord u,
                                         const Graph& g, int max_len) {
  // Operator product: the rightmost factor acts first.
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (it->vertex < 0 || it->vertex >= g.n()) {
      throw std::invalid_argument("apply_star_word: invalid vertex");
    }
    if (!it->star) {
      if (static_cast<int>(u.size()) >= max_len) return std::nullopt;
      std::vector<int> ext;
      ext.reserve(u.size() + 1);
      ext.push_back(it->vertex);
      ext.insert(ext.end(), u.letters.begin(), u.letters.end());
      u = normal_form(std::move(ext), g);
    } else {
      // V_s^*: remove a minimal occurrence of s, or annihilate.
      const auto& ls = u.letters;
      int found = -1;
      for (std::size_t p = 0; p < ls.size(); ++p) {
        if (ls[p] != it->vertex) continue;
        bool minimal = true;
        for (std::size_t q = 0; q < p; ++q) {
          if (!g.adjacent(ls[q], ls[p])) { minimal = false; break; }
        }
        if (minimal) found = static_cast<int>(p);
        break;  // only the first occurrence of a letter can be minimal
      }
      if (found < 0) return std::nullopt;
      std::vector<int> rest = ls;
      rest.erase(rest.begin() + found);
      u = normal_form(std::move(rest), g);
    }
  }
  return u;
}

bool word_oracle(const StarWord& w, const ReducedForm& r, const Graph& g,
                 int max_len) {
  const int len = static_cast<int>(w.size());
  if (max_len < len + 2) {
    throw std::invalid_argument("word_oracle: need max_len >= |w| + 2");
  }
  const int budget = max_len - len;
  StarWord reduced_word;
  if (!r.zero) reduced_word = r.to_star_word();

  // Enumerate basis words of length <= budget and compare columns.
  std::vector<std::vector<int>> level = {{}};
  for (int l = 0; l <= budget; ++l) {
    for (const auto& letters : level) {
      TraceWord u{letters};
      auto lhs = apply_star_word(w, u, g, max_len);
      std::optional<TraceWord> rhs;
      if (!r.zero) rhs = apply_star_word(reduced_word, u, g, max_len);
      if (lhs != rhs) return false;
    }
    if (l == budget) break;
    std::vector<std::vector<int>> next;
    for (const auto& letters : level) {
      for (int a = 0; a < g.n(); ++a) {
        if (!can_append_canonical(letters, a, g)) continue;
        auto ext = letters;
        ext.push_back(a);
        next.push_back(std::move(ext));
      }
    }
    level = std::move(next);
  }
  return true;
}

}  // namespace artc
