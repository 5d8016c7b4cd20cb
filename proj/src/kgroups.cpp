#include "artc/kgroups.hpp"

#include <numeric>
#include <stdexcept>

#include "artc/euler.hpp"

namespace artc {

namespace {

long long to_ll(const mpz_class& v) {
  if (!v.fits_slong_p()) {
    throw std::overflow_error("integer does not fit in 64 bits");
  }
  return static_cast<long long>(v.get_si());
}

// gmpxx has no long long overloads; long is 64-bit on every supported target.
mpz_class mpz_of(long long v) { return mpz_class(static_cast<long>(v)); }

}  // namespace

std::optional<long long> FGAbelianGroup::marked_order() const {
  const std::size_t nt = torsion.size();
  for (std::size_t i = nt; i < marked_class.size(); ++i) {
    if (marked_class[i] != 0) return std::nullopt;  // free component: infinite
  }
  long long order = 1;
  for (std::size_t i = 0; i < nt && i < marked_class.size(); ++i) {
    long long d = torsion[i];
    long long c = marked_class[i] % d;
    if (c < 0) c += d;
    long long o = d / std::gcd(d, c);  // gcd(d, 0) = d, giving order 1
    order = std::lcm(order, o);
  }
  return order;
}

std::string FGAbelianGroup::display() const {
  if (is_trivial()) return "0";
  std::string s;
  auto append = [&](const std::string& piece) {
    if (!s.empty()) s += " (+) ";
    s += piece;
  };
  for (long long i = 0; i < free_rank; ++i) append("Z");
  for (long long d : torsion) append("Z_" + std::to_string(d));
  return s;
}

FGAbelianGroup direct_sum(const FGAbelianGroup& a, const FGAbelianGroup& b) {
  // Re-canonicalize the torsion multiset into a divisibility chain by
  // presenting the sum and reducing again.
  const int nt = static_cast<int>(a.torsion.size() + b.torsion.size());
  const long long free_rank = a.free_rank + b.free_rank;
  Presentation p;
  p.n_generators = nt + static_cast<int>(free_rank);
  p.relations = IntMatrix(nt, p.n_generators);
  int row = 0;
  for (long long d : a.torsion) {
    p.relations.at(row, row) = mpz_of(d);
    ++row;
  }
  for (long long d : b.torsion) {
    p.relations.at(row, row) = mpz_of(d);
    ++row;
  }
  FGAbelianGroup s = group_from_presentation(p);
  s.marked_class.assign(s.torsion.size() + s.free_rank, 0);
  return s;
}

FGAbelianGroup group_from_presentation(const Presentation& p,
                                       int marked_generator) {
  const int g = p.n_generators;
  if (p.relations.rows() > 0 && p.relations.cols() != g) {
    throw std::invalid_argument("presentation: relation width != generators");
  }
  if (marked_generator < 0 || marked_generator >= std::max(g, 1)) {
    throw std::invalid_argument("presentation: marked generator out of range");
  }
  if (g == 0) return FGAbelianGroup{};

  IntMatrix rel = p.relations.rows() > 0 ? p.relations : IntMatrix(0, g);
  SmithForm f = smith_normal_form(rel);

  FGAbelianGroup grp;
  grp.free_rank = g - f.rank;
  std::vector<int> torsion_cols;
  for (int i = 0; i < f.rank; ++i) {
    if (f.invariant_factors[i] > 1) {
      grp.torsion.push_back(to_ll(f.invariant_factors[i]));
      torsion_cols.push_back(i);
    }
  }
  // Class of e_j in the new coordinates is row j of the right transform.
  for (int i : torsion_cols) {
    mpz_class c = f.right.at(marked_generator, i) % f.d.at(i, i);
    if (c < 0) c += f.d.at(i, i);
    grp.marked_class.push_back(to_ll(c));
  }
  for (int i = f.rank; i < g; ++i) {
    grp.marked_class.push_back(to_ll(f.right.at(marked_generator, i)));
  }
  return grp;
}

KResult kgroups_closed_form(long long chi) {
  KResult r;
  r.chi = chi;
  r.source = KSource::closed_form;
  if (chi == 0) {
    r.k0 = FGAbelianGroup{1, {}, {1}};
    r.k1 = FGAbelianGroup{1, {}, {0}};
  } else {
    long long a = chi < 0 ? -chi : chi;
    if (a == 1) {
      r.k0 = FGAbelianGroup{};  // Z_1 is trivial
    } else {
      r.k0 = FGAbelianGroup{0, {a}, {1}};
    }
    r.k1 = FGAbelianGroup{};
  }
  return r;
}

namespace {

// Relation rows x*g_i - y*g_{i+1} (i over the 2N inner steps) for a window
// with generators g_{-N}..g_N; direction `down` mirrors the indices.
IntMatrix shift_relations(long long x, long long y, int window,
                          ShiftDirection dir) {
  const int m = 2 * window + 1;
  IntMatrix rel(m - 1, m);
  for (int i = 0; i + 1 < m; ++i) {
    if (dir == ShiftDirection::up) {
      rel.at(i, i) = mpz_of(x);
      rel.at(i, i + 1) = mpz_of(-y);
    } else {
      rel.at(i, m - 1 - i) = mpz_of(x);
      rel.at(i, m - 2 - i) = mpz_of(-y);
    }
  }
  return rel;
}

// Rows of (id - shift) applied to each domain generator, written in the
// coordinates of a window larger by one; `offset` aligns g_i across windows.
IntMatrix id_minus_shift(int window, ShiftDirection dir) {
  const int m = 2 * window + 1;
  const int mc = m + 2;
  IntMatrix f(m, mc);
  for (int i = 0; i < m; ++i) {
    f.at(i, i + 1) = 1;
    f.at(i, i + 1 + (dir == ShiftDirection::up ? 1 : -1)) -= 1;
  }
  return f;
}

// Cokernel of (id - shift) on the presented window group.
FGAbelianGroup pv_k0_window(long long x, long long y, int window,
                            ShiftDirection dir) {
  const int m = 2 * window + 1;
  IntMatrix rel = shift_relations(x, y, window, dir);
  IntMatrix diff(m - 1, m);
  for (int i = 0; i + 1 < m; ++i) {
    diff.at(i, i) = 1;
    diff.at(i, i + 1) = -1;
  }
  Presentation p{m, rel.stacked(diff)};
  return group_from_presentation(p, window);  // marked class = image of g_0
}

// Generators of { z : z * w lies in the row span of s }.
IntMatrix lattice_preimage(const IntMatrix& w, const IntMatrix& s) {
  IntMatrix stacked = w.stacked(s);
  IntMatrix ker = left_kernel(stacked);
  IntMatrix proj(ker.rows(), w.rows());
  for (int i = 0; i < ker.rows(); ++i)
    for (int j = 0; j < w.rows(); ++j) proj.at(i, j) = ker.at(i, j);
  return proj;
}

// Abstract group span(w) / span(s); requires span(s) contained in span(w).
FGAbelianGroup subgroup_quotient(const IntMatrix& w, const IntMatrix& s) {
  Presentation p{w.rows(), lattice_preimage(w, s)};
  if (w.rows() == 0) return FGAbelianGroup{};
  return group_from_presentation(p);
}

// Kernel of (id - shift): G_N -> G_{N+1}, with its image pushed two windows
// further to let boundary-only classes die off before the group is read.
FGAbelianGroup pv_k1_kernel_window(long long x, long long y, int window,
                                   ShiftDirection dir) {
  const int push = 2;
  const int m = 2 * window + 1;
  IntMatrix f = id_minus_shift(window, dir);
  IntMatrix s_next = shift_relations(x, y, window + 1, dir);
  // Lattice of domain elements mapped into the codomain relation span.
  IntMatrix ker_gens = lattice_preimage(f, s_next);

  // Embed into the window N+push coordinates and take the subgroup these
  // classes generate there.
  const int big = window + push;
  const int mb = 2 * big + 1;
  IntMatrix embedded(ker_gens.rows(), mb);
  for (int i = 0; i < ker_gens.rows(); ++i)
    for (int j = 0; j < m; ++j) embedded.at(i, j + push) = ker_gens.at(i, j);
  IntMatrix s_big = shift_relations(x, y, big, dir);
  return subgroup_quotient(embedded.stacked(s_big), s_big);
}

FGAbelianGroup pv_k1_free_module_window(int window) {
  const int m = 2 * window + 1;
  IntMatrix diff(m - 1, m);
  for (int i = 0; i + 1 < m; ++i) {
    diff.at(i, i) = 1;
    diff.at(i, i + 1) = -1;
  }
  return group_from_presentation(Presentation{m, diff}, window);
}

bool stable(const FGAbelianGroup& a, const FGAbelianGroup& b,
            bool compare_marked) {
  if (!a.same_group(b)) return false;
  return !compare_marked || a.marked_order() == b.marked_order();
}

}  // namespace

KResult pv_truncated(long long x, long long y, int window, ShiftDirection dir) {
  if (window < 2) throw std::invalid_argument("pv_truncated: window must be >= 2");

  FGAbelianGroup k0 = pv_k0_window(x, y, window, dir);
  FGAbelianGroup k0_next = pv_k0_window(x, y, window + 1, dir);
  if (!stable(k0, k0_next, /*compare_marked=*/true)) {
    throw oracle_instability_error(
        "pv_truncated: K0 differs between windows " + std::to_string(window) +
        " and " + std::to_string(window + 1));
  }

  FGAbelianGroup ker = pv_k1_kernel_window(x, y, window, dir);
  FGAbelianGroup ker_next = pv_k1_kernel_window(x, y, window + 1, dir);
  if (!stable(ker, ker_next, /*compare_marked=*/false)) {
    throw oracle_instability_error(
        "pv_truncated: K1 kernel part differs between windows " +
        std::to_string(window) + " and " + std::to_string(window + 1));
  }

  FGAbelianGroup k1 = ker;
  if (x == 0 && y == 0) {
    FGAbelianGroup free_part = pv_k1_free_module_window(window);
    FGAbelianGroup free_next = pv_k1_free_module_window(window + 1);
    if (!stable(free_part, free_next, /*compare_marked=*/false)) {
      throw oracle_instability_error(
          "pv_truncated: K1 free-module part differs between windows");
    }
    k1 = direct_sum(ker, free_part);
  }

  KResult r;
  r.k0 = std::move(k0);
  r.k1 = std::move(k1);
  r.chi = checked_sub(x, y);
  r.source = KSource::pv_truncated;
  return r;
}

ToeplitzKResult kgroups_toeplitz(long long chi) {
  ToeplitzKResult r;
  r.k0 = FGAbelianGroup{1, {}, {1}};
  r.k1 = FGAbelianGroup{};
  r.extension_multiplier = chi;
  return r;
}

bool k_results_agree(const KResult& a, const KResult& b) {
  return a.k0.same_group(b.k0) &&
         a.k0.marked_order() == b.k0.marked_order() &&
         a.k1.same_group(b.k1) && a.chi == b.chi;
}

KResult kgroups_for_graph(const Graph& g, int oracle_window) {
  if (g.n() < 2) {
    throw std::invalid_argument("kgroups_for_graph: need at least 2 vertices");
  }
  if (!is_connected(complement(g))) {
    throw hypothesis_error("kgroups_for_graph: complement of the graph is disconnected");
  }
  const long long chi = chi_direct(g).chi;
  KResult closed = kgroups_closed_form(chi);
  if (g.n() >= 3) {
    RemovalStep step = select_removal(g);
    const long long x = chi_direct(step.gamma_prime).chi;
    const long long y = chi_direct(step.gamma_k).chi;
    if (checked_sub(x, y) != chi) {
      throw std::logic_error("kgroups_for_graph: deletion recursion "
                             "disagrees with the direct Euler characteristic");
    }
    KResult oracle = pv_truncated(x, y, oracle_window);
    if (!k_results_agree(closed, oracle)) {
      throw std::logic_error("kgroups_for_graph: closed form disagrees with "
                             "the truncated shift-module oracle");
    }
  }
  return closed;
}

}  // namespace artc
