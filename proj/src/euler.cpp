#include "artc/euler.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace artc {

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw std::overflow_error("integer overflow in addition");
  }
  return r;
}

long long checked_sub(long long a, long long b) {
  long long r;
  if (__builtin_sub_overflow(a, b, &r)) {
    throw std::overflow_error("integer overflow in subtraction");
  }
  return r;
}

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw std::overflow_error("integer overflow in multiplication");
  }
  return r;
}

namespace {

// Extends the current clique (of `size` vertices) by every candidate in
// `cand`, restricting candidates to later neighbors of the chosen vertex so
// each clique is visited exactly once.
void extend_cliques(const std::uint64_t* nbr, std::uint64_t cand, int size,
                    std::vector<long long>& counts) {
  while (cand) {
    int v = std::countr_zero(cand);
    cand &= cand - 1;
    counts[size + 1] = checked_add(counts[size + 1], 1);
    std::uint64_t next = cand & nbr[v];
    if (next) extend_cliques(nbr, next, size + 1, counts);
  }
}

}  // namespace

std::vector<long long> clique_counts_masks(const std::uint64_t* nbr, int n) {
  std::vector<long long> counts(n + 1, 0);
  counts[0] = 1;  // the empty subgraph
  if (n > 0) {
    const std::uint64_t all = (n == 64) ? ~0ULL : ((1ULL << n) - 1);
    extend_cliques(nbr, all, 0, counts);
  }
  return counts;
}

CliqueProfile clique_counts(const Graph& g, int vertex_bound) {
  if (g.n() > vertex_bound) {
    throw resource_error("clique_counts: graph has " + std::to_string(g.n()) +
                         " vertices, bound is " + std::to_string(vertex_bound));
  }
  std::vector<std::uint64_t> nbr(g.n());
  for (int v = 0; v < g.n(); ++v) nbr[v] = g.neighbor_mask(v);
  auto counts = clique_counts_masks(nbr.data(), g.n());
  CliqueProfile p;
  for (int j = 1; j <= g.n(); ++j) {
    if (counts[j] == 0) break;
    p.counts.push_back(counts[j]);
  }
  return p;
}

EulerResult chi_direct(const Graph& g, int vertex_bound) {
  EulerResult r;
  r.method = ChiMethod::direct;
  r.profile = clique_counts(g, vertex_bound);
  long long chi = 1;
  long long sign = -1;  // contribution of N_1 is -N_1
  for (long long nj : r.profile.counts) {
    chi = checked_add(chi, checked_mul(sign, nj));
    sign = -sign;
  }
  r.chi = chi;
  return r;
}

EulerResult chi_recursive(const Graph& g, int vertex_bound) {
  if (g.n() < 2) {
    throw std::invalid_argument("chi_recursive: need at least 2 vertices");
  }
  if (!is_connected(complement(g))) {
    throw hypothesis_error("chi_recursive: complement of the graph is disconnected");
  }
  EulerResult r;
  r.method = ChiMethod::recursive;
  if (g.n() == 2) {
    // connected complement on two vertices forces the edgeless pair
    r.chi = -1;
    return r;
  }
  RemovalStep step = select_removal(g);
  long long chi_prime = chi_recursive(step.gamma_prime, vertex_bound).chi;
  long long chi_k = chi_direct(step.gamma_k, vertex_bound).chi;
  r.chi = checked_sub(chi_prime, chi_k);
  return r;
}

std::vector<EulerResult> chi_of_join_factors(const JoinDecomposition& d,
                                             int vertex_bound) {
  std::vector<EulerResult> out;
  out.reserve(d.factors.size());
  for (const Graph& f : d.factors) {
    EulerResult direct = chi_direct(f, vertex_bound);
    EulerResult rec = chi_recursive(f, vertex_bound);
    if (direct.chi != rec.chi) {
      throw std::logic_error("chi_of_join_factors: direct and recursive "
                             "Euler characteristics disagree");
    }
    out.push_back(std::move(direct));
  }
  return out;
}

}  // namespace artc
