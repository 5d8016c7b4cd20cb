#pragma once

#include <cstdint>
#include <vector>

#include "artc/graph.hpp"

namespace artc {

/// Counts of complete subgraphs by size: counts[j-1] = number of complete
/// subgraphs on j vertices. Trailing zero sizes are trimmed, so every stored
/// count is positive.
struct CliqueProfile {
  std::vector<long long> counts;
  bool operator==(const CliqueProfile&) const = default;
};

enum class ChiMethod { direct, recursive };

struct EulerResult {
  long long chi = 0;
  CliqueProfile profile;  // populated by the direct method
  ChiMethod method = ChiMethod::direct;
};

inline constexpr int default_clique_vertex_bound = 24;

// Counting core over neighbor bitmasks: returns counts[j] = number of
// complete subgraphs on j vertices, for j = 0..n (counts[0] = 1).
// Branch-and-bound over vertices with neighborhood intersection.
std::vector<long long> clique_counts_masks(const std::uint64_t* nbr, int n);

CliqueProfile clique_counts(const Graph& g,
                            int vertex_bound = default_clique_vertex_bound);

// chi = 1 - N1 + N2 - N3 + ...
EulerResult chi_direct(const Graph& g,
                       int vertex_bound = default_clique_vertex_bound);

// Deletion recursion: base case is the 2-vertex edgeless graph (-1);
// otherwise chi(g) = chi(gamma_prime) - chi_direct(gamma_k) for the
// canonical removal step. Requires complement(g) connected and n >= 2.
EulerResult chi_recursive(const Graph& g,
                          int vertex_bound = default_clique_vertex_bound);

// Per-factor chi via chi_direct, each cross-checked against chi_recursive.
std::vector<EulerResult> chi_of_join_factors(
    const JoinDecomposition& d, int vertex_bound = default_clique_vertex_bound);

// Checked 64-bit helpers; throw std::overflow_error on wraparound.
long long checked_add(long long a, long long b);
long long checked_sub(long long a, long long b);
long long checked_mul(long long a, long long b);

}  // namespace artc
