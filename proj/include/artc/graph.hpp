#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "artc/errors.hpp"

namespace artc {

enum class GraphFormat { auto_detect, edge_json, adjacency_text, dot_subset };

/// Finite simple graph. Vertices carry stable string labels (kept in
/// first-appearance order); adjacency is a symmetric irreflexive relation
/// stored as one neighbor bitmask per vertex. Immutable after construction.
class Graph {
 public:
  static constexpr int max_vertices = 64;

  Graph() = default;
  Graph(std::vector<std::string> labels,
        const std::vector<std::pair<int, int>>& edges);

  int n() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int v) const { return labels_.at(v); }
  int index_of(const std::string& label) const;  // -1 if absent

  bool adjacent(int u, int v) const {
    return (adj_[u] >> v) & 1ULL;
  }
  std::uint64_t neighbor_mask(int v) const { return adj_[v]; }
  int degree(int v) const;
  long long edge_count() const;
  std::vector<std::pair<int, int>> edges() const;  // u < v, sorted

  // Induced subgraph on the vertices selected by `vertex_mask`; labels are
  // preserved and relative vertex order is kept.
  Graph induced(std::uint64_t vertex_mask) const;
  Graph removed(int v) const;

  bool operator==(const Graph&) const = default;

 private:
  std::vector<std::string> labels_;
  std::vector<std::uint64_t> adj_;
};

Graph parse_graph(const std::string& text,
                  GraphFormat format = GraphFormat::auto_detect);

Graph complement(const Graph& g);

// Partition of vertex indices into connected components, each sorted,
// components ordered by smallest member.
std::vector<std::vector<int>> connected_components(const Graph& g);

bool is_connected(const Graph& g);

// Vertices adjacent to every other vertex (isolated in the complement).
// Requires n >= 2.
std::vector<int> dominated_vertices(const Graph& g);

struct JoinDecomposition {
  std::vector<Graph> factors;
  std::vector<std::vector<int>> factor_vertex_sets;  // indices in the input
};

// Splits g into join factors: the induced subgraphs on the connected
// components of complement(g). Requires n >= 2 and no dominated vertices.
JoinDecomposition join_decompose(const Graph& g);

struct RemovalStep {
  int removed_vertex = -1;  // index in the input graph
  Graph gamma_prime;        // input with the vertex deleted
  Graph gamma_k;            // induced subgraph on the removed vertex's neighbors
  int k = 0;                // neighbor count
};

// Picks a vertex whose deletion keeps the complement connected: the
// smallest-index leaf of a DFS spanning tree of complement(g) rooted at 0.
// Requires complement(g) connected and n >= 3.
RemovalStep select_removal(const Graph& g);

// select_removal for n >= 3; for the two-vertex base case returns the
// degenerate step removing index 1 (k = 0, empty gamma_k).
RemovalStep removal_step_for(const Graph& g);

}  // namespace artc
