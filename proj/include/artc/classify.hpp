#pragma once

#include <string>
#include <vector>

#include "artc/euler.hpp"
#include "artc/graph.hpp"
#include "artc/kgroups.hpp"

namespace artc {

// "O_2" for chi = -1, "O_1" for chi = 0, generally O_{1+|chi|}.
std::string cuntz_symbol(long long chi);

struct FactorReport {
  std::vector<std::string> vertices;
  long long chi = 0;
  CliqueProfile clique_profile;
  std::string symbol;
  KResult quotient_k;       // K-groups of the boundary quotient
  ToeplitzKResult toeplitz;  // K-groups of the non-quotient algebra
};

struct ClassificationReport {
  std::vector<std::string> input_vertices;
  long long input_edges = 0;
  std::vector<FactorReport> factors;  // ordered by smallest vertex label
  std::string tensor_expression;      // e.g. "O_2 (x) O_2"
};

struct ClassifyOptions {
  int clique_vertex_bound = default_clique_vertex_bound;
  int oracle_window = 6;
};

// Full pipeline: hypothesis gate, join decomposition, per-factor Euler
// characteristic (both routes), per-factor K-groups (closed form checked
// against the truncated oracle), Cuntz symbols. Throws hypothesis_error with
// the offending labels when some vertex is adjacent to all others.
ClassificationReport classify(const Graph& g, const ClassifyOptions& opts = {});

}  // namespace artc
