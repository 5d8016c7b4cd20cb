#include "artc/classify.hpp"

#include <algorithm>
#include <stdexcept>

namespace artc {

std::string cuntz_symbol(long long chi) {
  long long a = chi < 0 ? -chi : chi;
  return "O_" + std::to_string(checked_add(a, 1));
}

ClassificationReport classify(const Graph& g, const ClassifyOptions& opts) {
  if (g.n() < 2) {
    throw std::invalid_argument("classify: need at least 2 vertices");
  }
  ClassificationReport report;
  report.input_vertices = g.labels();
  report.input_edges = g.edge_count();

  JoinDecomposition jd = join_decompose(g);  // hypothesis gate lives here
  std::vector<EulerResult> chis = chi_of_join_factors(jd, opts.clique_vertex_bound);

  for (std::size_t i = 0; i < jd.factors.size(); ++i) {
    FactorReport f;
    f.vertices = jd.factors[i].labels();
    f.chi = chis[i].chi;
    f.clique_profile = chis[i].profile;
    f.symbol = cuntz_symbol(f.chi);
    f.quotient_k = kgroups_for_graph(jd.factors[i], opts.oracle_window);
    f.toeplitz = kgroups_toeplitz(f.chi);
    report.factors.push_back(std::move(f));
  }

  std::sort(report.factors.begin(), report.factors.end(),
            [](const FactorReport& a, const FactorReport& b) {
              return *std::min_element(a.vertices.begin(), a.vertices.end()) <
                     *std::min_element(b.vertices.begin(), b.vertices.end());
            });

  for (const FactorReport& f : report.factors) {
    if (!report.tensor_expression.empty()) report.tensor_expression += " (x) ";
    report.tensor_expression += f.symbol;
  }
  return report;
}

}  // namespace artc
