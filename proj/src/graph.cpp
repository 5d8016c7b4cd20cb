#include "artc/graph.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace artc {

Graph::Graph(std::vector<std::string> labels,
             const std::vector<std::pair<int, int>>& edges)
    : labels_(std::move(labels)) {
  const int n = static_cast<int>(labels_.size());
  if (n > max_vertices) {
    throw resource_error("graph has " + std::to_string(n) +
                         " vertices; at most " +
                         std::to_string(max_vertices) + " are supported");
  }
  {
    std::set<std::string> seen;
    for (const auto& l : labels_) {
      if (!seen.insert(l).second) {
        throw parse_error("duplicate vertex label \"" + l + "\"");
      }
    }
  }
  adj_.assign(n, 0);
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw parse_error("edge endpoint out of range");
    }
    if (u == v) {
      throw parse_error("self-loop at vertex \"" + labels_[u] + "\"");
    }
    adj_[u] |= 1ULL << v;
    adj_[v] |= 1ULL << u;
  }
}

int Graph::index_of(const std::string& label) const {
  for (int i = 0; i < n(); ++i) {
    if (labels_[i] == label) return i;
  }
  return -1;
}

int Graph::degree(int v) const { return std::popcount(adj_[v]); }

long long Graph::edge_count() const {
  long long twice = 0;
  for (int v = 0; v < n(); ++v) twice += degree(v);
  return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n(); ++u) {
    for (int v = u + 1; v < n(); ++v) {
      if (adjacent(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::induced(std::uint64_t vertex_mask) const {
  std::vector<int> keep;
  for (int v = 0; v < n(); ++v) {
    if ((vertex_mask >> v) & 1ULL) keep.push_back(v);
  }
  std::vector<std::string> labels;
  labels.reserve(keep.size());
  for (int v : keep) labels.push_back(labels_[v]);
  std::vector<std::pair<int, int>> edges;
  for (std::size_t a = 0; a < keep.size(); ++a) {
    for (std::size_t b = a + 1; b < keep.size(); ++b) {
      if (adjacent(keep[a], keep[b])) {
        edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
      }
    }
  }
  return Graph(std::move(labels), edges);
}

Graph Graph::removed(int v) const {
  const std::uint64_t all = (n() == 64) ? ~0ULL : ((1ULL << n()) - 1);
  return induced(all & ~(1ULL << v));
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

Graph parse_edge_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw parse_error(std::string("edge-json: ") + e.what());
  }
  if (!doc.is_object()) throw parse_error("edge-json: top level must be an object");
  for (const auto& item : doc.items()) {
    if (item.key() != "vertices" && item.key() != "edges") {
      throw parse_error("edge-json: unknown key \"" + item.key() + "\"");
    }
  }
  if (!doc.contains("vertices") || !doc["vertices"].is_array()) {
    throw parse_error("edge-json: missing \"vertices\" array");
  }
  std::vector<std::string> labels;
  for (const auto& v : doc["vertices"]) {
    if (!v.is_string()) throw parse_error("edge-json: vertex labels must be strings");
    labels.push_back(v.get<std::string>());
  }
  std::vector<std::pair<int, int>> edges;
  std::set<std::pair<int, int>> seen;
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) throw parse_error("edge-json: \"edges\" must be an array");
    Graph lookup(labels, {});  // validates label uniqueness, gives index_of
    for (const auto& e : doc["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
        throw parse_error("edge-json: each edge must be a pair of vertex labels");
      }
      const std::string a = e[0].get<std::string>();
      const std::string b = e[1].get<std::string>();
      int u = lookup.index_of(a);
      int v = lookup.index_of(b);
      if (u < 0) throw parse_error("edge-json: unknown vertex \"" + a + "\"");
      if (v < 0) throw parse_error("edge-json: unknown vertex \"" + b + "\"");
      if (u == v) throw parse_error("edge-json: self-loop at \"" + a + "\"");
      auto key = std::minmax(u, v);
      if (!seen.insert({key.first, key.second}).second) {
        throw parse_error("edge-json: duplicate edge [\"" + a + "\",\"" + b + "\"]");
      }
      edges.emplace_back(u, v);
    }
  }
  return Graph(std::move(labels), edges);
}

Graph parse_adjacency_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  if (!next_line()) throw parse_error("adjacency-text: empty input");
  int n = 0;
  {
    std::istringstream ls(line);
    if (!(ls >> n) || n < 0) {
      throw parse_error("adjacency-text: line 1: expected vertex count");
    }
    std::string extra;
    if (ls >> extra) throw parse_error("adjacency-text: line 1: trailing tokens");
  }
  std::vector<std::vector<int>> rows;
  for (int i = 0; i < n; ++i) {
    if (!next_line()) {
      throw parse_error("adjacency-text: expected " + std::to_string(n) +
                        " matrix rows, got " + std::to_string(i));
    }
    std::istringstream ls(line);
    std::vector<int> row;
    int x;
    while (ls >> x) {
      if (x != 0 && x != 1) {
        throw parse_error("adjacency-text: line " + std::to_string(lineno) +
                          ": entries must be 0 or 1");
      }
      row.push_back(x);
    }
    if (static_cast<int>(row.size()) != n) {
      throw parse_error("adjacency-text: line " + std::to_string(lineno) +
                        ": expected " + std::to_string(n) + " entries");
    }
    rows.push_back(std::move(row));
  }
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i + 1));
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    if (rows[i][i] != 0) {
      throw parse_error("adjacency-text: self-loop at vertex " + std::to_string(i + 1));
    }
    for (int j = i + 1; j < n; ++j) {
      if (rows[i][j] != rows[j][i]) {
        throw parse_error("adjacency-text: matrix not symmetric at (" +
                          std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
      }
      if (rows[i][j]) edges.emplace_back(i, j);
    }
  }
  return Graph(std::move(labels), edges);
}

struct DotToken {
  enum Kind { ident, edge_op, semi, lbrace, rbrace, end } kind;
  std::string text;
  int line, col;
};

class DotLexer {
 public:
  explicit DotLexer(const std::string& s) : s_(s) {}

  DotToken next() {
    skip_ws();
    if (pos_ >= s_.size()) return {DotToken::end, "", line_, col_};
    int line = line_, col = col_;
    char c = s_[pos_];
    if (c == '{') { advance(); return {DotToken::lbrace, "{", line, col}; }
    if (c == '}') { advance(); return {DotToken::rbrace, "}", line, col}; }
    if (c == ';') { advance(); return {DotToken::semi, ";", line, col}; }
    if (c == '-' && pos_ + 1 < s_.size() && s_[pos_ + 1] == '-') {
      advance(); advance();
      return {DotToken::edge_op, "--", line, col};
    }
    if (c == '"') {
      advance();
      std::string text;
      while (pos_ < s_.size() && s_[pos_] != '"') {
        text.push_back(s_[pos_]);
        advance();
      }
      if (pos_ >= s_.size()) {
        throw parse_error("dot: unterminated string at line " + std::to_string(line));
      }
      advance();
      return {DotToken::ident, text, line, col};
    }
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.') {
      std::string text;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
              s_[pos_] == '_' || s_[pos_] == '.')) {
        text.push_back(s_[pos_]);
        advance();
      }
      return {DotToken::ident, text, line, col};
    }
    throw parse_error("dot: unexpected character '" + std::string(1, c) +
                      "' at line " + std::to_string(line) + ", column " +
                      std::to_string(col));
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() &&
           std::isspace(static_cast<unsigned char>(s_[pos_]))) {
      advance();
    }
  }
  void advance() {
    if (s_[pos_] == '\n') { ++line_; col_ = 1; } else { ++col_; }
    ++pos_;
  }
  const std::string& s_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
};

// Subset of DOT: `graph name? { a -- b -- c; d; ... }`, undirected,
// no attributes.
Graph parse_dot_subset(const std::string& text) {
  DotLexer lex(text);
  DotToken t = lex.next();
  if (t.kind != DotToken::ident || t.text != "graph") {
    throw parse_error("dot: expected 'graph' at line " + std::to_string(t.line));
  }
  t = lex.next();
  if (t.kind == DotToken::ident) t = lex.next();  // optional graph name
  if (t.kind != DotToken::lbrace) {
    throw parse_error("dot: expected '{' at line " + std::to_string(t.line));
  }

  std::vector<std::string> labels;
  std::map<std::string, int> index;
  auto vertex = [&](const std::string& name) {
    auto it = index.find(name);
    if (it != index.end()) return it->second;
    int id = static_cast<int>(labels.size());
    labels.push_back(name);
    index.emplace(name, id);
    return id;
  };

  std::vector<std::pair<int, int>> edges;
  std::set<std::pair<int, int>> seen;
  t = lex.next();
  while (t.kind != DotToken::rbrace) {
    if (t.kind == DotToken::end) throw parse_error("dot: missing '}'");
    if (t.kind == DotToken::semi) { t = lex.next(); continue; }
    if (t.kind != DotToken::ident) {
      throw parse_error("dot: expected vertex name at line " + std::to_string(t.line));
    }
    int prev = vertex(t.text);
    t = lex.next();
    while (t.kind == DotToken::edge_op) {
      t = lex.next();
      if (t.kind != DotToken::ident) {
        throw parse_error("dot: expected vertex name after '--' at line " +
                          std::to_string(t.line));
      }
      int cur = vertex(t.text);
      if (cur == prev) throw parse_error("dot: self-loop at \"" + t.text + "\"");
      auto key = std::minmax(prev, cur);
      if (seen.insert({key.first, key.second}).second) {
        edges.emplace_back(prev, cur);
      }
      prev = cur;
      t = lex.next();
    }
  }
  return Graph(std::move(labels), edges);
}

GraphFormat detect_format(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '{') return GraphFormat::edge_json;
    if (std::isdigit(static_cast<unsigned char>(c))) return GraphFormat::adjacency_text;
    if (c == 'g') return GraphFormat::dot_subset;
    break;
  }
  throw parse_error("cannot detect input format (expected edge-json, "
                    "adjacency-text, or dot-subset)");
}

}  // namespace

Graph parse_graph(const std::string& text, GraphFormat format) {
  if (format == GraphFormat::auto_detect) format = detect_format(text);
  switch (format) {
    case GraphFormat::edge_json: return parse_edge_json(text);
    case GraphFormat::adjacency_text: return parse_adjacency_text(text);
    case GraphFormat::dot_subset: return parse_dot_subset(text);
    default: throw parse_error("unknown graph format");
  }
}

// ---------------------------------------------------------------------------
// Structure

Graph complement(const Graph& g) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < g.n(); ++u) {
    for (int v = u + 1; v < g.n(); ++v) {
      if (!g.adjacent(u, v)) edges.emplace_back(u, v);
    }
  }
  return Graph(g.labels(), edges);
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  const int n = g.n();
  std::uint64_t unvisited = (n == 64) ? ~0ULL : ((1ULL << n) - 1);
  std::vector<std::vector<int>> comps;
  while (unvisited) {
    int start = std::countr_zero(unvisited);
    std::uint64_t comp = 1ULL << start;
    std::uint64_t frontier = comp;
    while (frontier) {
      std::uint64_t next = 0;
      std::uint64_t f = frontier;
      while (f) {
        int v = std::countr_zero(f);
        f &= f - 1;
        next |= g.neighbor_mask(v);
      }
      next &= ~comp;
      comp |= next;
      frontier = next;
    }
    std::vector<int> members;
    std::uint64_t c = comp;
    while (c) {
      members.push_back(std::countr_zero(c));
      c &= c - 1;
    }
    comps.push_back(std::move(members));
    unvisited &= ~comp;
  }
  return comps;
}

bool is_connected(const Graph& g) {
  if (g.n() <= 1) return true;
  return connected_components(g).size() == 1;
}

std::vector<int> dominated_vertices(const Graph& g) {
  if (g.n() < 2) {
    throw std::invalid_argument("dominated_vertices: graph too small (need >= 2 vertices)");
  }
  std::vector<int> out;
  for (int v = 0; v < g.n(); ++v) {
    if (g.degree(v) == g.n() - 1) out.push_back(v);
  }
  return out;
}

JoinDecomposition join_decompose(const Graph& g) {
  if (g.n() < 2) {
    throw std::invalid_argument("join_decompose: need at least 2 vertices");
  }
  auto dom = dominated_vertices(g);
  if (!dom.empty()) {
    std::vector<std::string> labels;
    for (int v : dom) labels.push_back(g.label(v));
    std::string msg = "hypothesis violated: vertices adjacent to all others:";
    for (const auto& l : labels) msg += " \"" + l + "\"";
    throw hypothesis_error(msg, labels);
  }
  JoinDecomposition d;
  for (const auto& comp : connected_components(complement(g))) {
    std::uint64_t mask = 0;
    for (int v : comp) mask |= 1ULL << v;
    d.factors.push_back(g.induced(mask));
    d.factor_vertex_sets.push_back(comp);
  }
  return d;
}

RemovalStep select_removal(const Graph& g) {
  if (g.n() < 3) {
    throw std::invalid_argument("select_removal: need at least 3 vertices");
  }
  Graph cg = complement(g);
  if (!is_connected(cg)) {
    throw hypothesis_error("select_removal: complement of the graph is disconnected");
  }
  // DFS spanning tree of the complement rooted at 0, neighbors in
  // increasing index order; tree leaves are non-cut vertices.
  const int n = g.n();
  std::vector<int> tree_degree(n, 0);
  std::vector<char> visited(n, 0);
  std::vector<int> stack = {0};
  visited[0] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    int next = -1;
    std::uint64_t nb = cg.neighbor_mask(v);
    while (nb) {
      int w = std::countr_zero(nb);
      nb &= nb - 1;
      if (!visited[w]) { next = w; break; }
    }
    if (next < 0) {
      stack.pop_back();
      continue;
    }
    visited[next] = 1;
    ++tree_degree[v];
    ++tree_degree[next];
    stack.push_back(next);
  }
  int removed = -1;
  for (int v = 0; v < n; ++v) {
    if (tree_degree[v] == 1) { removed = v; break; }
  }

  RemovalStep step;
  step.removed_vertex = removed;
  step.gamma_prime = g.removed(removed);
  std::uint64_t nbr = g.neighbor_mask(removed);
  step.gamma_k = g.induced(nbr);
  step.k = std::popcount(nbr);
  return step;
}

RemovalStep removal_step_for(const Graph& g) {
  if (g.n() >= 3) return select_removal(g);
  if (g.n() != 2) {
    throw std::invalid_argument("removal_step_for: need at least 2 vertices");
  }
  if (g.adjacent(0, 1)) {
    throw hypothesis_error("removal_step_for: complement of the graph is disconnected");
  }
  RemovalStep step;
  step.removed_vertex = 1;
  step.gamma_prime = g.removed(1);
  step.gamma_k = g.induced(0);
  step.k = 0;
  return step;
}

}  // namespace artc
