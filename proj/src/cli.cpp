#include "artc/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "artc/classify.hpp"
#include "artc/fock.hpp"

namespace artc {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  std::ifstream f(path);
  if (!f) throw parse_error("cannot read input file \"" + path + "\"");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

GraphFormat format_from_name(const std::string& name) {
  if (name == "auto") return GraphFormat::auto_detect;
  if (name == "edge-json") return GraphFormat::edge_json;
  if (name == "adjacency-text") return GraphFormat::adjacency_text;
  if (name == "dot-subset") return GraphFormat::dot_subset;
  throw parse_error("unknown format \"" + name + "\"");
}

std::size_t basis_cap_from_env() {
  const char* s = std::getenv("ARTC_MAX_BASIS");
  if (!s || !*s) return default_basis_cap;
  char* end = nullptr;
  unsigned long long v = std::strtoull(s, &end, 10);
  if (end == s || *end != '\0' || v == 0) {
    throw parse_error("ARTC_MAX_BASIS must be a positive integer");
  }
  return static_cast<std::size_t>(v);
}

ordered_json group_json(const FGAbelianGroup& g) {
  ordered_json j;
  j["free_rank"] = g.free_rank;
  j["torsion"] = g.torsion;
  j["marked_class"] = g.marked_class;
  auto order = g.marked_order();
  if (order) {
    j["marked_order"] = *order;
  } else {
    j["marked_order"] = nullptr;
  }
  j["display"] = g.display();
  return j;
}

ordered_json kresult_json(const KResult& k) {
  ordered_json j;
  j["k0"] = group_json(k.k0);
  j["k1"] = group_json(k.k1);
  j["chi"] = k.chi;
  j["source"] = k.source == KSource::closed_form ? "closed-form" : "pv-truncated";
  return j;
}

ordered_json toeplitz_json(const ToeplitzKResult& t) {
  ordered_json j;
  j["k0"] = group_json(t.k0);
  j["k1"] = group_json(t.k1);
  j["extension_multiplier"] = t.extension_multiplier;
  return j;
}

ordered_json classification_json(const ClassificationReport& r) {
  ordered_json j;
  j["input"] = {{"vertices", r.input_vertices}, {"edges", r.input_edges}};
  j["hypothesis"] = {{"satisfied", true},
                     {"dominated_vertices", ordered_json::array()}};
  j["factors"] = ordered_json::array();
  for (const FactorReport& f : r.factors) {
    ordered_json fj;
    fj["vertices"] = f.vertices;
    fj["chi"] = f.chi;
    fj["clique_counts"] = f.clique_profile.counts;
    fj["cuntz_symbol"] = f.symbol;
    fj["k0"] = group_json(f.quotient_k.k0);
    fj["k1"] = group_json(f.quotient_k.k1);
    fj["toeplitz"] = toeplitz_json(f.toeplitz);
    j["factors"].push_back(std::move(fj));
  }
  j["tensor_expression"] = r.tensor_expression;
  return j;
}

void print_group_inline(std::ostream& out, const char* name,
                        const FGAbelianGroup& g) {
  out << name << " = " << g.display();
}

void print_classification(std::ostream& out, const ClassificationReport& r) {
  out << "graph: " << r.input_vertices.size() << " vertices, "
      << r.input_edges << " edges\n";
  out << "factors (" << r.factors.size() << "):\n";
  for (const FactorReport& f : r.factors) {
    out << "  {";
    for (std::size_t i = 0; i < f.vertices.size(); ++i) {
      out << (i ? "," : "") << f.vertices[i];
    }
    out << "}: chi = " << f.chi << ", C*_Q = " << f.symbol << ", ";
    print_group_inline(out, "K0", f.quotient_k.k0);
    out << ", ";
    print_group_inline(out, "K1", f.quotient_k.k1);
    out << "; Toeplitz ";
    print_group_inline(out, "K0", f.toeplitz.k0);
    out << ", ";
    print_group_inline(out, "K1", f.toeplitz.k1);
    out << " (multiplier " << f.toeplitz.extension_multiplier << ")\n";
    if (f.chi == 0) {
      out << "    note: O_1 is the unital Kirchberg algebra with K0 = Z "
             "generated by the unit and K1 = Z\n";
    }
  }
  out << "C*_Q(G) = " << r.tensor_expression << "\n";
}

// ---------------------------------------------------------------------------
// Subcommand handlers

struct CommonOpts {
  std::string input = "-";
  std::string format = "auto";
  bool json = false;
};

ordered_json run_verification(const Graph& g, int fock_len, int omega_len,
                              int n_words, std::size_t cap, bool& all_pass);
void print_verification(std::ostream& out, const ordered_json& report);

int cmd_classify(const CommonOpts& c, int oracle_window, int clique_bound,
                 bool with_verification, int fock_len, std::size_t cap,
                 std::istream& in, std::ostream& out, std::ostream& err) {
  Graph g = parse_graph(read_input(c.input, in), format_from_name(c.format));
  ClassifyOptions opts;
  opts.clique_vertex_bound = clique_bound;
  opts.oracle_window = oracle_window;
  ClassificationReport r = classify(g, opts);
  bool verification_pass = true;
  ordered_json verification;
  if (with_verification) {
    verification = run_verification(g, fock_len, /*omega_len=*/3,
                                    /*n_words=*/200, cap, verification_pass);
  }
  if (c.json) {
    ordered_json j = classification_json(r);
    if (with_verification) j["verification"] = verification;
    out << j.dump(2) << "\n";
  } else {
    print_classification(out, r);
    if (with_verification) print_verification(out, verification);
  }
  if (!verification_pass) {
    err << "classify: verification checks failed\n";
    return static_cast<int>(ExitCode::verification);
  }
  return 0;
}

int cmd_chi(const CommonOpts& c, const std::string& method, int clique_bound,
            std::istream& in, std::ostream& out, std::ostream& err) {
  Graph g = parse_graph(read_input(c.input, in), format_from_name(c.format));
  if (method != "direct" && method != "recursive" && method != "both") {
    throw parse_error("chi: --method must be direct, recursive, or both");
  }
  ordered_json j;
  long long direct = 0, recursive = 0;
  if (method != "recursive") {
    direct = chi_direct(g, clique_bound).chi;
    j["chi_direct"] = direct;
  }
  if (method != "direct") {
    recursive = chi_recursive(g, clique_bound).chi;
    j["chi_recursive"] = recursive;
  }
  if (method == "both") {
    j["agree"] = direct == recursive;
  }
  if (c.json) {
    out << j.dump(2) << "\n";
  } else {
    if (method != "recursive") out << "chi (direct) = " << direct << "\n";
    if (method != "direct") out << "chi (recursive) = " << recursive << "\n";
    if (method == "both") {
      out << (direct == recursive ? "methods agree\n" : "METHOD DISAGREEMENT\n");
    }
  }
  if (method == "both" && direct != recursive) {
    err << "chi: direct and recursive methods disagree (" << direct << " vs "
        << recursive << ")\n";
    return static_cast<int>(ExitCode::verification);
  }
  return 0;
}

int cmd_kgroups(const CommonOpts& c, bool have_chi, long long chi_value,
                int oracle_window, bool run_oracle, std::istream& in,
                std::ostream& out, std::ostream& err) {
  KResult closed;
  long long x, y;
  if (have_chi) {
    closed = kgroups_closed_form(chi_value);
    x = chi_value;
    y = 0;
  } else {
    Graph g = parse_graph(read_input(c.input, in), format_from_name(c.format));
    closed = kgroups_for_graph(g, oracle_window);
    x = closed.chi;
    y = 0;
    if (g.n() >= 3) {
      RemovalStep step = select_removal(g);
      x = chi_direct(step.gamma_prime).chi;
      y = chi_direct(step.gamma_k).chi;
    }
  }
  ToeplitzKResult toeplitz = kgroups_toeplitz(closed.chi);

  ordered_json j = kresult_json(closed);
  j["toeplitz"] = toeplitz_json(toeplitz);
  bool agree = true;
  if (run_oracle) {
    KResult oracle = pv_truncated(x, y, oracle_window);
    agree = k_results_agree(closed, oracle);
    ordered_json oj = kresult_json(oracle);
    oj["x"] = x;
    oj["y"] = y;
    oj["window"] = oracle_window;
    oj["agrees_with_closed_form"] = agree;
    j["oracle"] = std::move(oj);
  }
  if (c.json) {
    out << j.dump(2) << "\n";
  } else {
    out << "chi = " << closed.chi << "\n";
    print_group_inline(out, "K0", closed.k0);
    out << " (order of [1]_0: ";
    auto ord = closed.k0.marked_order();
    if (ord) out << *ord; else out << "infinite";
    out << ")\n";
    print_group_inline(out, "K1", closed.k1);
    out << "\nToeplitz K0 = " << toeplitz.k0.display()
        << ", K1 = " << toeplitz.k1.display()
        << " (extension multiplier " << toeplitz.extension_multiplier << ")\n";
    if (run_oracle) {
      out << "oracle (window " << oracle_window << ", x = " << x << ", y = "
          << y << "): " << (agree ? "agrees" : "DISAGREES") << "\n";
    }
  }
  if (!agree) {
    err << "kgroups: truncated oracle disagrees with the closed form\n";
    return static_cast<int>(ExitCode::verification);
  }
  return 0;
}

int cmd_decompose(const CommonOpts& c, std::istream& in, std::ostream& out) {
  Graph g = parse_graph(read_input(c.input, in), format_from_name(c.format));
  JoinDecomposition d = join_decompose(g);
  if (c.json) {
    ordered_json j;
    j["factors"] = ordered_json::array();
    for (std::size_t i = 0; i < d.factors.size(); ++i) {
      ordered_json fj;
      fj["vertices"] = d.factors[i].labels();
      fj["edges"] = d.factors[i].edge_count();
      j["factors"].push_back(std::move(fj));
    }
    out << j.dump(2) << "\n";
  } else {
    out << d.factors.size() << " factor(s)\n";
    for (const Graph& f : d.factors) {
      out << "  {";
      for (int i = 0; i < f.n(); ++i) out << (i ? "," : "") << f.label(i);
      out << "}: " << f.edge_count() << " edge(s)\n";
    }
  }
  return 0;
}

StarWord parse_star_word(const std::string& text, const Graph& g) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw parse_error(std::string("word: ") + e.what());
  }
  if (!doc.is_array()) throw parse_error("word: expected a JSON array");
  StarWord w;
  for (const auto& item : doc) {
    if (!item.is_object() || !item.contains("v") || !item["v"].is_string()) {
      throw parse_error("word: each factor must be {\"v\": label, \"star\": bool}");
    }
    int idx = g.index_of(item["v"].get<std::string>());
    if (idx < 0) {
      throw parse_error("word: unknown vertex \"" +
                        item["v"].get<std::string>() + "\"");
    }
    bool star = false;
    if (item.contains("star")) {
      if (!item["star"].is_boolean()) throw parse_error("word: \"star\" must be a bool");
      star = item["star"].get<bool>();
    }
    w.push_back({idx, star});
  }
  return w;
}

int cmd_reduce(const std::string& word_text, const std::string& graph_path,
               const std::string& format, bool json, std::istream& in,
               std::ostream& out) {
  Graph g = parse_graph(read_input(graph_path, in), format_from_name(format));
  StarWord w = parse_star_word(word_text, g);
  ReducedForm r = reduce(w, g);
  auto labels_of = [&](const TraceWord& t) {
    std::vector<std::string> ls;
    for (int v : t.letters) ls.push_back(g.label(v));
    return ls;
  };
  if (json) {
    ordered_json j;
    j["zero"] = r.zero;
    if (!r.zero) {
      j["w1"] = labels_of(r.w1);
      j["w2"] = labels_of(r.w2);
    }
    out << j.dump(2) << "\n";
  } else if (r.zero) {
    out << "ZERO\n";
  } else {
    auto print_word = [&](const char* name, const TraceWord& t) {
      out << name << " =";
      if (t.empty()) out << " (empty)";
      for (int v : t.letters) out << " " << g.label(v);
      out << "\n";
    };
    print_word("w1", r.w1);
    print_word("w2", r.w2);
  }
  return 0;
}

int cmd_omega(const std::string& graph_path, const std::string& format,
              const std::string& vertex, int max_len, bool json,
              std::istream& in, std::ostream& out) {
  Graph g = parse_graph(read_input(graph_path, in), format_from_name(format));
  int v = g.index_of(vertex);
  if (v < 0) throw parse_error("omega: unknown vertex \"" + vertex + "\"");
  auto words = omega_enumerate(g, v, max_len);
  if (json) {
    ordered_json j;
    j["words"] = ordered_json::array();
    for (const TraceWord& w : words) {
      std::vector<std::string> ls;
      for (int s : w.letters) ls.push_back(g.label(s));
      j["words"].push_back(ls);
    }
    out << j.dump(2) << "\n";
  } else {
    for (const TraceWord& w : words) {
      if (w.empty()) {
        out << "I\n";
        continue;
      }
      for (std::size_t i = 0; i < w.size(); ++i) {
        out << (i ? " " : "") << g.label(w.letters[i]);
      }
      out << "\n";
    }
  }
  return 0;
}

// Runs the operator-identity suite and returns the per-check report.
ordered_json run_verification(const Graph& g, int fock_len, int omega_len,
                              int n_words, std::size_t cap, bool& all_pass) {
  ordered_json checks = ordered_json::array();
  all_pass = true;
  auto add = [&](const std::string& name, const std::string& subspace,
                 long long residual) {
    bool pass = residual == 0;
    all_pass = all_pass && pass;
    checks.push_back({{"name", name},
                      {"subspace", subspace},
                      {"residual", residual},
                      {"pass", pass}});
  };

  RelationReport rr = check_relations(g, fock_len, cap);
  for (const RelationCheck& ch : rr.checks) {
    add(ch.name, ch.subspace, ch.residual);
  }

  long long vr = vacuum_rank(g, fock_len, cap);
  add("vacuum projection has rank 1",
      "full basis, length <= " + std::to_string(fock_len), vr - 1);

  // Targets with connected complement carry the removal-step identities.
  std::vector<Graph> targets;
  std::string skipped_note;
  if (g.n() >= 2 && is_connected(complement(g))) {
    targets.push_back(g);
  } else if (g.n() >= 2 && dominated_vertices(g).empty()) {
    for (const Graph& f : join_decompose(g).factors) targets.push_back(f);
  } else {
    skipped_note = "removal-step checks skipped (dominated vertices present)";
  }

  for (const Graph& t : targets) {
    std::string tag = "{";
    for (int i = 0; i < t.n(); ++i) tag += (i ? "," : "") + t.label(i);
    tag += "}";
    RemovalStep step = removal_step_for(t);
    add("defect-product identity on " + tag,
        "words of length <= " + std::to_string(fock_len - 2),
        eq6_check(t, step, fock_len, cap));

    auto omegas = omega_enumerate(t, step.removed_vertex, omega_len);
    long long violations = 0;
    for (std::size_t a = 0; a < omegas.size(); ++a) {
      for (std::size_t b = 0; b < omegas.size(); ++b) {
        DeltaResult dr =
            delta_check(omegas[a], omegas[b], t, step.removed_vertex);
        bool ok = (a == b) ? dr.outcome == DeltaOutcome::identity
                           : dr.outcome == DeltaOutcome::zero;
        if (!ok) ++violations;
      }
    }
    add("delta identity over " + std::to_string(omegas.size()) +
            " omega words on " + tag,
        "omega words of length <= " + std::to_string(omega_len), violations);
  }

  // Random star words reduced and confirmed against the representation.
  std::mt19937_64 rng(0xA21);
  std::uniform_int_distribution<int> letter(0, g.n() - 1);
  std::uniform_int_distribution<int> len_dist(1, 6);
  std::bernoulli_distribution star(0.5);
  long long failures = 0;
  if (g.n() >= 1) {
    for (int i = 0; i < n_words; ++i) {
      StarWord w;
      int len = len_dist(rng);
      for (int l = 0; l < len; ++l) w.push_back({letter(rng), star(rng)});
      ReducedForm r = reduce(w, g);
      if (!word_oracle(w, r, g, static_cast<int>(w.size()) + 2)) ++failures;
    }
  }
  add("word reduction matches the representation (" +
          std::to_string(n_words) + " samples)",
      "per-word interior subspace", failures);

  ordered_json j;
  j["checks"] = std::move(checks);
  if (!skipped_note.empty()) j["note"] = skipped_note;
  j["pass"] = all_pass;
  return j;
}

void print_verification(std::ostream& out, const ordered_json& report) {
  for (const auto& ch : report["checks"]) {
    out << (ch["pass"].get<bool>() ? "PASS" : "FAIL") << "  "
        << ch["name"].get<std::string>() << " ["
        << ch["subspace"].get<std::string>() << "]";
    if (!ch["pass"].get<bool>()) {
      out << " residual = " << ch["residual"].get<long long>();
    }
    out << "\n";
  }
  if (report.contains("note")) {
    out << "note: " << report["note"].get<std::string>() << "\n";
  }
  out << (report["pass"].get<bool>() ? "all checks passed\n"
                                     : "SOME CHECKS FAILED\n");
}

int cmd_verify(const CommonOpts& c, int fock_len, int omega_len, int n_words,
               std::size_t cap, std::istream& in, std::ostream& out,
               std::ostream& err) {
  Graph g = parse_graph(read_input(c.input, in), format_from_name(c.format));
  bool all_pass = false;
  ordered_json report =
      run_verification(g, fock_len, omega_len, n_words, cap, all_pass);
  if (c.json) {
    out << report.dump(2) << "\n";
  } else {
    print_verification(out, report);
  }
  if (!all_pass) {
    err << "verify: some identity checks failed\n";
    return static_cast<int>(ExitCode::verification);
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err) {
  CLI::App app{
      "artc - classifies the boundary-quotient Toeplitz C*-algebra of a "
      "right-angled Artin group from its defining graph.\n"
      "Input formats: edge-json (canonical), adjacency-text, dot-subset.\n"
      "Exit codes: 0 ok, 1 parse error, 2 hypothesis violation, 3 resource "
      "cap, 4 oracle instability, 5 verification failure."};
  app.require_subcommand(1);

  CommonOpts classify_opts, chi_opts, kg_opts, dec_opts, verify_opts;
  int oracle_window = 6;
  int clique_bound = default_clique_vertex_bound;
  std::string chi_method = "direct";
  long long kg_chi = 0;
  bool kg_run_oracle = false;
  int kg_window = 6;
  std::string word_text, reduce_graph = "-", reduce_format = "auto";
  bool reduce_json = false;
  std::string omega_graph = "-", omega_format = "auto", omega_vertex;
  int omega_max_len = 4;
  bool omega_json = false;
  int verify_fock_len = 6, verify_omega_len = 3, verify_words = 200;

  auto add_common = [](CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("input", o.input, "graph file, or - for stdin");
    cmd->add_option("--format", o.format,
                    "auto|edge-json|adjacency-text|dot-subset");
    cmd->add_flag("--json", o.json, "machine-readable JSON output");
  };

  bool classify_verify = false;
  int classify_fock_len = 6;

  CLI::App* c_classify = app.add_subcommand(
      "classify",
      "full pipeline: hypothesis gate, join factors, chi, K-groups, Cuntz "
      "symbols. (Finite inputs only; an infinite graph with connected "
      "complement would carry the symbol O_inf.)");
  add_common(c_classify, classify_opts);
  c_classify->add_option("--oracle", oracle_window,
                         "window for the internal K-theory oracle");
  c_classify->add_option("--max-clique-vertices", clique_bound,
                         "vertex bound for clique enumeration");
  c_classify->add_flag("--verify", classify_verify,
                       "append the operator-identity verification summary");
  c_classify->add_option("--fock-length", classify_fock_len,
                         "basis length bound used with --verify");

  CLI::App* c_chi = app.add_subcommand("chi", "graph Euler characteristic");
  add_common(c_chi, chi_opts);
  c_chi->add_option("--method", chi_method, "direct|recursive|both");
  c_chi->add_option("--max-clique-vertices", clique_bound);

  CLI::App* c_kg = app.add_subcommand("kgroups",
                                      "K-groups of the boundary quotient");
  add_common(c_kg, kg_opts);
  CLI::Option* chi_opt =
      c_kg->add_option("--chi", kg_chi, "use this chi instead of a graph");
  c_kg->add_option("--oracle", kg_window,
                   "also run the truncated shift-module oracle at this window")
      ->expected(1);
  c_kg->callback([&] {
    kg_run_oracle = c_kg->count("--oracle") > 0;
  });

  CLI::App* c_dec = app.add_subcommand("decompose", "join decomposition");
  add_common(c_dec, dec_opts);

  CLI::App* c_red = app.add_subcommand(
      "reduce", "reduce a word in the isometries and their adjoints to "
                "w1 w2* form (or ZERO)");
  c_red->add_option("word", word_text,
                    "JSON array of {\"v\": label, \"star\": bool}")
      ->required();
  c_red->add_option("--graph", reduce_graph, "graph file")->required();
  c_red->add_option("--format", reduce_format, "graph format");
  c_red->add_flag("--json", reduce_json);

  CLI::App* c_om = app.add_subcommand(
      "omega", "enumerate words none of whose maximal letters commute past "
               "the distinguished vertex");
  c_om->add_option("--graph", omega_graph, "graph file")->required();
  c_om->add_option("-v,--vertex", omega_vertex, "distinguished vertex label")
      ->required();
  c_om->add_option("--max-len", omega_max_len, "length bound");
  c_om->add_flag("--json", omega_json);

  CLI::App* c_ver = app.add_subcommand(
      "verify", "run the operator-identity suite on the truncated "
                "representation");
  add_common(c_ver, verify_opts);
  c_ver->add_option("--fock-length,-L", verify_fock_len, "basis length bound");
  c_ver->add_option("--omega-len", verify_omega_len,
                    "length bound for the delta sweep");
  c_ver->add_option("--words", verify_words, "random word-reduction samples");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::parse);
  }

  try {
    std::size_t cap = basis_cap_from_env();
    if (c_classify->parsed()) {
      return cmd_classify(classify_opts, oracle_window, clique_bound,
                          classify_verify, classify_fock_len, cap, in, out,
                          err);
    }
    if (c_chi->parsed()) {
      return cmd_chi(chi_opts, chi_method, clique_bound, in, out, err);
    }
    if (c_kg->parsed()) {
      return cmd_kgroups(kg_opts, chi_opt->count() > 0, kg_chi, kg_window,
                         kg_run_oracle, in, out, err);
    }
    if (c_dec->parsed()) return cmd_decompose(dec_opts, in, out);
    if (c_red->parsed()) {
      return cmd_reduce(word_text, reduce_graph, reduce_format, reduce_json,
                        in, out);
    }
    if (c_om->parsed()) {
      return cmd_omega(omega_graph, omega_format, omega_vertex, omega_max_len,
                       omega_json, in, out);
    }
    if (c_ver->parsed()) {
      return cmd_verify(verify_opts, verify_fock_len, verify_omega_len,
                        verify_words, cap, in, out, err);
    }
    err << "error: no subcommand\n";
    return static_cast<int>(ExitCode::parse);
  } catch (const parse_error& e) {
    err << "error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::parse);
  } catch (const hypothesis_error& e) {
    err << "error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::hypothesis);
  } catch (const resource_error& e) {
    err << "error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::resource);
  } catch (const oracle_instability_error& e) {
    err << "error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::oracle);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::parse);
  }
}

}  // namespace artc
