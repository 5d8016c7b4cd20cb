#pragma once

#include <vector>

#include "artc/graph.hpp"

namespace artc {

/// Word over vertex indices, kept as the lexicographically least
/// linearization of its commutation class (letters commute iff the vertices
/// are adjacent). Two words are equal as operators iff their canonical
/// letter sequences coincide.
struct TraceWord {
  std::vector<int> letters;
  bool operator==(const TraceWord&) const = default;
  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
};

// (length, lex) order used everywhere words are enumerated.
bool length_lex_less(const TraceWord& a, const TraceWord& b);

struct StarFactor {
  int vertex = 0;
  bool star = false;
  bool operator==(const StarFactor&) const = default;
};
using StarWord = std::vector<StarFactor>;

/// Either Zero or the pair (w1, w2) standing for the operator w1 * w2^*.
struct ReducedForm {
  bool zero = false;
  TraceWord w1, w2;
  bool operator==(const ReducedForm&) const = default;
  StarWord to_star_word() const;
};

TraceWord normal_form(std::vector<int> letters, const Graph& g);

// True iff appending `a` to the canonical word `w` keeps it canonical:
// no letter in the maximal suffix commuting with `a` may exceed `a`.
bool can_append_canonical(const std::vector<int>& w, int a, const Graph& g);

// Left-to-right elimination: a starred factor prepends to w2; a plain factor
// scans w2 from the front, cancelling against an equal letter, dying against
// a non-adjacent one, or passing through and landing in w1.
ReducedForm reduce(const StarWord& w, const Graph& g);

// Membership in the set of words over the vertices other than v none of
// whose maximal letters is adjacent to v (no tail can cross the distinguished
// isometry).
bool is_omega_word(const TraceWord& w, const Graph& g, int v);

// All such canonical words of length <= max_len, ordered by (length, lex);
// the empty word comes first. Requires complement(g) connected.
std::vector<TraceWord> omega_enumerate(const Graph& g, int v, int max_len);

enum class DeltaOutcome { identity, zero, violation };

struct DeltaResult {
  DeltaOutcome outcome = DeltaOutcome::violation;
  ReducedForm witness;  // populated on violation
};

// Reduces V^* q^* p V over the full graph; identity is expected exactly on
// the diagonal p == q and zero off it.
DeltaResult delta_check(const TraceWord& p, const TraceWord& q,
                        const Graph& g_full, int v);

}  // namespace artc
