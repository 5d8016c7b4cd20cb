#include "artc/trace_words.hpp"

#include <algorithm>
#include <stdexcept>

namespace artc {

bool length_lex_less(const TraceWord& a, const TraceWord& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.letters < b.letters;
}

StarWord ReducedForm::to_star_word() const {
  if (zero) {
    throw std::logic_error("to_star_word: the zero form has no word");
  }
  StarWord w;
  for (int v : w1.letters) w.push_back({v, false});
  for (auto it = w2.letters.rbegin(); it != w2.letters.rend(); ++it) {
    w.push_back({*it, true});
  }
  return w;
}

namespace {

void check_letter(int v, const Graph& g) {
  if (v < 0 || v >= g.n()) {
    throw std::invalid_argument("invalid vertex index " + std::to_string(v));
  }
}

}  // namespace

TraceWord normal_form(std::vector<int> letters, const Graph& g) {
  for (int v : letters) check_letter(v, g);
  const std::size_t len = letters.size();
  std::vector<int> out;
  out.reserve(len);
  std::vector<char> used(len, 0);
  for (std::size_t step = 0; step < len; ++step) {
    // Greedy: emit the smallest letter with no earlier non-commuting
    // unconsumed letter.
    int best = -1;
    for (std::size_t i = 0; i < len; ++i) {
      if (used[i]) continue;
      bool available = true;
      for (std::size_t j = 0; j < i; ++j) {
        if (!used[j] && !g.adjacent(letters[j], letters[i])) {
          available = false;
          break;
        }
      }
      if (available && (best < 0 || letters[i] < letters[best])) {
        best = static_cast<int>(i);
      }
    }
    out.push_back(letters[best]);
    used[best] = 1;
  }
  return TraceWord{std::move(out)};
}

bool can_append_canonical(const std::vector<int>& w, int a, const Graph& g) {
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (!g.adjacent(*it, a)) return true;  // blocked; a stays last
    if (*it > a) return false;             // a could commute before a bigger letter
  }
  return true;
}

namespace {

// Appends a plain letter to the form w1 * w2^*: walks the stored
// linearization of w2 from the front (the innermost adjoint), commuting the
// letter past adjacent entries. Returns false when the product is zero.
bool append_plain(std::vector<int>& w1, std::vector<int>& w2, int letter,
                  const Graph& g) {
  for (std::size_t pos = 0; pos < w2.size(); ++pos) {
    int j = w2[pos];
    if (j == letter) {
      w2.erase(w2.begin() + pos);  // V_j^* V_j = I
      return true;
    }
    if (!g.adjacent(letter, j)) return false;  // orthogonal ranges
    // adjacent: V_j^* V_i = V_i V_j^*, keep scanning
  }
  w1.push_back(letter);
  return true;
}

}  // namespace

ReducedForm reduce(const StarWord& w, const Graph& g) {
  std::vector<int> w1, w2;
  for (const StarFactor& f : w) {
    check_letter(f.vertex, g);
    if (f.star) {
      w2.insert(w2.begin(), f.vertex);
    } else if (!append_plain(w1, w2, f.vertex, g)) {
      ReducedForm z;
      z.zero = true;
      return z;
    }
  }
  ReducedForm r;
  r.w1 = normal_form(std::move(w1), g);
  r.w2 = normal_form(std::move(w2), g);
  return r;
}

bool is_omega_word(const TraceWord& w, const Graph& g, int v) {
  check_letter(v, g);
  const auto& ls = w.letters;
  for (std::size_t p = 0; p < ls.size(); ++p) {
    bool maximal = true;
    for (std::size_t q = p + 1; q < ls.size(); ++q) {
      if (!g.adjacent(ls[p], ls[q])) {
        maximal = false;
        break;
      }
    }
    if (maximal && g.adjacent(ls[p], v)) return false;
  }
  return true;
}

std::vector<TraceWord> omega_enumerate(const Graph& g, int v, int max_len) {
  check_letter(v, g);
  if (!is_connected(complement(g))) {
    throw hypothesis_error("omega_enumerate: complement of the graph is disconnected");
  }
  std::vector<int> alphabet;
  for (int s = 0; s < g.n(); ++s) {
    if (s != v) alphabet.push_back(s);
  }
  std::vector<TraceWord> out;
  std::vector<std::vector<int>> level = {{}};
  out.push_back(TraceWord{});  // omega_0 = I
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& w : level) {
      for (int a : alphabet) {
        if (!can_append_canonical(w, a, g)) continue;
        std::vector<int> ext = w;
        ext.push_back(a);
        next.push_back(std::move(ext));
      }
    }
    for (const auto& w : next) {
      TraceWord tw{w};
      if (is_omega_word(tw, g, v)) out.push_back(std::move(tw));
    }
    level = std::move(next);
  }
  return out;
}

DeltaResult delta_check(const TraceWord& p, const TraceWord& q,
                        const Graph& g_full, int v) {
  for (const TraceWord* w : {&p, &q}) {
    for (int s : w->letters) {
      if (s == v) {
        throw std::invalid_argument("delta_check: word uses the distinguished vertex");
      }
      check_letter(s, g_full);
    }
    if (normal_form(w->letters, g_full).letters != w->letters ||
        !is_omega_word(*w, g_full, v)) {
      throw std::invalid_argument("delta_check: word is not an omega word");
    }
  }
  StarWord word;
  word.push_back({v, true});
  for (auto it = q.letters.rbegin(); it != q.letters.rend(); ++it) {
    word.push_back({*it, true});
  }
  for (int s : p.letters) word.push_back({s, false});
  word.push_back({v, false});

  ReducedForm r = reduce(word, g_full);
  DeltaResult res;
  if (r.zero) {
    res.outcome = DeltaOutcome::zero;
  } else if (r.w1.empty() && r.w2.empty()) {
    res.outcome = DeltaOutcome::identity;
  } else {
    res.outcome = DeltaOutcome::violation;
    res.witness = std::move(r);
  }
  return res;
}

}  // namespace artc
