#pragma once

#include <optional>
#include <string>
#include <vector>

#include "artc/graph.hpp"
#include "artc/intmat.hpp"

namespace artc {

/// Finitely generated abelian group in canonical form, together with the
/// coordinates of one distinguished element (the class of the unit /
/// distinguished projection). marked_class holds one coordinate per summand:
/// first the torsion summands (aligned with `torsion`), then the free ones.
struct FGAbelianGroup {
  long long free_rank = 0;
  std::vector<long long> torsion;  // invariant factors >= 2, d1 | d2 | ...
  std::vector<long long> marked_class;

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  // Order of the marked element; nullopt means infinite.
  std::optional<long long> marked_order() const;
  // Same abstract group (rank and torsion chain), ignoring the marking.
  bool same_group(const FGAbelianGroup& o) const {
    return free_rank == o.free_rank && torsion == o.torsion;
  }
  std::string display() const;  // "0", "Z", "Z_3", "Z (+) Z_2 (+) Z_6", ...
};

FGAbelianGroup direct_sum(const FGAbelianGroup& a, const FGAbelianGroup& b);

struct Presentation {
  int n_generators = 0;
  IntMatrix relations;  // rows = relations, cols = generators
};

// Quotient of Z^n by the row span of the relations; the marked class is the
// image of the chosen generator, read off through the right transform of the
// Smith normal form.
FGAbelianGroup group_from_presentation(const Presentation& p,
                                       int marked_generator = 0);

enum class KSource { closed_form, pv_truncated };

struct KResult {
  FGAbelianGroup k0;
  FGAbelianGroup k1;
  long long chi = 0;
  KSource source = KSource::closed_form;
};

// chi != 0: K0 = Z_|chi| with marked generator, K1 = 0.
// chi == 0: K0 = Z with marked generator, K1 = Z.
// Z_1 is the trivial group (empty torsion, empty marked class).
KResult kgroups_closed_form(long long chi);

enum class ShiftDirection { up, down };

// Independent oracle: models the truncated shift-module presentation with
// generators g_{-N}..g_N, relations x*g_i - y*g_{i+1} = 0, and the shift
// endomorphism g_i -> g_{i+1}. K0 of the crossed product is the cokernel of
// (id - shift); K1 combines the kernel of (id - shift) with the free
// shift-module contribution present exactly when x = y = 0. Each group is
// computed at windows N and N+1 and accepted only on exact agreement;
// disagreement raises oracle_instability_error.
KResult pv_truncated(long long x, long long y, int window,
                     ShiftDirection dir = ShiftDirection::up);

struct ToeplitzKResult {
  FGAbelianGroup k0;  // always Z, marked generator = class of the unit
  FGAbelianGroup k1;  // always trivial
  long long extension_multiplier = 0;  // the ideal inclusion acts by *chi
};

ToeplitzKResult kgroups_toeplitz(long long chi);

// Closed form for a graph with connected complement (>= 2 vertices),
// cross-checked against pv_truncated on the top removal step.
KResult kgroups_for_graph(const Graph& g, int oracle_window = 6);

bool k_results_agree(const KResult& a, const KResult& b);

}  // namespace artc
