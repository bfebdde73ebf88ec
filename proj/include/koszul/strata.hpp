#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "koszul/verdict.hpp"

namespace koszul {

/// Even: g = 3g_h + 2i. Odd: g = 3g_h + 2i − 1.
enum class StratumCase { even, odd };

std::string to_string(StratumCase c);
StratumCase parse_stratum_case(const std::string& text);

struct StratumInvariants {
  int g_h = 0;
  int i = 0;
  StratumCase kind = StratumCase::even;
  int g = 0;
  std::array<int, 3> v_type{};
  std::pair<int, int> e_type{};
  int a = 0;  // E ≅ O(a) ⊕ O(b), read off e_type as printed
  int b = 0;
};

struct StratumAdmissibility {
  bool admissible = false;
  /// Set when only g ≥ 9 fails (the excluded (g_h, i) = (2, 1) stratum).
  bool genus_exclusion = false;
  std::string failing;  // the violated inequality, empty if admissible
};

/// g_h ≥ 2, 2i ≥ g_h (even) or 2i ≥ g_h + 1 (odd), and g ≥ 9.
StratumAdmissibility stratum_admissibility(int g_h, int i, StratumCase kind);

/// Throws InputError naming the failing inequality when the stratum is not admissible.
StratumInvariants stratum_invariants(int g_h, int i, StratumCase kind);

/// Quadratic iff min(a, b) ≥ 2. Requires a, b ≥ −1.
Verdict quadraticity_verdict(int a, int b);

/// Projectively normal iff a, b ≥ 1; not_applicable unless h^0(2T) = 3.
Verdict projective_normality_verdict(int a, int b, bool h0_2T_is_3);

struct TetragonalConstraintInput {
  int g = 0;
  int r = 0;
  int degA = 0;
};

struct TetragonalReport {
  std::vector<ChecklistItem> items;
  /// For r = 1: "tetragonal", "trigonal (excluded)", or "unclassified".
  std::optional<std::string> classification;
  bool all_hold() const;
};

/// 3r ≤ deg A ≤ 4r and 3r ≤ g − 3 (r ≤ g/3 − 1).
TetragonalReport tetragonal_constraints(const TetragonalConstraintInput& in);

struct DoubleCoverReport {
  int g_h = 0;
  int degM = 0;
  int g = 0;
  int degD = 0;
  bool splitting_asserted = false;        // deg M ≥ 2g_h + 1
  std::optional<std::pair<int, int>> e_type;  // E ≅ O(2g_h − 2) ⊕ O(deg M − 4)
  std::pair<int, int> pushforward_type{};     // splitting of the pushforward of M, by parity
  std::optional<StratumCase> stratum_case;
  std::optional<int> stratum_i;
  bool below_genus_range = false;  // g < 9
  /// Whether the stratum row with the same (g_h, i, case) reproduces g, E and V.
  Verdict cross_check = Verdict::not_applicable;
  std::string detail;
};

DoubleCoverReport double_cover_bookkeeping(int g_h, int degM);

}  // namespace koszul
