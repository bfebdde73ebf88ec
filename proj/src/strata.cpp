#include "koszul/strata.hpp"

#include <algorithm>

#include "koszul/field.hpp"

namespace koszul {

std::string to_string(StratumCase c) { return c == StratumCase::even ? "even" : "odd"; }

StratumCase parse_stratum_case(const std::string& text) {
  if (text == "even") return StratumCase::even;
  if (text == "odd") return StratumCase::odd;
  throw InputError("stratum case must be 'even' or 'odd' (got '" + text + "')");
}

namespace {

int genus_of(int g_h, int i, StratumCase kind) {
  return 3 * g_h + 2 * i - (kind == StratumCase::odd ? 1 : 0);
}

}  // namespace

StratumAdmissibility stratum_admissibility(int g_h, int i, StratumCase kind) {
  StratumAdmissibility out;
  if (g_h < 2) {
    out.failing = "g_h ≥ 2 (g_h = " + std::to_string(g_h) + ")";
    return out;
  }
  if (kind == StratumCase::even && 2 * i < g_h) {
    out.failing = "i ≥ g_h/2 (i = " + std::to_string(i) + ", g_h = " + std::to_string(g_h) + ")";
    return out;
  }
  if (kind == StratumCase::odd && 2 * i < g_h + 1) {
    out.failing = "i ≥ (g_h+1)/2 (i = " + std::to_string(i) + ", g_h = " + std::to_string(g_h) + ")";
    return out;
  }
  const int g = genus_of(g_h, i, kind);
  if (g < 9) {
    out.genus_exclusion = true;
    out.failing = "g ≥ 9 (g = " + std::to_string(g) + "; the stratum g_h = " + std::to_string(g_h) +
                  ", i = " + std::to_string(i) + " is excluded)";
    return out;
  }
  out.admissible = true;
  return out;
}

StratumInvariants stratum_invariants(int g_h, int i, StratumCase kind) {
  const auto adm = stratum_admissibility(g_h, i, kind);
  if (!adm.admissible) throw InputError("stratum not admissible: violates " + adm.failing);
  StratumInvariants s;
  s.g_h = g_h;
  s.i = i;
  s.kind = kind;
  s.g = genus_of(g_h, i, kind);
  if (kind == StratumCase::even) {
    s.v_type = {g_h - 1, g_h - 1 + i, g_h - 1 + i};
    s.e_type = {2 * g_h - 2, g_h - 3 + 2 * i};
  } else {
    s.v_type = {g_h - 1, g_h - 2 + i, g_h - 1 + i};
    s.e_type = {2 * g_h - 2, g_h - 4 + 2 * i};
  }
  s.a = s.e_type.first;
  s.b = s.e_type.second;
  if (s.a + s.b != s.g - 5 || s.v_type[0] + s.v_type[1] + s.v_type[2] != s.g - 3) {
    throw InternalError("stratum identities failed");
  }
  return s;
}

Verdict quadraticity_verdict(int a, int b) {
  if (a < -1 || b < -1) throw InputError("splitting degrees must satisfy a, b ≥ −1");
  return verdict_of(std::min(a, b) >= 2);
}

Verdict projective_normality_verdict(int a, int b, bool h0_2T_is_3) {
  if (!h0_2T_is_3) return Verdict::not_applicable;
  return verdict_of(a >= 1 && b >= 1);
}

bool TetragonalReport::all_hold() const {
  return std::all_of(items.begin(), items.end(), [](const ChecklistItem& i) { return i.verdict == Verdict::pass; });
}

TetragonalReport tetragonal_constraints(const TetragonalConstraintInput& in) {
  if (in.g < 0 || in.r < 0 || in.degA < 0) throw InputError("g, r and deg A must be nonnegative");
  TetragonalReport rep;
  const std::string r = std::to_string(in.r), deg = std::to_string(in.degA);
  rep.items.push_back({"deg A ≥ 3r", verdict_of(in.degA >= 3 * in.r), deg + " ≥ " + std::to_string(3 * in.r)});
  rep.items.push_back({"deg A ≤ 4r", verdict_of(in.degA <= 4 * in.r), deg + " ≤ " + std::to_string(4 * in.r)});
  rep.items.push_back({"r ≤ g/3 − 1", verdict_of(3 * in.r <= in.g - 3),
                       "3r = " + std::to_string(3 * in.r) + ", g − 3 = " + std::to_string(in.g - 3)});
  if (in.r == 1) {
    if (in.degA == 4) {
      rep.classification = "tetragonal";
    } else if (in.degA == 3) {
      rep.classification = "trigonal (excluded; the exclusion is taken as given, not re-derived)";
    } else {
      rep.classification = "unclassified";
    }
  }
  return rep;
}

DoubleCoverReport double_cover_bookkeeping(int g_h, int degM) {
  if (g_h < 2) throw InputError("hyperelliptic base genus must be ≥ 2");
  DoubleCoverReport rep;
  rep.g_h = g_h;
  rep.degM = degM;
  rep.g = 2 * g_h - 1 + degM;
  rep.degD = rep.g - 3;
  rep.below_genus_range = rep.g < 9;
  // The pushforward of M to P^1 has rank 2 and degree deg M − g_h − 1.
  const int push_degree = degM - g_h - 1;
  const int low = push_degree >= 0 ? push_degree / 2 : -((1 - push_degree) / 2);
  rep.pushforward_type = {low, push_degree - low};
  rep.splitting_asserted = degM >= 2 * g_h + 1;
  if (!rep.splitting_asserted) {
    rep.detail = "deg M < 2g_h + 1: splitting of E not asserted";
    return rep;
  }
  rep.e_type = std::make_pair(2 * g_h - 2, degM - 4);
  const bool even = (degM - g_h) % 2 != 0;
  rep.stratum_case = even ? StratumCase::even : StratumCase::odd;
  rep.stratum_i = even ? (degM - g_h - 1) / 2 : (degM - g_h) / 2;
  const auto adm = stratum_admissibility(g_h, *rep.stratum_i, *rep.stratum_case);
  if (!adm.admissible) {
    rep.cross_check = Verdict::not_applicable;
    rep.detail = "stratum row not admissible: " + adm.failing;
    return rep;
  }
  const auto s = stratum_invariants(g_h, *rep.stratum_i, *rep.stratum_case);
  const std::array<int, 3> v{g_h - 1, g_h - 1 + rep.pushforward_type.first, g_h - 1 + rep.pushforward_type.second};
  const bool ok = s.g == rep.g && s.e_type == *rep.e_type && s.v_type == v;
  rep.cross_check = verdict_of(ok);
  rep.detail = ok ? "matches the " + to_string(s.kind) + " row g_h = " + std::to_string(g_h) + ", i = " +
                        std::to_string(s.i)
                  : "disagrees with the " + to_string(s.kind) + " row";
  return rep;
}

}  // namespace koszul
