// Acceptance suite: one pass/fail line per criterion, exact tolerances, exit status 1 if any fails.
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <tuple>

#include "koszul/commands.hpp"
#include "koszul/curvecomplex.hpp"
#include "koszul/gring.hpp"
#include "koszul/io.hpp"
#include "koszul/points.hpp"
#include "koszul/quadalg.hpp"
#include "koszul/strata.hpp"

using namespace koszul;
using nlohmann::json;

namespace {

const PrimeField kP(32003);
const std::string kFixtures = KOSZUL_FIXTURE_DIR;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (!pass) detail << "; ";
      detail << what;
      pass = false;
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::string fixture(const std::string& name) { return kFixtures + "/" + name + ".json"; }

template <class F>
std::shared_ptr<const GradedAlgebraTable<F>> table_of(const QuadraticPresentation<F>& p, int top) {
  return std::make_shared<const GradedAlgebraTable<F>>(expand_table(p, top));
}

Outcome symmetric_suite() {
  Outcome o;
  for (std::size_t n : {2u, 3u, 4u}) {
    const auto start = Clock::now();
    const auto t = table_of(symmetric_presentation(kP, n), 6);
    const auto b = betti_trivial_module(t, 5, 6);
    const bool koszul = scan_off_diagonal(b, 5, 0).holds();
    o.require(koszul, "n=" + std::to_string(n) + " koszul_to(5) not established");
    for (int i = 0; i <= 5; ++i) {
      const auto v = b.at(i, i);
      o.require(v && static_cast<long>(*v) == binom(static_cast<int>(n), i),
                "n=" + std::to_string(n) + " beta_{" + std::to_string(i) + "," + std::to_string(i) + "}");
    }
    const double secs = seconds_since(start);
    o.require(secs < 10.0, "n=" + std::to_string(n) + " took " + std::to_string(secs) + " s");
    if (o.pass) o.detail << "n=" << n << ": " << std::fixed << std::setprecision(2) << secs << " s  ";
  }
  return o;
}

Outcome duality_suite() {
  Outcome o;
  auto identity_holds = [&](const std::string& label, const QuadraticPresentation<PrimeField>& p) {
    const auto r = koszul_numeric_check(p, 6);
    bool exact = r.coefficients.size() >= 7 && r.coefficients[0] == 1;
    for (std::size_t k = 1; k < 7 && exact; ++k) exact = r.coefficients[k] == 0;
    o.require(r.consistent && exact, label + " duality identity fails through t^6");
  };
  for (std::size_t n : {2u, 3u, 4u}) {
    identity_holds("symmetric(" + std::to_string(n) + ")", symmetric_presentation(kP, n));
    identity_holds("exterior(" + std::to_string(n) + ")", exterior_presentation(kP, n));
  }
  identity_holds("free(2)", free_presentation(kP, 2));
  identity_holds("free(3)", free_presentation(kP, 3));
  const auto in = parse_presentation(parse_json_text(read_text_file(fixture("non_koszul_seed11")), "non_koszul"));
  const auto bad = koszul_numeric_check(to_quadratic_presentation(kP, in), 6);
  o.require(!bad.consistent && bad.failing_degree == 4,
            "pinned non-Koszul fixture reports failing degree " + std::to_string(bad.failing_degree) + " (recorded: 4)");
  if (o.pass) o.detail << "symmetric/exterior n=2..4, free n=2,3 exact through t^6; pinned fixture fails at t^4";
  return o;
}

Outcome kempf_suite() {
  Outcome o;
  const auto start = Clock::now();
  const std::vector<std::pair<std::size_t, int>> shapes = {{3, 2}, {4, 2}, {4, 3}, {5, 3}, {5, 4},
                                                           {6, 3}, {6, 4}, {7, 4}, {8, 4}, {8, 5}};
  int count = 0;
  for (auto [d, span] : shapes) {
    for (std::uint64_t seed : {1u, 2u}) {
      const auto c = random_configuration(kP, d, span, seed);
      const auto r = verify_kempf(c, 4);
      const std::string label = "d=" + std::to_string(d) + " span=" + std::to_string(span) + " seed=" + std::to_string(seed);
      o.require(r.prediction.general_position && 2 * r.prediction.p <= static_cast<int>(d), label + " outside range");
      o.require(r.prediction.predicted(), label + " not predicted");
      o.require(r.quadratic.quadratic, label + " quadratic generation fails");
      o.require(r.koszul.holds(), label + " koszul_to(4) not established");
      ++count;
    }
  }
  PointsInput three;
  three.ambient_dim = 1;
  three.points = {{1, 0}, {0, 1}, {1, 1}};
  const auto r3 = verify_kempf(to_configuration(kP, three), 4);
  o.require(!r3.quadratic.quadratic && r3.quadratic.failing_degree == 3, "3 points on P^1 not flagged at degree 3");
  const double secs = seconds_since(start);
  o.require(secs < 120.0, "runtime " + std::to_string(secs) + " s");
  if (o.pass) o.detail << count << " configurations pass; 3 points on P^1 non-quadratic at degree 3; " << std::fixed
                       << std::setprecision(2) << secs << " s";
  return o;
}

Outcome theorem4_suite() {
  Outcome o;
  int cases = 0;
  for (int d = 2; d <= 4; ++d) {
    for (int e = 1; e <= d - 1; ++e) {
      const std::string label = "(d,e)=(" + std::to_string(d) + "," + std::to_string(e) + ")";
      const int depth = 4, window = 8;
      const auto m = build_twisted_model(kP, d, e, kDefaultSeed, window);
      const auto k = build_k_complex(m, depth, window);
      o.require(differential_squares_to_zero(k), label + " d∘d ≠ 0");
      const auto hyp = check_theorem4_hypotheses(k, divisor_ideal(m, window));
      o.require(hyp.established(), label + " hypotheses not established");
      const auto conc = cross_validate_theorem4(k, hyp, 4);
      o.require(conc.ring_koszul.holds(), label + " R not koszul_to(4)");
      o.require(conc.module_linear.holds(), label + " A resolution not linear to 4");
      const auto direct = homology_bigraded(k, depth, window);
      const auto closed = homology_closed_form(m, depth, window);
      int compared = 0;
      for (int p = 0; p <= depth; ++p)
        for (int n = 0; n <= window; ++n) {
          const auto v = direct.at(p, n);
          if (!v) continue;
          ++compared;
          o.require(*v == *closed.at(p, n), label + " H_" + std::to_string(p) + "(K)_" + std::to_string(n) + " mismatch");
        }
      o.require(compared > 0, label + " no cells compared");
      ++cases;
    }
  }
  if (o.pass) o.detail << cases << " (d,e) pairs: d∘d = 0, hypotheses, R koszul_to(4), A linear to 4, closed form exact";
  return o;
}

Outcome theorem6_suite() {
  Outcome o;
  int cases = 0;
  for (int degL = 3; degL <= 8; ++degL) {
    const auto m = build_twisted_model(kP, degL, degL - 1, kDefaultSeed, 4);
    const auto r = check_theorem6<PrimeField>({0, degL, 0}, &m);
    const std::string label = "deg L=" + std::to_string(degL);
    o.require(r.divisor_degree == degL - 0 - 1 + 2 * 0, label + " divisor degree");
    o.require(r.divisor_series_dim == degL - 0 + 4 * 0 - 1, label + " dim|D|");
    for (const auto& item : r.items) o.require(item.verdict == Verdict::pass, label + " " + item.name);
    ++cases;
  }
  if (o.pass) o.detail << cases << " genus-0 inputs (deg L = 3..8): numerology and every h^1 condition exact";
  return o;
}

Outcome theorem8_suite() {
  Outcome o;
  std::vector<std::string> failing;
  for (int d : {2, 3}) {
    for (int m : {1, 2, 3, 4}) {
      const auto r = check_theorem8(kP, d, m, 4);
      const bool ok = r.hypothesis && r.linear && r.linear->holds();
      if (!ok) {
        std::ostringstream s;
        s << "(d,m)=(" << d << "," << m << "): h^1(O(m-d))=" << r.h1_twist;
        if (r.linear && !r.linear->holds() && r.linear->status == DiagonalVerdict::Status::violated)
          s << ", beta_{" << r.linear->i << "," << r.linear->j << "} != 0";
        if (!r.hypothesis) {
          // Resolve directly anyway so the failure records whether only the hypothesis is missing.
          const auto ring = model_rational_normal_curve(kP, d, 5 + 1);
          const auto res = minimal_free_resolution(sheaf_module_p1(ring, d, m, 5), 4, 5);
          s << " (hypothesis false; direct resolution "
            << (scan_off_diagonal(res.betti, 4, 0).holds() ? "is linear" : "is not linear") << " to 4)";
        }
        failing.push_back(s.str());
      }
    }
    for (int m : {0, -3}) {
      const auto r = check_theorem8(kP, d, m, 4);
      o.require(!r.hypothesis && !r.linear,
                "(d,m)=(" + std::to_string(d) + "," + std::to_string(m) + ") did not abstain");
    }
  }
  for (const auto& f : failing) o.require(false, f);
  if (o.pass) o.detail << "d ∈ {2,3}, m ∈ {1..4} linear to 4; m ∈ {0,-3} abstain";
  return o;
}

Outcome strata_suite() {
  Outcome o;
  const auto start = Clock::now();
  std::set<std::tuple<int, int, StratumCase>> excluded;
  int rows = 0;
  for (int g_h = 2; g_h <= 4; ++g_h) {
    for (int i = 0; i <= 12; ++i) {
      for (auto kind : {StratumCase::even, StratumCase::odd}) {
        const auto adm = stratum_admissibility(g_h, i, kind);
        if (adm.genus_exclusion) excluded.insert({g_h, i, kind});
        if (!adm.admissible) continue;
        const auto s = stratum_invariants(g_h, i, kind);
        const std::string label = "(" + std::to_string(g_h) + "," + std::to_string(i) + "," + to_string(kind) + ")";
        o.require(s.a + s.b == s.g - 5, label + " a+b != g-5");
        o.require(s.v_type[0] + s.v_type[1] + s.v_type[2] == s.g - 3, label + " sum V_type != g-3");
        o.require(quadraticity_verdict(s.a, s.b) == verdict_of(std::min(s.a, s.b) >= 2), label + " quadraticity");
        o.require(projective_normality_verdict(s.a, s.b, true) == verdict_of(s.a >= 1 && s.b >= 1),
                  label + " projective normality");
        const int degM = g_h + 2 * i + (kind == StratumCase::even ? 1 : 0);
        o.require(double_cover_bookkeeping(g_h, degM).cross_check == Verdict::pass, label + " double cover");
        ++rows;
      }
    }
  }
  const std::set<std::tuple<int, int, StratumCase>> expected = {{2, 1, StratumCase::even}};
  o.require(excluded == expected, "genus exclusion set differs from {(2,1,even)}");
  const double secs = seconds_since(start);
  o.require(secs < 1.0, "runtime " + std::to_string(secs) + " s");
  if (o.pass) o.detail << rows << " admissible rows; exclusion only at (2,1,even); " << std::fixed
                       << std::setprecision(3) << secs << " s";
  return o;
}

std::vector<RunConfig> fixture_runs() {
  std::vector<RunConfig> out;
  auto add = [&](const std::string& command, std::vector<std::string> inputs, std::function<void(RunConfig&)> tweak) {
    RunConfig c;
    c.command = command;
    c.inputs = std::move(inputs);
    if (tweak) tweak(c);
    out.push_back(c);
  };
  for (const char* f : {"symmetric3", "genus5_seed17", "cubic", "non_koszul_seed11", "exterior3"})
    add("check-presentation", {fixture(f)}, nullptr);
  for (const char* f : {"four_general_points", "collinear", "five_points_p2", "three_points_p1"})
    add("points", {fixture(f)}, nullptr);
  add("theorem4", {}, [](RunConfig& c) { c.d = 3, c.e = 2; });
  add("theorem4", {}, [](RunConfig& c) { c.d = 2, c.e = 1; });
  add("theorem4", {fixture("degenerate_pencil")}, nullptr);
  add("regularity", {}, [](RunConfig& c) { c.d = 2, c.m = 3; });
  add("regularity", {}, [](RunConfig& c) { c.d = 2, c.m = 0; });
  add("strata", {}, nullptr);
  return out;
}

json checks_without_fieldtext(const json& report) {
  json out = json::array();
  for (const auto& c : report["checks"]) out.push_back({c["name"], c["verdict"]});
  return out;
}

Outcome consistency_suite() {
  Outcome o;
  int euler = 0;
  for (auto cfg : fixture_runs()) {
    const std::string label = cfg.command + (cfg.inputs.empty() ? "" : " " + cfg.inputs.front().substr(kFixtures.size() + 1));
    cfg.field = FieldSpec::prime(32003);
    const json a = run_command(cfg);
    const json a2 = run_command(cfg);
    o.require(a.dump() == a2.dump(), label + " not byte-identical under a fixed seed");
    for (const auto& c : a["checks"]) {
      if (c["name"] == "euler identity") {
        o.require(c["verdict"] == "pass", label + " Euler identity");
        ++euler;
      }
    }
    cfg.field = FieldSpec::prime(65537);
    const json b = run_command(cfg);
    o.require(checks_without_fieldtext(a) == checks_without_fieldtext(b), label + " verdicts differ between primes");
    if (a["data"].contains("betti")) o.require(a["data"]["betti"] == b["data"]["betti"], label + " Betti tables differ");
  }
  if (o.pass) o.detail << fixture_runs().size() << " fixture runs: " << euler
                       << " Euler identities, verdicts equal over 32003/65537, byte-identical reruns";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"symmetric-algebra suite", symmetric_suite},
      {"duality identity", duality_suite},
      {"points in general position", kempf_suite},
      {"K-complex end-to-end", theorem4_suite},
      {"divisor numerology in genus 0", theorem6_suite},
      {"regularity suite", theorem8_suite},
      {"tetragonal strata identities", strata_suite},
      {"consistency meta-properties", consistency_suite},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    std::cout << "criterion " << k + 1 << " " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[k].first << ": "
              << o.detail.str() << std::endl;
    if (!o.pass) ++failed;
  }
  std::cout << criteria.size() - failed << "/" << criteria.size() << " criteria pass" << std::endl;
  return failed == 0 ? 0 : 1;
}
