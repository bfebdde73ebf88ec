#include <gtest/gtest.h>

#include <sstream>

#include "koszul/commands.hpp"
#include "koszul/io.hpp"
#include "koszul/quadalg.hpp"
#include "oracles.hpp"

using namespace koszul;
using nlohmann::json;

namespace {

const PrimeField kP(32003);
const std::string kFixtures = KOSZUL_FIXTURE_DIR;

std::string fixture(const std::string& name) { return kFixtures + "/" + name + ".json"; }

PresentationInput load_presentation(const std::string& name) {
  return parse_presentation(parse_json_text(read_text_file(fixture(name)), name));
}

struct CliResult {
  int code;
  std::string out, err;
};

CliResult cli(std::vector<std::string> args) {
  args.insert(args.begin(), "koszulcheck");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

json strip_time(const std::string& text) {
  json j = json::parse(text);
  j.erase("wall_time_seconds");
  return j;
}

std::vector<std::string> verdicts(const json& report) {
  std::vector<std::string> out;
  for (const auto& c : report["checks"]) out.push_back(c["verdict"].get<std::string>());
  return out;
}

std::string verdict_of_check(const json& report, const std::string& prefix) {
  for (const auto& c : report["checks"])
    if (c["name"].get<std::string>().rfind(prefix, 0) == 0) return c["verdict"];
  return "missing";
}

RunConfig config(const std::string& command, std::vector<std::string> inputs = {}) {
  RunConfig c;
  c.command = command;
  c.inputs = std::move(inputs);
  return c;
}

// Relation rows (upper-triangular tensor coordinates) of the sparse search over three quadrics in
// k[x, y, z] that produced the pinned non-Koszul fixture.
Matrix<PrimeField> search_rows(std::uint64_t seed) {
  const std::size_t n = 3;
  CounterRng rng(seed, 0x5EA);
  Matrix<PrimeField> rows(kP, 0, n * n);
  for (int q = 0; q < 3; ++q) {
    Vec<PrimeField> v(n * n, kP.zero());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        const long c = rng.uniform(0, 3) == 0 ? rng.uniform(-2, 2) : 0;
        v[i * n + j] = kP.from_int(c);
      }
    rows.append_row(v);
  }
  return rows;
}

// First degree where H_A(t)·H_{A!}(−t) has a nonzero coefficient, from the monomial-span and
// intersection oracles; −1 if none through max_degree.
int oracle_failing_degree(const Matrix<PrimeField>& rows, int max_degree) {
  const std::size_t n = 3;
  std::vector<oracle::Poly> forms;
  for (std::size_t q = 0; q < rows.rows(); ++q) {
    oracle::Poly p;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        const auto c = rows(q, i * n + j);
        if (kP.is_zero(c)) continue;
        std::vector<int> e(n, 0);
        ++e[i];
        ++e[j];
        const long lifted = c > 16001 ? static_cast<long>(c) - 32003 : static_cast<long>(c);
        p[e] += lifted;
      }
    if (!p.empty()) forms.push_back(p);
  }
  Matrix<PrimeField> r = rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec<PrimeField> v(n * n, kP.zero());
      v[i * n + j] = kP.one();
      v[j * n + i] = kP.neg(kP.one());
      r.append_row(v);
    }
  std::vector<long long> a, b;
  for (int m = 0; m <= max_degree; ++m) {
    a.push_back(static_cast<long long>(oracle::commutative_quotient_dim(kP, n, forms, m)));
    b.push_back(static_cast<long long>(oracle::dual_dim_by_intersection(r, n, m)));
    long long c = 0;
    for (int k = 0; k <= m; ++k) c += (k % 2 == 0 ? 1 : -1) * a[m - k] * b[k];
    if (c != (m == 0 ? 1 : 0)) return m;
  }
  return -1;
}

}  // namespace

TEST(ParsePresentation, ReadsRationalCoefficients) {
  auto in = parse_presentation(json::parse(R"({"field": "rationals", "generators": ["a", "b"],
      "commutative": false, "relations": [[{"monomial": ["a", "b"], "coefficient": "3/2"},
      {"monomial": ["b", "a"], "coefficient": -1}]]})"));
  ASSERT_EQ(in.relations.size(), 1u);
  EXPECT_EQ(in.relations[0][0].coefficient, mpq_class(3, 2));
  EXPECT_EQ(in.relations[0][1].word, (std::vector<std::size_t>{1, 0}));
  EXPECT_TRUE(in.is_quadratic());
  EXPECT_EQ(in.field->to_string(), "rationals");
}

TEST(ParsePresentation, ErrorsNameThePath) {
  auto message = [](const std::string& text) {
    try {
      parse_presentation(json::parse(text));
    } catch (const InputError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_NE(message(R"({"generators": ["x"], "commutative": true, "relations": [], "extra": 1})").find("extra"),
            std::string::npos);
  EXPECT_NE(message(R"({"generators": ["x", "y"], "commutative": true,
      "relations": [[{"monomial": ["x", "q"], "coefficient": 1}]]})")
                .find("relations[0][0].monomial"),
            std::string::npos);
  EXPECT_NE(message(R"({"generators": ["x", "y"], "commutative": false,
      "relations": [[{"monomial": ["x", "x", "y"], "coefficient": 1}]]})"),
            "no error");
  EXPECT_NE(message(R"({"generators": ["x"], "commutative": true,
      "relations": [[{"monomial": ["x"], "coefficient": 1}]]})"),
            "no error");
  EXPECT_NE(message(R"({"generators": ["x", "x"], "commutative": true, "relations": []})"), "no error");
}

TEST(ParseJson, ReportsLineAndColumn) {
  try {
    parse_json_text("{\n  \"a\": 1,,\n}", "f.json");
    FAIL();
  } catch (const InputError& e) {
    EXPECT_EQ(std::string(e.what()).rfind("f.json:2:", 0), 0u) << e.what();
  }
}

TEST(ParsePoints, RejectsBadRows) {
  EXPECT_THROW(parse_points(json::parse(R"({"ambient_dim": 2, "points": [[1, 0]]})")), InputError);
  EXPECT_THROW(parse_points(json::parse(R"({"ambient_dim": 0, "points": [[1]]})")), InputError);
  auto in = parse_points(json::parse(R"({"ambient_dim": 1, "points": [[2, 4], ["1/2", 3]]})"));
  auto c = to_configuration(kP, in);
  EXPECT_EQ(c.points.size(), 2u);
  EXPECT_THROW(to_configuration(kP, parse_points(json::parse(R"({"ambient_dim": 1, "points": [[1, 2], [2, 4]]})"))),
               InputError);
}

TEST(ParsePencil, RoundTripsFixture) {
  auto p = parse_pencil(parse_json_text(read_text_file(fixture("degenerate_pencil")), "pencil"));
  EXPECT_EQ(p.d, 3);
  EXPECT_EQ(p.roots, (std::vector<long>{0, 1}));
  EXPECT_EQ(p.second_form, (std::vector<long>{1, 0, -1}));
}

TEST(Fixtures, GenusFiveMatchesSeededGenerator) {
  const std::size_t n = 5;
  CounterRng rng(17);
  Matrix<PrimeField> rows(kP, 0, n * n);
  for (int q = 0; q < 3; ++q) {
    Vec<PrimeField> v(n * n, kP.zero());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) v[i * n + j] = kP.from_int(rng.uniform(-5, 5));
    rows.append_row(v);
  }
  const auto expected = make_presentation(kP, default_generator_names(n), true, rows);
  const auto parsed = to_quadratic_presentation(kP, load_presentation("genus5_seed17"));
  EXPECT_EQ(parsed.relations, expected.relations);
  EXPECT_EQ(parsed.generators, expected.generators);
}

TEST(Fixtures, NonKoszulIsFirstHitOfSeededSearch) {
  std::uint64_t seed = 1;
  int failing = -1;
  for (; seed < 100; ++seed) {
    failing = oracle_failing_degree(search_rows(seed), 6);
    if (failing >= 0) break;
  }
  ASSERT_EQ(seed, 11u);
  EXPECT_EQ(failing, 4);

  const auto p = to_quadratic_presentation(kP, load_presentation("non_koszul_seed11"));
  EXPECT_EQ(p.relations, make_presentation(kP, default_generator_names(3), true, search_rows(11)).relations);
  const auto numeric = koszul_numeric_check(p, 6);
  EXPECT_FALSE(numeric.consistent);
  EXPECT_EQ(numeric.failing_degree, 4);
  EXPECT_EQ(distributivity_check(p, 4).status, DistributivityVerdict::Status::not_distributive);
  EXPECT_EQ(distributivity_check(p, 3).status, DistributivityVerdict::Status::distributive);
  const auto table = std::make_shared<const GradedAlgebraTable<PrimeField>>(expand_table(p, 5));
  EXPECT_FALSE(is_koszul_to(table, 4).holds());
}

TEST(CheckPresentation, Fixtures) {
  auto sym = run_command([] {
    auto c = config("check-presentation", {fixture("symmetric3")});
    c.cutoff = 5;
    return c;
  }());
  EXPECT_EQ(verdicts(sym), (std::vector<std::string>{"pass", "pass", "pass", "pass", "pass"}));
  const auto cells = sym["data"]["betti"]["cells"];
  for (int i = 0; i <= 3; ++i) EXPECT_EQ(cells[i][i], (std::vector<int>{1, 3, 3, 1})[i]);

  auto cubic = run_command(config("check-presentation", {fixture("cubic")}));
  EXPECT_EQ(verdict_of_check(cubic, "quadratic"), "fail");
  EXPECT_EQ(cubic["checks"][0]["witness"]["nonzero_cell"], json({1, 3}));
  EXPECT_EQ(verdict_of_check(cubic, "numeric duality"), "not_applicable");

  auto bad = run_command(config("check-presentation", {fixture("non_koszul_seed11")}));
  EXPECT_EQ(verdict_of_check(bad, "numeric duality"), "fail");
  EXPECT_EQ(verdict_of_check(bad, "koszul to"), "fail");
  EXPECT_EQ(verdict_of_check(bad, "distributive"), "fail");
  EXPECT_EQ(verdict_of_check(bad, "euler identity"), "pass");
}

TEST(Points, Fixtures) {
  auto four = run_command(config("points", {fixture("four_general_points")}));
  EXPECT_EQ(verdict_of_check(four, "kempf prediction"), "pass");
  EXPECT_EQ(verdict_of_check(four, "prediction confirmed"), "pass");
  auto collinear = run_command(config("points", {fixture("collinear")}));
  EXPECT_EQ(verdict_of_check(collinear, "general position"), "fail");
  EXPECT_EQ(collinear["checks"][0]["witness"]["dependent_subset"], json({1, 2, 3}));
  auto five = run_command(config("points", {fixture("five_points_p2")}));
  EXPECT_EQ(verdict_of_check(five, "kempf prediction"), "abstain");
  EXPECT_EQ(five["checks"][1]["witness"]["reason"], "out_of_range");
  EXPECT_NE(verdict_of_check(five, "koszul to"), "missing");
  auto three = run_command(config("points", {fixture("three_points_p1")}));
  EXPECT_EQ(verdict_of_check(three, "quadratic generation"), "fail");
  EXPECT_EQ(three["checks"][2]["witness"]["failing_degree"], 3);
}

TEST(Theorem4, FullPassAndDegenerate) {
  for (auto [d, e] : {std::pair{3, 2}, std::pair{2, 1}}) {
    auto c = config("theorem4");
    c.d = d;
    c.e = e;
    auto r = run_command(c);
    for (const auto& v : verdicts(r)) EXPECT_EQ(v, "pass") << d << "," << e;
    // deg L = 2 is below the divisor criterion's range; the K-complex checks still pass.
    EXPECT_EQ(r["data"]["divisor_criterion"]["all_pass"].get<bool>(), d == 3);
  }
  auto r = run_command(config("theorem4", {fixture("degenerate_pencil")}));
  EXPECT_EQ(verdict_of_check(r, "H_p(K)_j = 0"), "fail");
  for (const auto& c : r["checks"]) {
    const std::string name = c["name"];
    if (name.rfind("R koszul", 0) == 0 || name.rfind("A linear", 0) == 0) {
      EXPECT_TRUE(c["witness"]["informational"].get<bool>());
    }
  }
  auto bad = config("theorem4");
  bad.e = 3;
  EXPECT_THROW(run_command(bad), InputError);
}

TEST(Regularity, Examples) {
  auto run = [](int d, int m) {
    auto c = config("regularity");
    c.d = d;
    c.m = m;
    return verdicts(run_command(c));
  };
  EXPECT_EQ(run(2, 3), (std::vector<std::string>{"pass", "pass"}));
  EXPECT_EQ(run(2, 0), (std::vector<std::string>{"fail", "abstain"}));
  EXPECT_EQ(run(3, 2), (std::vector<std::string>{"pass", "pass"}));
}

TEST(Strata, GridPasses) {
  auto c = config("strata");
  c.gh_max = 4;
  auto r = run_command(c);
  for (const auto& v : verdicts(r)) EXPECT_EQ(v, "pass");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(cli({"strata"}).code, 0);
  EXPECT_EQ(cli({"--help"}).code, 0);
  EXPECT_EQ(cli({}).code, 2);
  EXPECT_EQ(cli({"strata", "--bogus"}).code, 2);
  EXPECT_EQ(cli({"points", kFixtures + "/missing.json"}).code, 2);
  EXPECT_EQ(cli({"regularity", "--field", "prime:2"}).code, 2);
  EXPECT_EQ(cli({"regularity", "--field", "prime:9"}).code, 2);
  EXPECT_EQ(cli({"theorem4", "--d", "3", "--e", "0"}).code, 2);
  EXPECT_EQ(exit_code_for(InternalError("d∘d ≠ 0")), 3);
  EXPECT_EQ(exit_code_for(std::runtime_error("other")), 1);
}

TEST(Cli, DeterministicAndSeedEchoed) {
  const std::vector<std::string> args = {"theorem4", "--d", "4", "--e", "2", "--seed", "987654321987"};
  auto a = cli(args), b = cli(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(strip_time(a.out), strip_time(b.out));
  EXPECT_EQ(strip_time(a.out).dump(), strip_time(b.out).dump());
  EXPECT_EQ(strip_time(a.out)["config"]["seed"], 987654321987ULL);
}

TEST(Cli, FieldPrecedence) {
  auto from_file = strip_time(cli({"check-presentation", fixture("exterior3")}).out);
  EXPECT_EQ(from_file["config"]["field"], "rationals");
  auto flag = strip_time(cli({"check-presentation", fixture("exterior3"), "--field", "65537"}).out);
  EXPECT_EQ(flag["config"]["field"], "prime:65537");
  EXPECT_EQ(verdicts(from_file), verdicts(flag));
  auto fallback = strip_time(cli({"regularity"}).out);
  EXPECT_EQ(fallback["config"]["field"], "prime:32003");
}

TEST(Cli, FieldIndependenceOfVerdicts) {
  for (const std::string name : {"genus5_seed17", "non_koszul_seed11", "cubic"}) {
    auto a = strip_time(cli({"check-presentation", fixture(name), "--field", "32003", "--distributivity-degree", "3"}).out);
    auto b = strip_time(cli({"check-presentation", fixture(name), "--field", "65537", "--distributivity-degree", "3"}).out);
    EXPECT_EQ(verdicts(a), verdicts(b)) << name;
    EXPECT_EQ(a["data"]["betti"], b["data"]["betti"]) << name;
  }
  for (const std::string name : {"four_general_points", "collinear", "five_points_p2", "three_points_p1"}) {
    auto a = strip_time(cli({"points", fixture(name), "--field", "32003"}).out);
    auto b = strip_time(cli({"points", fixture(name), "--field", "65537"}).out);
    EXPECT_EQ(verdicts(a), verdicts(b)) << name;
    EXPECT_EQ(a["data"]["betti"], b["data"]["betti"]) << name;
  }
}

TEST(Cli, TextRenderingDerivesFromJson) {
  auto r = cli({"regularity", "--d", "2", "--m", "0", "--format", "text"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("[fail] hypothesis"), std::string::npos);
  EXPECT_NE(r.out.find("[abstain] linear resolution"), std::string::npos);
}
