#include "koszul/commands.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>

#include "koszul/curvecomplex.hpp"
#include "koszul/gring.hpp"
#include "koszul/io.hpp"
#include "koszul/points.hpp"
#include "koszul/quadalg.hpp"
#include "koszul/report.hpp"
#include "koszul/strata.hpp"

namespace koszul {

using nlohmann::json;

void RunConfig::validate() const {
  if (cutoff < 2) throw InputError("--cutoff must be at least 2");
  if (hom_cutoff < 2) throw InputError("--hom-cutoff must be at least 2");
  if (distributivity_degree < 3) throw InputError("--distributivity-degree must be at least 3");
  if (depth < 1) throw InputError("--depth must be at least 1");
}

json RunConfig::to_json(const FieldSpec& resolved_field) const {
  json inputs_json = json::array();
  for (const auto& path : inputs) inputs_json.push_back(std::filesystem::path(path).filename().string());
  json c = {{"command", command},
            {"field", resolved_field.to_string()},
            {"cutoff", cutoff},
            {"hom_cutoff", hom_cutoff},
            {"seed", seed},
            {"inputs", inputs_json}};
  if (command == "check-presentation") c["distributivity_degree"] = distributivity_degree;
  if (command == "theorem4") {
    c["d"] = d;
    c["e"] = e;
    c["depth"] = depth;
  }
  if (command == "regularity") {
    c["d"] = d;
    c["m"] = m;
  }
  if (command == "strata") {
    c["gh_min"] = gh_min;
    c["gh_max"] = gh_max;
    c["i_max"] = i_max;
  }
  return c;
}

namespace {

FieldSpec resolve_field(const RunConfig& cfg, const std::optional<FieldSpec>& from_file) {
  FieldSpec fs = cfg.field.value_or(from_file.value_or(kDefaultFieldSpec));
  fs.validate(-1);
  return fs;
}

const std::string& single_input(const RunConfig& cfg) {
  if (cfg.inputs.size() != 1) throw InputError(cfg.command + " expects exactly one input file");
  return cfg.inputs.front();
}

json sizes(const std::vector<std::size_t>& v) { return json(v); }

template <class F>
json form_json(const F& f, const BinaryForm<F>& p) {
  json out = json::array();
  for (const auto& c : p.coeffs) out.push_back(f.to_string(c));
  return out;
}

// ---------------------------------------------------------------------------

template <class F>
void quadratic_presentation_checks(const F& field, const RunConfig& cfg, const PresentationInput& in,
                                   ReportBuilder& rb) {
  const int N = cfg.cutoff;
  const auto p = to_quadratic_presentation(field, in);
  const auto table = std::make_shared<const GradedAlgebraTable<F>>(expand_table(p, N + 1));
  const auto numeric = koszul_numeric_check(p, N);
  const auto betti = betti_trivial_module(table, N, N + 1);
  const auto diag = scan_off_diagonal(betti, N, 0);

  rb.check("quadratic", Verdict::pass, {{"relation_degrees", in.relation_degrees()}}, cite::quadratic);
  rb.check("numeric duality to degree " + std::to_string(N), verdict_of(numeric.consistent),
           numeric.consistent ? json(nullptr) : json{{"failing_degree", numeric.failing_degree}}, cite::duality);
  rb.check("koszul to degree " + std::to_string(N), diagonal_verdict(diag), diagonal_witness(diag), cite::koszul);

  const auto dist = distributivity_check(p, cfg.distributivity_degree);
  const Verdict dv = dist.status == DistributivityVerdict::Status::distributive       ? Verdict::pass
                     : dist.status == DistributivityVerdict::Status::not_distributive ? Verdict::fail
                                                                                       : Verdict::abstain;
  rb.check("distributive lattice in degree " + std::to_string(cfg.distributivity_degree), dv,
           {{"lattice_size", dist.lattice_size}, {"detail", dist.detail}}, cite::distributivity);

  std::vector<std::size_t> trivial(static_cast<std::size_t>(N) + 2, 0);
  trivial[0] = 1;
  rb.check("euler identity", euler_identity_verdict(betti, table->dims, trivial, 0, N));

  rb.data("hilbert", sizes(numeric.hilbert));
  rb.data("dual_hilbert", sizes(numeric.dual_hilbert));
  rb.data("duality_coefficients", numeric.coefficients);
  rb.data("betti", betti_to_json(betti));
  rb.data("relation_space_dim", p.relations.dim());
}

template <class F>
void cubic_presentation_checks(const F& field, const RunConfig& cfg, const PresentationInput& in, ReportBuilder& rb) {
  const int N = cfg.cutoff;
  const std::size_t n = in.generators.size();
  const auto forms = to_forms(in);
  const auto poly = std::make_shared<const GradedAlgebraTable<F>>(expand_table(symmetric_presentation(field, n), N + 1));
  const auto ideal = quotient_module(poly, ideal_of_forms(*poly, forms, N + 1));
  const auto ideal_res = minimal_free_resolution(ideal, 1, N + 1);
  json witness = nullptr;
  for (int j = 0; j <= N + 1 && witness.is_null(); ++j) {
    const auto v = ideal_res.betti.at(1, j);
    if (j != 2 && v && *v != 0) witness = {{"nonzero_cell", {1, j}}, {"over", "polynomial ring"}};
  }
  rb.check("quadratic", witness.is_null() ? Verdict::pass : Verdict::fail, witness, cite::quadratic);
  rb.check("numeric duality to degree " + std::to_string(N), Verdict::not_applicable,
           {{"detail", "presentation is not quadratic"}}, cite::duality);

  const auto a = model_quotient_by_forms(field, n, forms, N + 1, in.generators);
  const auto betti = betti_trivial_module(a.table, N, N + 1);
  const auto diag = scan_off_diagonal(betti, N, 0);
  rb.check("koszul to degree " + std::to_string(N), diagonal_verdict(diag), diagonal_witness(diag), cite::koszul);
  rb.check("distributive lattice in degree " + std::to_string(cfg.distributivity_degree), Verdict::not_applicable,
           {{"detail", "presentation is not quadratic"}}, cite::distributivity);
  std::vector<std::size_t> trivial(static_cast<std::size_t>(N) + 2, 0);
  trivial[0] = 1;
  rb.check("euler identity", euler_identity_verdict(betti, a.table->dims, trivial, 0, N));

  rb.data("hilbert", sizes(a.table->dims));
  rb.data("ideal_betti", betti_to_json(ideal_res.betti));
  rb.data("betti", betti_to_json(betti));
}

}  // namespace

json cmd_check_presentation(const RunConfig& cfg) {
  const auto& path = single_input(cfg);
  const auto in = parse_presentation(parse_json_text(read_text_file(path), path));
  const FieldSpec fs = resolve_field(cfg, in.field);
  ReportBuilder rb(cfg.command, cfg.to_json(fs));
  rb.data("presentation", to_json(in));
  with_field(fs, [&](const auto& field) {
    if (in.is_quadratic()) {
      quadratic_presentation_checks(field, cfg, in, rb);
    } else {
      cubic_presentation_checks(field, cfg, in, rb);
    }
  });
  return rb.finish();
}

// ---------------------------------------------------------------------------

json cmd_points(const RunConfig& cfg) {
  const auto& path = single_input(cfg);
  const auto in = parse_points(parse_json_text(read_text_file(path), path));
  const FieldSpec fs = resolve_field(cfg, in.field);
  ReportBuilder rb(cfg.command, cfg.to_json(fs));
  with_field(fs, [&](const auto& field) {
    const int N = cfg.cutoff;
    const auto conf = to_configuration(field, in);
    const auto gp = general_position_check(conf);
    rb.check("general position", verdict_of(gp.general),
             gp.general ? json(nullptr) : json{{"dependent_subset", gp.witness}}, cite::kempf);
    const auto rep = verify_kempf(conf, N);
    const auto& pr = rep.prediction;
    json pw = {{"d", pr.d}, {"span_dim", pr.span_dim}, {"p", pr.p}, {"general_position", pr.general_position}};
    if (!pr.predicted()) pw["reason"] = pr.general_position ? "out_of_range" : "not_general_position";
    rb.check("kempf prediction", pr.predicted() ? Verdict::pass : Verdict::abstain, pw, cite::kempf);
    rb.check("quadratic generation to degree " + std::to_string(std::max(N, 3)), verdict_of(rep.quadratic.quadratic),
             rep.quadratic.quadratic ? json(nullptr) : json{{"failing_degree", rep.quadratic.failing_degree}},
             cite::quadratic);
    rb.check("koszul to degree " + std::to_string(N), diagonal_verdict(rep.koszul), diagonal_witness(rep.koszul),
             cite::koszul);
    Verdict agree = Verdict::not_applicable;
    if (pr.predicted()) {
      agree = rep.koszul.status == DiagonalVerdict::Status::unknown ? Verdict::abstain
                                                                     : verdict_of(rep.koszul.holds() && rep.quadratic.quadratic);
    }
    rb.check("prediction confirmed by direct computation", agree, nullptr, cite::kempf);
    std::vector<std::size_t> trivial(static_cast<std::size_t>(N) + 2, 0);
    trivial[0] = 1;
    rb.check("euler identity", euler_identity_verdict(rep.betti, rep.hilbert, trivial, 0, N));

    json pts = json::array();
    for (const auto& p : conf.points) {
      json row = json::array();
      for (const auto& x : p) row.push_back(field.to_string(x));
      pts.push_back(row);
    }
    rb.data("normalized_points", pts);
    rb.data("hilbert", sizes(rep.hilbert));
    rb.data("ideal_dims", sizes(rep.quadratic.ideal_dims));
    rb.data("betti", betti_to_json(rep.betti));
  });
  return rb.finish();
}

// ---------------------------------------------------------------------------

namespace {

template <class F>
TwistedSectionModel<F> theorem4_model(const F& field, const RunConfig& cfg, int window) {
  if (cfg.inputs.empty()) return build_twisted_model(field, cfg.d, cfg.e, cfg.seed, window);
  const auto& path = single_input(cfg);
  const auto pencil = parse_pencil(parse_json_text(read_text_file(path), path));
  BinaryForm<F> f1{static_cast<int>(pencil.second_form.size()) - 1, {}};
  for (long c : pencil.second_form) f1.coeffs.push_back(field.from_int(c));
  return twisted_model_from_forms(field, pencil.d, pencil.roots, std::move(f1), window);
}

}  // namespace

json cmd_theorem4(const RunConfig& cfg) {
  const FieldSpec fs = resolve_field(cfg, std::nullopt);
  RunConfig echo = cfg;
  json report;
  with_field(fs, [&](const auto& field) {
    const int window = std::max(4, 2 * cfg.depth);
    const auto m = theorem4_model(field, cfg, window);
    echo.d = m.d;
    echo.e = m.e;
    ReportBuilder rb(cfg.command, echo.to_json(fs));

    for (const auto& item : check_exact_triples(m, window)) rb.check(item, cite::exact_triples);
    const auto k = build_k_complex(m, cfg.depth, window);
    rb.check("d∘d = 0", Verdict::pass, {{"depth", cfg.depth}, {"window", window}});

    const auto direct = homology_bigraded(k, cfg.depth, window);
    const auto closed = homology_closed_form(m, cfg.depth, window);
    json mismatch = nullptr;
    for (int p = 0; p <= cfg.depth && mismatch.is_null(); ++p)
      for (int n = 0; n <= window && mismatch.is_null(); ++n) {
        const auto v = direct.at(p, n);
        if (v && *v != *closed.at(p, n)) mismatch = {{"cell", {p, n}}, {"direct", *v}, {"closed_form", *closed.at(p, n)}};
      }
    rb.check("closed-form homology agrees with ranks", mismatch.is_null() ? Verdict::pass : Verdict::fail, mismatch,
             cite::k_homology);

    const auto hyp = check_theorem4_hypotheses(k, divisor_ideal(m, window));
    rb.check(hyp.h0_matches, cite::complex_criterion);
    rb.check(hyp.vanishing, cite::complex_criterion);
    rb.check(hyp.shape, cite::complex_criterion);

    const auto conc = cross_validate_theorem4(k, hyp, cfg.hom_cutoff);
    auto conclusion_witness = [&](const DiagonalVerdict& d) {
      json w = diagonal_witness(d);
      if (!conc.hypotheses_established) {
        if (w.is_null()) w = json::object();
        w["informational"] = true;
        w["label"] = conc.label;
      }
      return w;
    };
    const std::string N = std::to_string(cfg.hom_cutoff);
    rb.check("R koszul to degree " + N, diagonal_verdict(conc.ring_koszul), conclusion_witness(conc.ring_koszul),
             cite::complex_criterion);
    rb.check("A linear resolution to degree " + N, diagonal_verdict(conc.module_linear),
             conclusion_witness(conc.module_linear), cite::complex_criterion);

    const auto t6 = check_theorem6<std::decay_t<decltype(field)>>({0, m.d, 0}, &m);
    rb.data("divisor_criterion", {{"input", {{"g", 0}, {"degL", m.d}, {"h1L", 0}}},
                                  {"divisor_degree", t6.divisor_degree},
                                  {"divisor_series_dim", t6.divisor_series_dim},
                                  {"all_pass", t6.all_pass()},
                                  {"citation", cite::divisor_criterion},
                                  {"items", checklist_to_json(t6.items)}});
    rb.data("model", {{"d", m.d},
                      {"e", m.e},
                      {"roots", m.roots},
                      {"f0", form_json(field, m.f0)},
                      {"f1", form_json(field, m.f1)},
                      {"pencil", {form_json(field, m.p0), form_json(field, m.p1)}},
                      {"base_point_free", !field.is_zero(binary_resultant(field, m.p0, m.p1))}});
    rb.data("homology", homology_to_json(direct));
    rb.data("homology_closed_form", homology_to_json(closed));
    rb.data("conclusions_label", conc.label);
    rb.data("ring_betti", betti_to_json(conc.ring_betti));
    rb.data("module_betti", betti_to_json(conc.module_betti));
    rb.data("module_hilbert", sizes(conc.module_dims));
    report = rb.finish();
  });
  return report;
}

// ---------------------------------------------------------------------------

json cmd_regularity(const RunConfig& cfg) {
  if (cfg.d < 1) throw InputError("--d must be at least 1");
  const FieldSpec fs = resolve_field(cfg, std::nullopt);
  ReportBuilder rb(cfg.command, cfg.to_json(fs));
  with_field(fs, [&](const auto& field) {
    const auto rep = check_theorem8(field, cfg.d, cfg.m, cfg.hom_cutoff);
    rb.check("hypothesis h^1(O(m-d)) = 0", verdict_of(rep.hypothesis), {{"h1", rep.h1_twist}}, cite::regularity);
    const std::string name = "linear resolution to degree " + std::to_string(cfg.hom_cutoff);
    if (rep.linear) {
      rb.check(name, diagonal_verdict(*rep.linear), diagonal_witness(*rep.linear), cite::regularity);
    } else {
      rb.check(name, Verdict::abstain, {{"detail", "hypothesis fails; no conclusion"}}, cite::regularity);
    }
    rb.data("module_dims", sizes(rep.module_dims));
    if (rep.betti) rb.data("betti", betti_to_json(*rep.betti));
  });
  return rb.finish();
}

// ---------------------------------------------------------------------------

json cmd_strata(const RunConfig& cfg) {
  if (cfg.gh_min > cfg.gh_max) throw InputError("--gh-min must not exceed --gh-max");
  if (cfg.i_max < 0) throw InputError("--i-max must be nonnegative");
  const FieldSpec fs = resolve_field(cfg, std::nullopt);
  ReportBuilder rb(cfg.command, cfg.to_json(fs));
  json rows = json::array();
  bool sums = true, v_sums = true, positive = true, symmetric = true, covers = true;
  json exclusions = json::array();
  int admissible_rows = 0;
  for (int g_h = cfg.gh_min; g_h <= cfg.gh_max; ++g_h) {
    for (int i = 0; i <= cfg.i_max; ++i) {
      for (auto kind : {StratumCase::even, StratumCase::odd}) {
        const auto adm = stratum_admissibility(g_h, i, kind);
        json row = {{"g_h", g_h}, {"i", i}, {"case", to_string(kind)}, {"admissible", adm.admissible}};
        if (!adm.admissible) {
          row["violates"] = adm.failing;
          row["genus_exclusion"] = adm.genus_exclusion;
          if (adm.genus_exclusion) exclusions.push_back({g_h, i, to_string(kind)});
          rows.push_back(row);
          continue;
        }
        ++admissible_rows;
        const auto s = stratum_invariants(g_h, i, kind);
        const bool gate = *std::min_element(s.v_type.begin(), s.v_type.end()) - 1 >= 0;
        const int degM = g_h + 2 * i + (kind == StratumCase::even ? 1 : 0);
        const auto cover = double_cover_bookkeeping(g_h, degM);
        sums = sums && s.a + s.b == s.g - 5;
        v_sums = v_sums && s.v_type[0] + s.v_type[1] + s.v_type[2] == s.g - 3;
        positive = positive && std::min(s.a, s.b) >= 1;
        symmetric = symmetric && quadraticity_verdict(s.a, s.b) == quadraticity_verdict(s.b, s.a);
        covers = covers && cover.cross_check == Verdict::pass;
        row["g"] = s.g;
        row["v_type"] = s.v_type;
        row["e_type"] = {s.e_type.first, s.e_type.second};
        row["a_plus_b"] = s.a + s.b;
        row["quadratic"] = to_string(quadraticity_verdict(s.a, s.b));
        row["projectively_normal"] = to_string(projective_normality_verdict(s.a, s.b, gate));
        row["double_cover"] = {{"degM", degM}, {"cross_check", to_string(cover.cross_check)}};
        rows.push_back(row);
      }
    }
  }
  rb.check("a + b = g - 5 on every admissible row", verdict_of(sums), {{"rows", admissible_rows}}, cite::strata);
  rb.check("V type sums to g - 3", verdict_of(v_sums), nullptr, cite::strata);
  const bool grid_has_excluded = cfg.gh_min <= 2 && 2 <= cfg.gh_max && cfg.i_max >= 1;
  const json expected_exclusions = grid_has_excluded ? json::array({json::array({2, 1, "even"})}) : json::array();
  rb.check("genus exclusion only at g_h = 2, i = 1", verdict_of(exclusions == expected_exclusions),
           {{"excluded", exclusions}}, cite::strata);
  rb.check("min(a, b) >= 1 on every admissible row", verdict_of(positive), nullptr, cite::projective_normality);
  rb.check("quadraticity verdict symmetric in (a, b)", verdict_of(symmetric), nullptr, cite::quadraticity);
  rb.check("double cover bookkeeping reproduces every row", verdict_of(covers), nullptr, cite::strata);
  rb.data("rows", rows);
  return rb.finish();
}

// ---------------------------------------------------------------------------

json run_command(const RunConfig& cfg) {
  cfg.validate();
  if (cfg.command == "check-presentation") return cmd_check_presentation(cfg);
  if (cfg.command == "points") return cmd_points(cfg);
  if (cfg.command == "theorem4") return cmd_theorem4(cfg);
  if (cfg.command == "regularity") return cmd_regularity(cfg);
  if (cfg.command == "strata") return cmd_strata(cfg);
  throw InputError("unknown command '" + cfg.command + "'");
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const InputError*>(&e) != nullptr) return 2;
  if (dynamic_cast<const InternalError*>(&e) != nullptr) return 3;
  return 1;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks of Koszul properties for graded algebras, point sets and curves"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  std::string field_text, format_text = "json", output;
  app.add_option("--field", field_text, "rationals or prime:<p> (default prime:32003 or the input's field)");
  app.add_option("--cutoff", cfg.cutoff, "internal degree cutoff N")->capture_default_str();
  app.add_option("--hom-cutoff", cfg.hom_cutoff, "homological cutoff")->capture_default_str();
  app.add_option("--seed", cfg.seed, "64-bit seed for all randomness")->capture_default_str();
  app.add_option("--format", format_text, "json or text")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  app.add_option("--output", output, "write the report to this file instead of stdout");

  auto* pres = app.add_subcommand("check-presentation", "Koszul checks for a presented algebra");
  pres->add_option("file", cfg.inputs, "presentation JSON")->required();
  pres->add_option("--distributivity-degree", cfg.distributivity_degree, "tensor degree of the lattice check")
      ->capture_default_str();
  auto* pts = app.add_subcommand("points", "coordinate ring of a finite point set");
  pts->add_option("file", cfg.inputs, "points JSON")->required();
  auto* t4 = app.add_subcommand("theorem4", "K-complex criterion on a rational normal curve");
  t4->add_option("--d", cfg.d, "degree of L")->capture_default_str();
  t4->add_option("--e", cfg.e, "degree of D")->capture_default_str();
  t4->add_option("--depth", cfg.depth, "homological length of K")->capture_default_str();
  t4->add_option("--pencil", cfg.inputs, "explicit pencil JSON (skips the base-point-free check)");
  auto* reg = app.add_subcommand("regularity", "linear resolution of sections of O(m) over R_L");
  reg->add_option("--d", cfg.d, "degree of L")->capture_default_str();
  reg->add_option("--m", cfg.m, "degree of F = O(m)")->capture_default_str();
  auto* str = app.add_subcommand("strata", "integer invariants of tetragonal strata");
  str->add_option("--gh-min", cfg.gh_min)->capture_default_str();
  str->add_option("--gh-max", cfg.gh_max)->capture_default_str();
  str->add_option("--i-max", cfg.i_max)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  cfg.format = format_text == "text" ? OutputFormat::text : OutputFormat::json;
  if (!output.empty()) cfg.output = output;
  try {
    if (!field_text.empty()) cfg.field = FieldSpec::parse(field_text);
    const auto start = std::chrono::steady_clock::now();
    json report = run_command(cfg);
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    report["wall_time_seconds"] = std::round(elapsed.count() * 1000.0) / 1000.0;
    const std::string text = cfg.format == OutputFormat::json ? report.dump(2) + "\n" : render_text(report);
    if (cfg.output) {
      std::ofstream f(*cfg.output, std::ios::binary);
      if (!f) throw InputError("cannot write '" + *cfg.output + "'");
      f << text;
    } else {
      out << text;
    }
    return 0;
  } catch (const std::exception& e) {
    err << "koszulcheck: " << e.what() << '\n';
    return exit_code_for(e);
  }
}

}  // namespace koszul
