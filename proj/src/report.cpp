#include "koszul/report.hpp"

#include <sstream>

namespace koszul {

using nlohmann::json;

ReportBuilder::ReportBuilder(std::string command, json config)
    : command_(std::move(command)), config_(std::move(config)) {}

void ReportBuilder::check(const std::string& name, Verdict verdict, json witness, const std::string& citation) {
  json entry = {{"name", name}, {"verdict", to_string(verdict)}};
  entry["witness"] = std::move(witness);
  if (!citation.empty()) entry["citation"] = citation;
  checks_.push_back(std::move(entry));
}

void ReportBuilder::check(const ChecklistItem& item, const std::string& citation) {
  check(item.name, item.verdict, item.detail.empty() ? json(nullptr) : json{{"detail", item.detail}}, citation);
}

void ReportBuilder::data(const std::string& key, json value) { data_[key] = std::move(value); }

json ReportBuilder::finish() const {
  return {{"tool", kToolName},
          {"version", kToolVersion},
          {"schema_version", kReportSchemaVersion},
          {"command", command_},
          {"config", config_},
          {"checks", checks_},
          {"data", data_}};
}

json betti_to_json(const BettiTable& b) {
  json cells = json::array();
  for (int i = 0; i <= b.hom_cutoff(); ++i) {
    json row = json::array();
    for (int j = b.deg_lo(); j <= b.deg_hi(); ++j) {
      const auto v = b.at(i, j);
      row.push_back(v ? json(*v) : json(nullptr));
    }
    cells.push_back(std::move(row));
  }
  return {{"hom_cutoff", b.hom_cutoff()}, {"deg_lo", b.deg_lo()}, {"deg_hi", b.deg_hi()}, {"cells", cells}};
}

json homology_to_json(const HomologyTable& h) {
  json cells = json::array();
  for (int p = 0; p <= h.p_max; ++p) {
    json row = json::array();
    for (int n = 0; n <= h.n_max; ++n) {
      const auto v = h.at(p, n);
      row.push_back(v ? json(*v) : json(nullptr));
    }
    cells.push_back(std::move(row));
  }
  return {{"p_max", h.p_max}, {"n_max", h.n_max}, {"cells", cells}};
}

json checklist_to_json(const std::vector<ChecklistItem>& items) {
  json out = json::array();
  for (const auto& i : items) out.push_back({{"name", i.name}, {"verdict", to_string(i.verdict)}, {"detail", i.detail}});
  return out;
}

Verdict diagonal_verdict(const DiagonalVerdict& d) {
  switch (d.status) {
    case DiagonalVerdict::Status::holds: return Verdict::pass;
    case DiagonalVerdict::Status::violated: return Verdict::fail;
    case DiagonalVerdict::Status::unknown: return Verdict::abstain;
  }
  return Verdict::abstain;
}

json diagonal_witness(const DiagonalVerdict& d) {
  if (d.status == DiagonalVerdict::Status::holds) return nullptr;
  const char* key = d.status == DiagonalVerdict::Status::violated ? "nonzero_cell" : "unknown_cell";
  return {{key, {d.i, d.j}}};
}

Verdict euler_identity_verdict(const BettiTable& b, const std::vector<std::size_t>& ring_hilbert,
                               const std::vector<std::size_t>& module_dims, int start_degree, int top) {
  const auto chi = euler_characteristic(b, ring_hilbert, top);
  bool any = false;
  for (int j = b.deg_lo(); j <= top; ++j) {
    const auto k = static_cast<std::size_t>(j - b.deg_lo());
    if (k >= chi.size() || !chi[k]) continue;
    const int idx = j - start_degree;
    const long long expected =
        idx >= 0 && idx < static_cast<int>(module_dims.size()) ? static_cast<long long>(module_dims[static_cast<std::size_t>(idx)]) : 0;
    if (*chi[k] != expected) return Verdict::fail;
    any = true;
  }
  return any ? Verdict::pass : Verdict::abstain;
}

std::string render_text(const json& report) {
  std::ostringstream os;
  os << report.value("tool", "") << ' ' << report.value("version", "") << " — " << report.value("command", "") << '\n';
  if (report.contains("config")) {
    const auto& c = report["config"];
    for (auto it = c.begin(); it != c.end(); ++it) os << "  " << it.key() << ": " << it.value().dump() << '\n';
  }
  os << "checks:\n";
  for (const auto& c : report["checks"]) {
    os << "  [" << c["verdict"].get<std::string>() << "] " << c["name"].get<std::string>();
    if (!c["witness"].is_null()) os << "  " << c["witness"].dump();
    os << '\n';
    if (c.contains("citation")) os << "      cites: " << c["citation"].get<std::string>() << '\n';
  }
  if (report.contains("data")) {
    os << "data:\n";
    const auto& d = report["data"];
    for (auto it = d.begin(); it != d.end(); ++it) os << "  " << it.key() << ": " << it.value().dump() << '\n';
  }
  if (report.contains("wall_time_seconds")) os << "wall time: " << report["wall_time_seconds"].dump() << " s\n";
  return os.str();
}

}  // namespace koszul
