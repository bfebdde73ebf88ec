#include "koszul/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace koszul {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw InputError(path + ": " + message);
}

const json& member(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) fail(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(path, std::string("missing field '") + key + "'");
  return *it;
}

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> allowed, const std::string& path) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || it.key() == a;
    if (!ok) fail(path, "unknown field '" + it.key() + "'");
  }
}

mpq_class rational_value(const json& v, const std::string& path) {
  if (v.is_number_integer()) return mpq_class(std::to_string(v.get<long long>()));
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const InputError& e) {
      fail(path, e.what());
    }
  }
  fail(path, "expected an integer or a rational string such as \"-3/4\"");
}

long integer_value(const json& v, const std::string& path) {
  if (!v.is_number_integer()) fail(path, "expected an integer");
  return static_cast<long>(v.get<long long>());
}

std::optional<FieldSpec> optional_field(const json& doc, const std::string& path) {
  auto it = doc.find("field");
  if (it == doc.end()) return std::nullopt;
  if (!it->is_string()) fail(path + ".field", "expected a string");
  try {
    return FieldSpec::parse(it->get<std::string>());
  } catch (const InputError& e) {
    fail(path + ".field", e.what());
  }
}

}  // namespace

namespace {

// nlohmann messages end in "...: <reason>"; keep only the reason.
std::string parse_error_reason(std::string_view what) {
  const auto pos = what.rfind(": ");
  return pos == std::string_view::npos ? std::string() : " (" + std::string(what.substr(pos + 2)) + ")";
}

}  // namespace

json parse_json_text(std::string_view text, const std::string& source) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::size_t line = 1, column = 1;
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t k = 0; k < end; ++k) {
      if (text[k] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw InputError(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": invalid JSON" + parse_error_reason(e.what()));
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<int> PresentationInput::relation_degrees() const {
  std::vector<int> out;
  for (std::size_t r = 0; r < relations.size(); ++r) {
    if (relations[r].empty()) throw InputError("relations[" + std::to_string(r) + "]: empty relation");
    const auto deg = relations[r].front().word.size();
    for (const auto& t : relations[r])
      if (t.word.size() != deg) throw InputError("relations[" + std::to_string(r) + "]: terms of different degrees");
    out.push_back(static_cast<int>(deg));
  }
  return out;
}

bool PresentationInput::is_quadratic() const {
  for (int d : relation_degrees())
    if (d != 2) return false;
  return true;
}

PresentationInput parse_presentation(const json& doc) {
  const std::string root = "presentation";
  if (!doc.is_object()) fail(root, "expected an object");
  reject_unknown_keys(doc, {"field", "generators", "commutative", "relations", "description"}, root);
  PresentationInput p;
  p.field = optional_field(doc, root);
  const auto& gens = member(doc, "generators", root);
  if (!gens.is_array() || gens.empty()) fail(root + ".generators", "expected a nonempty array of names");
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const std::string gp = root + ".generators[" + std::to_string(k) + "]";
    if (!gens[k].is_string()) fail(gp, "expected a string");
    const auto name = gens[k].get<std::string>();
    if (std::find(p.generators.begin(), p.generators.end(), name) != p.generators.end()) fail(gp, "duplicate generator");
    p.generators.push_back(name);
  }
  const auto& comm = member(doc, "commutative", root);
  if (!comm.is_boolean()) fail(root + ".commutative", "expected true or false");
  p.commutative = comm.get<bool>();
  const auto& rels = member(doc, "relations", root);
  if (!rels.is_array()) fail(root + ".relations", "expected an array");
  for (std::size_t r = 0; r < rels.size(); ++r) {
    const std::string rp = root + ".relations[" + std::to_string(r) + "]";
    if (!rels[r].is_array() || rels[r].empty()) fail(rp, "expected a nonempty array of terms");
    std::vector<RelationTerm> terms;
    for (std::size_t t = 0; t < rels[r].size(); ++t) {
      const std::string tp = rp + "[" + std::to_string(t) + "]";
      const auto& term = rels[r][t];
      if (!term.is_object()) fail(tp, "expected an object with 'monomial' and 'coefficient'");
      reject_unknown_keys(term, {"monomial", "coefficient"}, tp);
      const auto& mono = member(term, "monomial", tp);
      if (!mono.is_array() || mono.empty()) fail(tp + ".monomial", "expected a nonempty array of generator names");
      RelationTerm rt;
      for (const auto& name : mono) {
        if (!name.is_string()) fail(tp + ".monomial", "expected generator names");
        const auto it = std::find(p.generators.begin(), p.generators.end(), name.get<std::string>());
        if (it == p.generators.end()) fail(tp + ".monomial", "unknown generator '" + name.get<std::string>() + "'");
        rt.word.push_back(static_cast<std::size_t>(it - p.generators.begin()));
      }
      rt.coefficient = rational_value(member(term, "coefficient", tp), tp + ".coefficient");
      terms.push_back(std::move(rt));
    }
    p.relations.push_back(std::move(terms));
  }
  for (int d : p.relation_degrees()) {
    if (d < 2) throw InputError(root + ": relations must have degree ≥ 2");
    if (d > 2 && !p.commutative) throw InputError(root + ": noncommutative relations must be quadratic");
  }
  return p;
}

PointsInput parse_points(const json& doc) {
  const std::string root = "points";
  if (!doc.is_object()) fail(root, "expected an object");
  reject_unknown_keys(doc, {"field", "ambient_dim", "points", "description"}, root);
  PointsInput p;
  p.field = optional_field(doc, root);
  p.ambient_dim = static_cast<int>(integer_value(member(doc, "ambient_dim", root), root + ".ambient_dim"));
  if (p.ambient_dim < 1) fail(root + ".ambient_dim", "must be at least 1");
  const auto& pts = member(doc, "points", root);
  if (!pts.is_array() || pts.empty()) fail(root + ".points", "expected a nonempty array of coordinate rows");
  for (std::size_t k = 0; k < pts.size(); ++k) {
    const std::string pp = root + ".points[" + std::to_string(k) + "]";
    if (!pts[k].is_array()) fail(pp, "expected an array of coordinates");
    if (pts[k].size() != static_cast<std::size_t>(p.ambient_dim) + 1) {
      fail(pp, "expected " + std::to_string(p.ambient_dim + 1) + " coordinates");
    }
    std::vector<mpq_class> row;
    for (std::size_t c = 0; c < pts[k].size(); ++c) row.push_back(rational_value(pts[k][c], pp + "[" + std::to_string(c) + "]"));
    p.points.push_back(std::move(row));
  }
  return p;
}

PencilInput parse_pencil(const json& doc) {
  const std::string root = "pencil";
  if (!doc.is_object()) fail(root, "expected an object");
  reject_unknown_keys(doc, {"d", "roots", "second_form", "description"}, root);
  PencilInput p;
  p.d = static_cast<int>(integer_value(member(doc, "d", root), root + ".d"));
  const auto& roots = member(doc, "roots", root);
  if (!roots.is_array()) fail(root + ".roots", "expected an array of integers");
  for (std::size_t k = 0; k < roots.size(); ++k) p.roots.push_back(integer_value(roots[k], root + ".roots[" + std::to_string(k) + "]"));
  const auto& form = member(doc, "second_form", root);
  if (!form.is_array()) fail(root + ".second_form", "expected an array of integers");
  for (std::size_t k = 0; k < form.size(); ++k) {
    p.second_form.push_back(integer_value(form[k], root + ".second_form[" + std::to_string(k) + "]"));
  }
  return p;
}

json to_json(const PresentationInput& p) {
  json doc;
  if (p.field) doc["field"] = p.field->to_string();
  doc["generators"] = p.generators;
  doc["commutative"] = p.commutative;
  json rels = json::array();
  for (const auto& r : p.relations) {
    json terms = json::array();
    for (const auto& t : r) {
      json mono = json::array();
      for (auto g : t.word) mono.push_back(p.generators[g]);
      terms.push_back({{"monomial", mono}, {"coefficient", t.coefficient.get_str()}});
    }
    rels.push_back(terms);
  }
  doc["relations"] = rels;
  return doc;
}

json to_json(const PointsInput& p) {
  json doc;
  if (p.field) doc["field"] = p.field->to_string();
  doc["ambient_dim"] = p.ambient_dim;
  json pts = json::array();
  for (const auto& row : p.points) {
    json r = json::array();
    for (const auto& x : row) r.push_back(x.get_str());
    pts.push_back(r);
  }
  doc["points"] = pts;
  return doc;
}

template <class F>
QuadraticPresentation<F> to_quadratic_presentation(const F& field, const PresentationInput& in) {
  if (!in.is_quadratic()) throw InputError("presentation is not quadratic");
  const std::size_t n = in.generators.size();
  Matrix<F> rows(field, 0, n * n);
  for (const auto& r : in.relations) {
    Vec<F> v(n * n, field.zero());
    for (const auto& t : r) {
      auto& x = v[t.word[0] * n + t.word[1]];
      x = field.add(x, field.from_rational(t.coefficient));
    }
    rows.append_row(v);
  }
  return make_presentation(field, in.generators, in.commutative, rows);
}

std::vector<HomogeneousForm> to_forms(const PresentationInput& in) {
  if (!in.commutative) throw InputError("forms are only defined for commutative presentations");
  std::vector<HomogeneousForm> out;
  for (const auto& r : in.relations) {
    HomogeneousForm f;
    for (const auto& t : r) {
      std::vector<int> e(in.generators.size(), 0);
      for (auto g : t.word) ++e[g];
      f.terms.emplace_back(std::move(e), t.coefficient);
    }
    out.push_back(std::move(f));
  }
  return out;
}

template <class F>
PointConfiguration<F> to_configuration(const F& field, const PointsInput& in) {
  std::vector<Vec<F>> pts;
  for (const auto& row : in.points) {
    Vec<F> v;
    for (const auto& x : row) v.push_back(field.from_rational(x));
    pts.push_back(std::move(v));
  }
  return make_configuration(field, in.ambient_dim, std::move(pts));
}

#define KOSZUL_INSTANTIATE_IO(F)                                                                  \
  template QuadraticPresentation<F> to_quadratic_presentation(const F&, const PresentationInput&); \
  template PointConfiguration<F> to_configuration(const F&, const PointsInput&);

KOSZUL_INSTANTIATE_IO(PrimeField)
KOSZUL_INSTANTIATE_IO(RationalField)

}  // namespace koszul
