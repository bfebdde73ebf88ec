#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

#include "koszul/field.hpp"
#include "koszul/gring.hpp"
#include "koszul/point_config.hpp"
#include "koszul/quadalg.hpp"

namespace koszul {

/// One term of a relation: coefficient times the word (ordered for noncommutative
/// presentations, a monomial for commutative ones) in generator indices.
struct RelationTerm {
  std::vector<std::size_t> word;
  mpq_class coefficient;
};

struct PresentationInput {
  std::optional<FieldSpec> field;
  std::vector<std::string> generators;
  bool commutative = false;
  std::vector<std::vector<RelationTerm>> relations;

  /// Common degree of every relation (throws InputError on inhomogeneous relations).
  std::vector<int> relation_degrees() const;
  bool is_quadratic() const;
};

struct PointsInput {
  std::optional<FieldSpec> field;
  int ambient_dim = 0;
  std::vector<std::vector<mpq_class>> points;
};

/// Explicit twisted-section data: f0 = Π (s − root·t) and the second pencil form.
struct PencilInput {
  int d = 0;
  std::vector<long> roots;
  std::vector<long> second_form;  // coefficient a multiplies s^{e−a} t^a
};

/// Parses JSON text; syntax errors report line and column, structural errors the field path.
nlohmann::json parse_json_text(std::string_view text, const std::string& source);
std::string read_text_file(const std::string& path);

PresentationInput parse_presentation(const nlohmann::json& doc);
PointsInput parse_points(const nlohmann::json& doc);
PencilInput parse_pencil(const nlohmann::json& doc);

nlohmann::json to_json(const PresentationInput& p);
nlohmann::json to_json(const PointsInput& p);

/// Quadratic presentation (all relations of degree 2).
template <class F>
QuadraticPresentation<F> to_quadratic_presentation(const F& field, const PresentationInput& in);

/// Commutative relations as forms in the generators.
std::vector<HomogeneousForm> to_forms(const PresentationInput& in);

template <class F>
PointConfiguration<F> to_configuration(const F& field, const PointsInput& in);

}  // namespace koszul
