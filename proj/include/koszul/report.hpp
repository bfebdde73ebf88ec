#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "koszul/curvecomplex.hpp"
#include "koszul/resolution.hpp"
#include "koszul/verdict.hpp"

namespace koszul {

inline constexpr const char* kToolName = "koszulcheck";
inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr int kReportSchemaVersion = 1;

/// Ordered report entries: checks appear in the order they are added.
class ReportBuilder {
 public:
  ReportBuilder(std::string command, nlohmann::json config);

  /// Adds a check entry; `witness` may be null.
  void check(const std::string& name, Verdict verdict, nlohmann::json witness = nullptr,
             const std::string& citation = "");
  void check(const ChecklistItem& item, const std::string& citation = "");
  void data(const std::string& key, nlohmann::json value);

  nlohmann::json finish() const;

 private:
  std::string command_;
  nlohmann::json config_;
  nlohmann::json checks_ = nlohmann::json::array();
  nlohmann::json data_ = nlohmann::json::object();
};

nlohmann::json betti_to_json(const BettiTable& b);
nlohmann::json homology_to_json(const HomologyTable& h);
nlohmann::json checklist_to_json(const std::vector<ChecklistItem>& items);

/// Pass if the scan holds, fail with the witness cell if violated, abstain if unknown.
Verdict diagonal_verdict(const DiagonalVerdict& d);
nlohmann::json diagonal_witness(const DiagonalVerdict& d);

/// Compares the Euler characteristic of a Betti table against the module's Hilbert function
/// on every degree whose cells are all known.
Verdict euler_identity_verdict(const BettiTable& b, const std::vector<std::size_t>& ring_hilbert,
                               const std::vector<std::size_t>& module_dims, int start_degree, int top);

/// Human-readable rendering of a report document.
std::string render_text(const nlohmann::json& report);

/// Citation strings attached to report entries.
namespace cite {
inline constexpr const char* koszul = "Koszul algebra: Ext^n(k, k(-m)) = 0 for n != m";
inline constexpr const char* duality = "Hilbert series duality H_A(t) H_{A!}(-t) = 1 for Koszul algebras";
inline constexpr const char* quadratic = "Koszul algebras are quadratic";
inline constexpr const char* distributivity = "Koszulness via distributivity of the lattice generated by the relations";
inline constexpr const char* kempf =
    "Kempf: d points in general position spanning P^(d-p) with p <= d/2 have Koszul coordinate ring";
inline constexpr const char* complex_criterion =
    "Complex criterion: H_0(K) = A and H_p(K)_j = 0 for p >= 1, j > p+1 imply R Koszul and A linear";
inline constexpr const char* exact_triples =
    "Exact triples 0 -> O(-D) -> V (x) O -> O(D) -> 0 and 0 -> L^-1(D) -> U (x) O -> L(-D) -> 0";
inline constexpr const char* k_homology =
    "Homology of K: H_{2k+1}(K)_n = coker(V (x) H^0(L^(n-2k-2)) -> H^0(L^(n-2k-2)(D)))";
inline constexpr const char* divisor_criterion =
    "Divisor criterion: D of degree deg L - g - 1 + 2h^1(L) with h^1(L(D)) = h^1(L^2(-D)) = 0";
inline constexpr const char* regularity =
    "Regularity criterion: h^1(F (x) L^-1) = 0 gives a linear resolution of the sections module";
inline constexpr const char* strata =
    "Tetragonal strata: V of type (g_h-1, g_h-1+i, g_h-1+i) or (g_h-1, g_h-2+i, g_h-1+i), a + b = g - 5";
inline constexpr const char* quadraticity = "Scroll criterion: quadratic iff a, b >= 2";
inline constexpr const char* projective_normality = "Scroll criterion: projectively normal iff a, b >= 1 when h^0(2T) = 3";
}  // namespace cite

}  // namespace koszul
