#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "koszul/algebra.hpp"

namespace koszul {

/// Bigraded numbers β_{i,j} for 0 ≤ i ≤ hom_cutoff and deg_lo ≤ j ≤ deg_hi.
/// Cells whose computation would need data beyond a cutoff are unknown (nullopt).
class BettiTable {
 public:
  BettiTable() = default;
  BettiTable(int hom_cutoff, int deg_lo, int deg_hi);

  int hom_cutoff() const { return hom_cutoff_; }
  int deg_lo() const { return deg_lo_; }
  int deg_hi() const { return deg_hi_; }

  /// β_{i,j}; zero below deg_lo, unknown above deg_hi or beyond hom_cutoff.
  std::optional<std::size_t> at(int i, int j) const;
  void set(int i, int j, std::optional<std::size_t> value);

  bool complete_to(int I, int J) const;
  /// Smallest j with β_{0,j} ≠ 0, if any.
  std::optional<int> generation_degree() const;

  std::string to_string() const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  int hom_cutoff_ = 0;
  int deg_lo_ = 0;
  int deg_hi_ = -1;
  std::vector<std::vector<std::optional<std::size_t>>> cells_;
};

/// Outcome of a "β vanishes off the diagonal" scan.
struct DiagonalVerdict {
  enum class Status { holds, violated, unknown };
  Status status = Status::unknown;
  int i = -1;  // witness cell (violated) or first unknown cell (unknown)
  int j = -1;

  bool holds() const { return status == Status::holds; }
};

/// Scans β_{i, j+shift} for i ≤ N, i ≤ j ≤ N+1 in (i, j) order and reports the
/// first nonzero off-diagonal cell. Cells with j < i are required to vanish too.
DiagonalVerdict scan_off_diagonal(const BettiTable& b, int N, int shift = 0);

/// Graded module over a graded algebra table, stored on the degree window
/// [start_degree, start_degree + dims.size() − 1].
template <class F>
struct GradedModuleTable {
  std::shared_ptr<const GradedAlgebraTable<F>> ring;
  int start_degree = 0;
  std::vector<std::size_t> dims;
  /// action[k] is the matrix of A_1 ⊗ M_{start+k} → M_{start+k+1}.
  std::vector<Matrix<F>> action;

  int end_degree() const { return start_degree + static_cast<int>(dims.size()) - 1; }
  std::size_t dim(int j) const {
    const int k = j - start_degree;
    return k >= 0 && k < static_cast<int>(dims.size()) ? dims[static_cast<std::size_t>(k)] : 0;
  }
  /// x_gen · v for v ∈ M_j.
  Vec<F> act(std::size_t gen, int j, std::span<const typename F::Elem> v) const;
};

/// R/J for a graded ideal given degreewise (ideal[j] ⊆ R_j, 0 ≤ j ≤ top).
template <class F>
GradedModuleTable<F> quotient_module(std::shared_ptr<const GradedAlgebraTable<F>> ring,
                                     const std::vector<SubspaceBasis<F>>& ideal);

/// The ring as a module over itself, on degrees 0..cutoff.
template <class F>
GradedModuleTable<F> ring_module(std::shared_ptr<const GradedAlgebraTable<F>> ring);

/// The residue field k = R/R_+ on degrees 0..top.
template <class F>
GradedModuleTable<F> trivial_module(std::shared_ptr<const GradedAlgebraTable<F>> ring, int top);

/// Checks x_i·(x_j·v) against (x_i x_j)·v on every basis element of the window.
template <class F>
bool check_module_associativity(const GradedModuleTable<F>& m);

template <class F>
struct Resolution {
  std::shared_ptr<const GradedAlgebraTable<F>> ring;
  BettiTable betti;
  /// generator_degrees[k][g] is the degree of the g-th generator of F_k.
  std::vector<std::vector<int>> generator_degrees;
  /// Image of each generator of F_k in (F_{k−1})_deg (or in M_deg for k = 0), in the
  /// basis of pairs (generator of F_{k−1}, ring basis element) ordered generator-major.
  std::vector<std::vector<Vec<F>>> generator_images;
};

/// Truncated minimal graded free resolution: homological degrees ≤ I, internal degrees ≤ J.
template <class F>
Resolution<F> minimal_free_resolution(const GradedModuleTable<F>& m, int I, int J);

/// True if no generator image has a component on a generator of the same degree.
template <class F>
bool resolution_is_minimal(const Resolution<F>& r);

/// β_{i,j} = dim Tor_i^A(k,k)_j, for i ≤ I and j ≤ J.
template <class F>
BettiTable betti_trivial_module(std::shared_ptr<const GradedAlgebraTable<F>> t, int I, int J);

/// Koszul to degree N: β_{i,j}(k) = 0 for i ≠ j, i ≤ N, j ≤ N+1. Requires cutoff ≥ N+1;
/// otherwise the verdict is unknown.
template <class F>
DiagonalVerdict is_koszul_to(std::shared_ptr<const GradedAlgebraTable<F>> t, int N);

/// Linear resolution to homological degree N after shifting the generation degree to 0.
DiagonalVerdict check_linear_resolution(const BettiTable& b, int N);

/// Σ_{i,m} (−1)^i β_{i,m} h_{j−m} for deg_lo ≤ j ≤ top, where h is the ring's Hilbert
/// function. Equals dim M_j whenever every cell it needs is known (nullopt otherwise).
std::vector<std::optional<long long>> euler_characteristic(const BettiTable& b,
                                            const std::vector<std::size_t>& ring_hilbert,
                                            int top);

}  // namespace koszul
