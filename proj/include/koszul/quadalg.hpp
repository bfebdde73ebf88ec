#pragma once

#include <memory>
#include <string>
#include <vector>

#include "koszul/algebra.hpp"
#include "koszul/resolution.hpp"

namespace koszul {

/// Generators V and a relation space R ⊆ V⊗V (coordinate i·n + j is e_i⊗e_j).
/// Commutative presentations store every commutator in R as well.
template <class F>
struct QuadraticPresentation {
  F field;
  std::vector<std::string> generators;
  bool commutative = false;
  SubspaceBasis<F> relations;

  std::size_t num_generators() const { return generators.size(); }
};

/// Default generator names: x, y, z, w for up to four generators, x1..xn otherwise.
std::vector<std::string> default_generator_names(std::size_t n);

/// Rows e_i⊗e_j − e_j⊗e_i for i < j.
template <class F>
Matrix<F> commutator_rows(const F& field, std::size_t n);

/// Validates the names and, when `commutative`, adds all commutators to the relations.
template <class F>
QuadraticPresentation<F> make_presentation(const F& field, std::vector<std::string> generators,
                                           bool commutative, const Matrix<F>& relation_rows);

template <class F>
QuadraticPresentation<F> symmetric_presentation(const F& field, std::size_t n);

/// Relations e_i⊗e_j + e_j⊗e_i (i < j) and e_i⊗e_i.
template <class F>
QuadraticPresentation<F> exterior_presentation(const F& field, std::size_t n);

template <class F>
QuadraticPresentation<F> free_presentation(const F& field, std::size_t n);

/// A_m = T^m(V) / Σ V^{⊗i} ⊗ R ⊗ V^{⊗(m−2−i)} for m ≤ N.
template <class F>
GradedAlgebraTable<F> expand_table(const QuadraticPresentation<F>& p, int N);

template <class F>
std::vector<std::size_t> hilbert_function(const GradedAlgebraTable<F>& t) {
  return t.dims;
}

/// Noncommutative presentation with relation space R^⊥ (dual generator names get a '*').
template <class F>
QuadraticPresentation<F> quadratic_dual(const QuadraticPresentation<F>& p);

struct NumericVerdict {
  bool consistent = true;
  int failing_degree = -1;
  std::vector<long long> coefficients;  // of H_A(t)·H_{A!}(−t)
  std::vector<std::size_t> hilbert;
  std::vector<std::size_t> dual_hilbert;
};

/// H_A(t) · H_{A!}(−t) ≡ 1 through t^N.
template <class F>
NumericVerdict koszul_numeric_check(const QuadraticPresentation<F>& p, int N);

struct DistributivityVerdict {
  enum class Status { distributive, not_distributive, abstain };
  Status status = Status::abstain;
  std::size_t lattice_size = 0;
  std::string detail;
};

struct DistributivityBudget {
  std::size_t max_elements = 10000;     // lattice elements
  std::size_t max_tensor_dim = 1024;    // dim V^{⊗n}
  std::size_t max_pair_operations = 400000;
};

/// Checks that R_i = V^{⊗(i−1)} ⊗ R ⊗ V^{⊗(n−i−1)}, 1 ≤ i ≤ n−1, generate a
/// distributive lattice of subspaces of V^{⊗n}. The closure under sum and
/// intersection is enumerated exhaustively; the check abstains when a budget
/// is exceeded.
template <class F>
DistributivityVerdict distributivity_check(const QuadraticPresentation<F>& p, int n,
                                           const DistributivityBudget& budget = {});

}  // namespace koszul
