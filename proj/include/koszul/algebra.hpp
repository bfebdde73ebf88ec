#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "koszul/subspace.hpp"

namespace koszul {

/// Basis element b of A_m written as x_gen · (basis element `parent` of A_{m-1}).
struct Factor {
  std::size_t gen = 0;
  std::size_t parent = 0;
};

/// Degreewise model of a graded algebra generated in degree 1, truncated at `cutoff`.
///
/// mult[m] is the matrix of A_1 ⊗ A_m → A_{m+1}; row gen·dim(A_m) + b holds the
/// coordinates of x_gen · b. Every basis element of positive degree carries a
/// left factorization, so products of arbitrary elements can be assembled
/// from the multiplication-by-generator maps alone.
template <class F>
struct GradedAlgebraTable {
  using Elem = typename F::Elem;

  F field;
  int cutoff = 0;
  std::vector<std::size_t> dims;
  std::vector<Matrix<F>> mult;
  std::vector<std::vector<Factor>> factors;
  /// Images of the ambient variables in A_1 (num_vars × dim A_1).
  Matrix<F> variables;
  std::vector<std::string> generator_names;

  explicit GradedAlgebraTable(F f) : field(std::move(f)), variables(field) {}

  std::size_t num_generators() const { return dims.size() > 1 ? dims[1] : 0; }
  std::size_t dim(int m) const {
    return m >= 0 && m < static_cast<int>(dims.size()) ? dims[static_cast<std::size_t>(m)] : 0;
  }

  std::span<const Elem> mult_row(std::size_t gen, int m, std::size_t b) const {
    const auto mm = static_cast<std::size_t>(m);
    return mult[mm].row(gen * dims[mm] + b);
  }

  /// x_gen · v for v ∈ A_m.
  Vec<F> left_multiply(std::size_t gen, int m, std::span<const Elem> v) const;

  /// a · c for a ∈ A_m and c ∈ A_k (requires m + k ≤ cutoff).
  Vec<F> product(int m, std::span<const Elem> a, int k, std::span<const Elem> c) const;

  Vec<F> basis_vector(int m, std::size_t b) const;

  /// Class of the word x_{w_1} x_{w_2} ... in A_{|w|}, indices into the A_1 basis.
  Vec<F> word(const std::vector<std::size_t>& w) const;

  /// Class of a monomial in the ambient variables given by exponents.
  Vec<F> monomial(const std::vector<int>& exponents) const;

  /// Name of basis element b of A_m as a word in the generator names.
  std::string label(int m, std::size_t b) const;
};

/// Relations in degree m, as rows in A_1 ⊗ A_{m-1} coordinates (index gen·dim A_{m-1} + b).
/// For m = 1 the coordinates are the ambient variables.
template <class F>
using RelationFn = std::function<Matrix<F>(int m, const GradedAlgebraTable<F>& partial)>;

/// Builds A_m = (A_1 ⊗ A_{m-1}) / Q_m degree by degree. The normal basis of A_m
/// consists of the non-pivot columns of the reduced Q_m.
template <class F>
GradedAlgebraTable<F> build_quotient_table(const F& field, std::size_t num_vars, int cutoff,
                                           const RelationFn<F>& relations,
                                           std::vector<std::string> variable_names = {});

/// Exhaustively checks (a·b)·c = a·(b·c) on basis triples of total degree ≤ max_degree.
template <class F>
bool check_associativity(const GradedAlgebraTable<F>& t, int max_degree);

/// Coefficients of H_A(t) · H_B(−t) through t^N.
std::vector<long long> duality_product(const std::vector<std::size_t>& ha,
                                       const std::vector<std::size_t>& hb, int N);

}  // namespace koszul
