#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "koszul/gring.hpp"
#include "koszul/point_config.hpp"
#include "koszul/resolution.hpp"

namespace koszul {

/// Exponent vectors of degree n in `num_vars` variables, lexicographically descending
/// (x_0^n first). This is the coordinate order of Sym^n used below.
std::vector<std::vector<int>> monomial_basis(std::size_t num_vars, int n);

/// Evaluation matrix Sym^n → k^d (rows = monomials, columns = points).
template <class F>
Matrix<F> evaluation_matrix(const PointConfiguration<F>& c, int n);

/// I_n: forms of degree n vanishing on every point, in Sym^n monomial coordinates.
template <class F>
SubspaceBasis<F> ideal_truncation(const PointConfiguration<F>& c, int n);

/// Projective dimension of the linear span of the points.
template <class F>
int span_dimension(const PointConfiguration<F>& c);

struct GeneralPositionVerdict {
  bool general = true;
  int span_dim = -1;
  std::vector<std::size_t> witness;  // 1-based indices of the first dependent subset
};

/// Every subset of size ≤ span_dim + 1 is linearly independent. Subsets are scanned by
/// size, then lexicographically.
template <class F>
GeneralPositionVerdict general_position_check(const PointConfiguration<F>& c);

struct IndependentConditionsVerdict {
  bool independent = true;
  std::vector<std::size_t> witness;  // 1-based indices of the first failing subset
};

/// For every k-subset of the points, the forms (given in Sym^n coordinates) evaluate
/// onto k^k.
template <class F>
IndependentConditionsVerdict impose_independent_conditions(const PointConfiguration<F>& c,
                                                           const SubspaceBasis<F>& forms, int n,
                                                           std::size_t k);

struct QuadraticGenerationVerdict {
  bool quadratic = true;
  int failing_degree = -1;
  std::vector<std::size_t> ideal_dims;  // dim I_n for 0 ≤ n ≤ N
};

/// Sym^{n−2} · I_2 = I_n for 3 ≤ n ≤ N.
template <class F>
QuadraticGenerationVerdict quadratic_generation_check(const PointConfiguration<F>& c, int N);

struct KempfVerdict {
  enum class Status { predicted_koszul, out_of_range };
  std::size_t d = 0;
  int span_dim = 0;
  int p = 0;
  bool general_position = false;
  Status status = Status::out_of_range;

  bool predicted() const { return status == Status::predicted_koszul; }
};

/// d points in general position spanning P^s, s = d − p, are predicted Koszul when 2p ≤ d.
/// A single point is a polynomial ring in one variable and is predicted with p = 0.
template <class F>
KempfVerdict kempf_predict(const PointConfiguration<F>& c);

struct KempfReport {
  KempfVerdict prediction;
  QuadraticGenerationVerdict quadratic;
  DiagonalVerdict koszul;
  std::vector<std::size_t> hilbert;
  BettiTable betti;
};

/// Builds the point ring to degree N + 1, checks quadratic generation to N and
/// Koszulness to N directly, alongside the prediction.
template <class F>
KempfReport verify_kempf(const PointConfiguration<F>& c, int N);

/// Integer coordinates drawn from the seed; retries until the points are distinct and in
/// general position in P^span. Throws InputError if that cannot be achieved.
std::vector<std::vector<long>> random_point_coordinates(std::size_t d, int span, std::uint64_t seed);

template <class F>
PointConfiguration<F> configuration_from_integers(const F& field, int ambient_dim,
                                                  const std::vector<std::vector<long>>& coords);

template <class F>
PointConfiguration<F> random_configuration(const F& field, std::size_t d, int span, std::uint64_t seed);

}  // namespace koszul
