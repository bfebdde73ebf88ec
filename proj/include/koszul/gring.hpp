#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "koszul/algebra.hpp"
#include "koszul/point_config.hpp"
#include "koszul/resolution.hpp"

namespace koszul {

/// Commutative homogeneous polynomial with rational coefficients (field-independent input).
struct HomogeneousForm {
  std::vector<std::pair<std::vector<int>, mpq_class>> terms;

  /// Degree of the form; throws InputError if the terms disagree or the form is empty.
  int degree() const;
};

template <class F>
struct GradedRingModel {
  enum class Kind { presented, rational_normal_curve, point_ring, quotient_by_forms };
  Kind kind = Kind::presented;
  std::string description;
  std::shared_ptr<const GradedAlgebraTable<F>> table;
};

/// k[x_1..x_n]/(forms) degreewise, forms of any positive degree.
template <class F>
GradedAlgebraTable<F> quotient_by_forms_table(const F& field, std::size_t num_vars,
                                              const std::vector<HomogeneousForm>& forms, int N,
                                              std::vector<std::string> names = {});

template <class F>
GradedRingModel<F> model_quotient_by_forms(const F& field, std::size_t num_vars,
                                           const std::vector<HomogeneousForm>& forms, int N,
                                           std::vector<std::string> names = {});

/// R = ⊕ H^0(O(dm)) on P^1 with basis s^{dm−a} t^a (a ascending, s-exponent descending).
template <class F>
GradedRingModel<F> model_rational_normal_curve(const F& field, int d, int N);

/// Coordinate ring S/I(points) degreewise, computed from evaluation ranks.
template <class F>
GradedRingModel<F> model_point_ring(const PointConfiguration<F>& c, int N);

/// The graded ideal (forms) inside a polynomial-ring table, degrees 0..top.
template <class F>
std::vector<SubspaceBasis<F>> ideal_of_forms(const GradedAlgebraTable<F>& poly_ring,
                                             const std::vector<HomogeneousForm>& forms, int top);

// ---------------------------------------------------------------------------
// Binary forms on P^1.

/// Coefficient a multiplies s^{degree−a} t^a.
template <class F>
struct BinaryForm {
  int degree = 0;
  Vec<F> coeffs;
};

template <class F>
BinaryForm<F> binary_monomial(const F& field, int degree, int a);

template <class F>
BinaryForm<F> binary_multiply(const F& field, const BinaryForm<F>& a, const BinaryForm<F>& b);

/// Homogeneous resultant via the Sylvester determinant.
template <class F>
typename F::Elem binary_resultant(const F& field, const BinaryForm<F>& a, const BinaryForm<F>& b);

/// Degree of the greatest common divisor of a nonempty family of nonzero forms.
template <class F>
int binary_gcd_degree(const F& field, const std::vector<BinaryForm<F>>& forms);

struct SurjectivityVerdict {
  bool surjective = false;
  std::size_t image_rank = 0;
  std::size_t cokernel_dim = 0;
};

/// Image of a bilinear map given by the images of all basis pairs (rows, in target coordinates).
template <class F>
SurjectivityVerdict multiplication_surjectivity(const Matrix<F>& pair_images, std::size_t target_dim);

/// V ⊗ H^0(O(k)) → H^0(O(e + k)) for a family V of forms of degree e.
template <class F>
SurjectivityVerdict binary_multiplication_surjectivity(const F& field,
                                                       const std::vector<BinaryForm<F>>& v, int k);

// ---------------------------------------------------------------------------
// Line bundles on P^1 and the regularity criterion.

long long h0_p1(long long k);
long long h1_p1(long long k);

/// M_i = H^0(O(m + d·i)) for 0 ≤ i ≤ top as a module over the degree-d rational normal curve ring.
template <class F>
GradedModuleTable<F> sheaf_module_p1(const GradedRingModel<F>& ring, int d, int m, int top);

struct Theorem8Report {
  int d = 0;
  int m = 0;
  int N = 0;
  long long h1_twist = 0;  // h^1(O(m − d))
  bool hypothesis = false;
  std::vector<std::size_t> module_dims;
  std::optional<BettiTable> betti;
  std::optional<DiagonalVerdict> linear;
};

/// Hypothesis h^1(F(−1)) = h^1(O(m − d)) = 0; when it holds, resolves M over R to
/// homological degree N and reports whether the resolution is linear.
template <class F>
Theorem8Report check_theorem8(const F& field, int d, int m, int N);

}  // namespace koszul
