#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "koszul/gring.hpp"
#include "koszul/rng.hpp"
#include "koszul/verdict.hpp"

namespace koszul {

/// Genus-0 model of a very ample L = O(d) on P^1 with an effective reduced divisor D of
/// degree e cut out by f0.
///
/// The pencil (p0, p1) = (f0·s^c, f1·t^c) ⊆ H^0(O(d−1)), c = d−1−e, is base-point-free;
/// for e = d−1 it is V = span{f0, f1} itself. U = f0 · H^0(O(d−e)) ⊆ R_1.
template <class F>
struct TwistedSectionModel {
  F field;
  int d = 0;
  int e = 0;
  std::uint64_t seed = 0;
  std::vector<long> roots;  // f0 = Π (s − root·t)
  BinaryForm<F> f0;
  BinaryForm<F> f1;
  BinaryForm<F> p0;
  BinaryForm<F> p1;
  /// Rows give the basis of U in terms of f0·s^{d−e−a}t^a (identity unless rebased).
  Matrix<F> u_change;
  GradedRingModel<F> ring;
  int window = 0;

  explicit TwistedSectionModel(F f) : field(std::move(f)), u_change(field) {}

  std::size_t dim_u() const { return static_cast<std::size_t>(d - e) + 1; }
  std::size_t dim_v() const { return 2; }
  /// Basis of U ⊆ R_1 as binary forms of degree d.
  std::vector<BinaryForm<F>> u_basis() const;
  /// dim W_{n,m} = h^0(O(dn + me)).
  long long w_dim(int n, int m) const { return h0_p1(static_cast<long long>(d) * n + static_cast<long long>(m) * e); }
};

/// Draws a form of the given degree from the generator (used to supply f1).
template <class F>
using FormSource = std::function<BinaryForm<F>(CounterRng&, int degree)>;

/// f0 = product of e distinct seeded linear forms; f1 seeded with a base-point-free pencil,
/// redrawn up to `max_attempts` times. Throws InputError if no valid draw is found.
template <class F>
TwistedSectionModel<F> build_twisted_model(const F& field, int d, int e, std::uint64_t seed, int N);

template <class F>
TwistedSectionModel<F> build_twisted_model(const F& field, int d, int e, std::uint64_t seed, int N,
                                           const FormSource<F>& f1_source, int max_attempts = 64);

/// Model with explicit data and no base-point-freeness check (for degenerate fixtures).
/// Roots must still be distinct in the field.
template <class F>
TwistedSectionModel<F> twisted_model_from_forms(const F& field, int d, std::vector<long> roots,
                                                BinaryForm<F> f1, int N);

/// Same model with U rebased by an invertible matrix.
template <class F>
TwistedSectionModel<F> rebase_u(TwistedSectionModel<F> model, Matrix<F> change);

/// Degreewise check of 0 → O(−D) → V⊗O → O(D) → 0 twisted by L^n, 0 ≤ n ≤ n_max:
/// rank(V ⊗ W_{n,0} → W_{n,1}) + h^0(O(dn − e)) = 2·h^0(O(dn)) and the map is onto.
template <class F>
std::vector<ChecklistItem> check_exact_triples(const TwistedSectionModel<F>& m, int n_max);

/// Complex K_p = C_p ⊗ R(−p) truncated at homological degree `depth`, internal degrees ≤ window.
template <class F>
struct KComplex {
  TwistedSectionModel<F> model;
  int depth = 0;
  int window = 0;
  std::vector<std::size_t> coef_dims;
  /// differential[p][n] : (K_p)_n → (K_{p−1})_n for 1 ≤ p ≤ depth, 0 ≤ n ≤ window.
  /// Rows are indexed coefficient-major, then by the monomial basis of R_{n−p}.
  std::vector<std::vector<Matrix<F>>> differential;

  std::size_t term_dim(int p, int n) const;
  const Matrix<F>& diff(int p, int n) const {
    return differential.at(static_cast<std::size_t>(p)).at(static_cast<std::size_t>(n));
  }
};

/// Assembles all differentials and verifies d∘d = 0 (InternalError otherwise).
template <class F>
KComplex<F> build_k_complex(const TwistedSectionModel<F>& m, int depth, int window);

template <class F>
bool differential_squares_to_zero(const KComplex<F>& k);

struct HomologyTable {
  int p_max = 0;
  int n_max = 0;
  std::vector<std::vector<std::optional<long long>>> cells;  // [p][n]

  std::optional<long long> at(int p, int n) const;
};

/// dim H_p(K)_n by ranks. Cells with p ≥ depth (no incoming differential in the truncation)
/// and cells beyond the window are unknown; a depth-0 complex is R itself.
template <class F>
HomologyTable homology_bigraded(const KComplex<F>& k, int p_max, int n_max);

/// Independent closed forms: H_0 = R/J_D; H_{2k+1}(K)_n = (d−e)·coker(P ⊗ H^0(O(d(n−2k−2)))
/// → H^0(O(d(n−2k−2) + d−1))); H_{2k}(K)_n = (d−e)·coker(H^0(O(1)) ⊗ H^0(O(d(n−2k−1))) → ...).
template <class F>
HomologyTable homology_closed_form(const TwistedSectionModel<F>& m, int p_max, int n_max);

/// J_D in degrees 0..top: f0 · H^0(O(dn − e)) ⊆ R_n.
template <class F>
std::vector<SubspaceBasis<F>> divisor_ideal(const TwistedSectionModel<F>& m, int top);

struct Theorem4Hypotheses {
  ChecklistItem h0_matches;    // H_0(K) ≅ A, im(d_1) = J_D
  ChecklistItem vanishing;     // H_p(K)_j = 0 for p ≥ 1, j > p+1 on the window
  ChecklistItem shape;         // K_p = C_p ⊗ R(−p), C_0 = k
  std::vector<std::pair<int, int>> uncovered_cells;

  bool established() const {
    return h0_matches.verdict == Verdict::pass && vanishing.verdict == Verdict::pass &&
           shape.verdict == Verdict::pass;
  }
};

template <class F>
Theorem4Hypotheses check_theorem4_hypotheses(const KComplex<F>& k,
                                             const std::vector<SubspaceBasis<F>>& expected_ideal);

struct Theorem4Conclusions {
  bool hypotheses_established = false;
  std::string label;
  BettiTable ring_betti;
  DiagonalVerdict ring_koszul;
  BettiTable module_betti;
  DiagonalVerdict module_linear;
  std::vector<std::size_t> module_dims;
};

/// R Koszul to N and A = R/J_D linear to N, by direct resolutions.
template <class F>
Theorem4Conclusions cross_validate_theorem4(const KComplex<F>& k, const Theorem4Hypotheses& hyp, int N);

struct Theorem6Input {
  int g = 0;
  int degL = 0;
  int h1L = 0;
};

struct Theorem6Report {
  long long divisor_degree = 0;      // degL − g − 1 + 2 h^1(L)
  long long divisor_series_dim = 0;  // degL − 2g + 4 h^1(L) − 1
  std::vector<ChecklistItem> items;

  bool all_pass() const;
};

/// Recomputes the divisor numerology and, for g = 0, evaluates every cohomological condition
/// with h^1(O(k)) = max(0, −k−1). A supplied model is checked for consistency.
template <class F>
Theorem6Report check_theorem6(const Theorem6Input& in, const TwistedSectionModel<F>* model);

}  // namespace koszul
