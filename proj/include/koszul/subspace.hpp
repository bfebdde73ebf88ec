#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "koszul/matrix.hpp"

namespace koszul {

template <class F>
class SubspaceBasis;

/// Incremental Gaussian elimination.
///
/// Rows are kept in semi-echelon form: each stored row has a distinct pivot
/// column holding 1 and zeros to the left of it. Rows may still carry
/// entries in other rows' pivot columns until finish() back-substitutes.
template <class F>
class EchelonBuilder {
 public:
  using Elem = typename F::Elem;

  EchelonBuilder(F field, std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t rank() const { return pivots_.size(); }
  const F& field() const { return field_; }

  /// Reduces v in place against the stored rows. Returns true if v ends up zero.
  bool reduce(std::span<Elem> v) const;

  /// Adds v to the span. Returns false if v was already in it.
  bool add(std::span<const Elem> v);

  bool contains(std::span<const Elem> v) const;

  /// Adds every row of m; stops early once `stop_at_rank` is reached.
  void add_rows(const Matrix<F>& m, std::size_t stop_at_rank = static_cast<std::size_t>(-1));

  SubspaceBasis<F> finish() const;

 private:
  F field_;
  std::size_t ambient_;
  std::vector<std::size_t> pivots_;   // sorted ascending
  std::vector<Vec<F>> rows_;          // parallel to pivots_
};

/// Subspace of F^ambient_dim stored as a reduced row-echelon basis.
///
/// The basis is canonical: equal subspaces have identical bases.
template <class F>
class SubspaceBasis {
 public:
  using Elem = typename F::Elem;

  SubspaceBasis(F field, std::size_t ambient_dim);
  SubspaceBasis(Matrix<F> rref_rows, std::vector<std::size_t> pivots);

  static SubspaceBasis whole(const F& field, std::size_t ambient_dim);

  const F& field() const { return basis_.field(); }
  std::size_t ambient_dim() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix<F>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::span<const Elem> vector(std::size_t k) const { return basis_.row(k); }

  /// Columns that are not pivots, ascending. Their unit vectors span a complement.
  std::vector<std::size_t> non_pivots() const;

  /// Reduces v modulo the subspace (v ends up supported on non-pivot columns).
  void reduce(std::span<Elem> v) const;
  bool contains(std::span<const Elem> v) const;
  bool contains(const SubspaceBasis& other) const;

  /// Coordinates of a member v in this basis (entries at pivot columns).
  Vec<F> coordinates(std::span<const Elem> v) const;

  std::size_t codim() const { return ambient_dim() - dim(); }

  friend bool operator==(const SubspaceBasis& a, const SubspaceBasis& b) {
    return a.pivots_ == b.pivots_ && a.basis_ == b.basis_;
  }

 private:
  Matrix<F> basis_;
  std::vector<std::size_t> pivots_;
};

/// Canonical basis of the row space of m.
template <class F>
SubspaceBasis<F> rref(const Matrix<F>& m);

template <class F>
std::size_t rank(const Matrix<F>& m);

template <class F>
SubspaceBasis<F> subspace_sum(const SubspaceBasis<F>& a, const SubspaceBasis<F>& b);

template <class F>
SubspaceBasis<F> subspace_intersect(const SubspaceBasis<F>& a, const SubspaceBasis<F>& b);

/// Right kernel {v : m·vᵀ = 0}, canonical.
template <class F>
SubspaceBasis<F> kernel(const Matrix<F>& m);

/// Left kernel {c : c·m = 0} as a (not canonical) list of basis rows.
template <class F>
Matrix<F> left_kernel_rows(const Matrix<F>& m);

/// Annihilator of a subspace under the standard pairing.
template <class F>
SubspaceBasis<F> annihilator(const SubspaceBasis<F>& s);

template <class F>
std::size_t quotient_dim(const SubspaceBasis<F>& whole, const SubspaceBasis<F>& part);

}  // namespace koszul
