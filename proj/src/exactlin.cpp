#include <algorithm>

#include "koszul/subspace.hpp"

namespace koszul {

template <class F>
Matrix<F> multiply(const Matrix<F>& a, const Matrix<F>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("multiply: shape mismatch");
  const F& f = a.field();
  Matrix<F> out(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto dst = out.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto& c = a(i, k);
      if (f.is_zero(c)) continue;
      f.axpy(dst.data(), c, b.row(k).data(), 0, b.cols());
    }
  }
  return out;
}

template <class F>
Vec<F> row_times(const F& field, std::span<const typename F::Elem> v, const Matrix<F>& m) {
  if (v.size() != m.rows()) throw std::invalid_argument("row_times: shape mismatch");
  Vec<F> out(m.cols(), field.zero());
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (field.is_zero(v[k])) continue;
    field.axpy(out.data(), v[k], m.row(k).data(), 0, m.cols());
  }
  return out;
}

template <class F>
typename F::Elem determinant(const Matrix<F>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix is not square");
  const F& f = m.field();
  Matrix<F> a = m;
  const std::size_t n = a.rows();
  auto det = f.one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && f.is_zero(a(piv, c))) ++piv;
    if (piv == n) return f.zero();
    if (piv != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(a(piv, k), a(c, k));
      det = f.neg(det);
    }
    det = f.mul(det, a(c, c));
    const auto inv = f.inv(a(c, c));
    for (std::size_t r = c + 1; r < n; ++r) {
      if (f.is_zero(a(r, c))) continue;
      const auto factor = f.neg(f.mul(a(r, c), inv));
      f.axpy(a.row(r).data(), factor, a.row(c).data(), c, n);
    }
  }
  return det;
}

// ---------------------------------------------------------------------------

template <class F>
EchelonBuilder<F>::EchelonBuilder(F field, std::size_t ambient_dim)
    : field_(std::move(field)), ambient_(ambient_dim) {}

template <class F>
bool EchelonBuilder<F>::reduce(std::span<Elem> v) const {
  for (std::size_t k = 0; k < pivots_.size(); ++k) {
    const std::size_t p = pivots_[k];
    if (field_.is_zero(v[p])) continue;
    const Elem c = field_.neg(v[p]);
    field_.axpy(v.data(), c, rows_[k].data(), p, ambient_);
  }
  return is_zero_vector(field_, std::span<const Elem>(v.data(), v.size()));
}

template <class F>
bool EchelonBuilder<F>::add(std::span<const Elem> v) {
  if (v.size() != ambient_) throw std::invalid_argument("EchelonBuilder::add: width mismatch");
  if (pivots_.size() == ambient_) return false;
  Vec<F> w(v.begin(), v.end());
  reduce(w);
  std::size_t p = 0;
  while (p < ambient_ && field_.is_zero(w[p])) ++p;
  if (p == ambient_) return false;
  const Elem inv = field_.inv(w[p]);
  for (std::size_t k = p; k < ambient_; ++k) w[k] = field_.mul(w[k], inv);
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p);
  const auto idx = static_cast<std::ptrdiff_t>(pos - pivots_.begin());
  pivots_.insert(pos, p);
  rows_.insert(rows_.begin() + idx, std::move(w));
  return true;
}

template <class F>
bool EchelonBuilder<F>::contains(std::span<const Elem> v) const {
  Vec<F> w(v.begin(), v.end());
  return reduce(w);
}

template <class F>
void EchelonBuilder<F>::add_rows(const Matrix<F>& m, std::size_t stop_at_rank) {
  for (std::size_t r = 0; r < m.rows() && rank() < stop_at_rank; ++r) add(m.row(r));
}

template <class F>
SubspaceBasis<F> EchelonBuilder<F>::finish() const {
  std::vector<Vec<F>> rows = rows_;
  const std::size_t r = rows.size();
  for (std::size_t i = r; i-- > 0;) {
    const std::size_t p = pivots_[i];
    for (std::size_t j = 0; j < i; ++j) {
      if (field_.is_zero(rows[j][p])) continue;
      const Elem c = field_.neg(rows[j][p]);
      field_.axpy(rows[j].data(), c, rows[i].data(), p, ambient_);
    }
  }
  std::vector<Elem> flat;
  flat.reserve(r * ambient_);
  for (auto& row : rows) flat.insert(flat.end(), row.begin(), row.end());
  return SubspaceBasis<F>(Matrix<F>(field_, r, ambient_, std::move(flat)), pivots_);
}

// ---------------------------------------------------------------------------

template <class F>
SubspaceBasis<F>::SubspaceBasis(F field, std::size_t ambient_dim)
    : basis_(std::move(field), 0, ambient_dim) {}

template <class F>
SubspaceBasis<F>::SubspaceBasis(Matrix<F> rref_rows, std::vector<std::size_t> pivots)
    : basis_(std::move(rref_rows)), pivots_(std::move(pivots)) {
  if (pivots_.size() != basis_.rows()) {
    throw InternalError("SubspaceBasis: pivot count does not match row count");
  }
}

template <class F>
SubspaceBasis<F> SubspaceBasis<F>::whole(const F& field, std::size_t ambient_dim) {
  std::vector<std::size_t> piv(ambient_dim);
  for (std::size_t k = 0; k < ambient_dim; ++k) piv[k] = k;
  return SubspaceBasis(Matrix<F>::identity(field, ambient_dim), std::move(piv));
}

template <class F>
std::vector<std::size_t> SubspaceBasis<F>::non_pivots() const {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t c = 0; c < ambient_dim(); ++c) {
    if (k < pivots_.size() && pivots_[k] == c) {
      ++k;
    } else {
      out.push_back(c);
    }
  }
  return out;
}

template <class F>
void SubspaceBasis<F>::reduce(std::span<Elem> v) const {
  const F& f = field();
  for (std::size_t k = 0; k < pivots_.size(); ++k) {
    const std::size_t p = pivots_[k];
    if (f.is_zero(v[p])) continue;
    const Elem c = f.neg(v[p]);
    f.axpy(v.data(), c, basis_.row(k).data(), p, ambient_dim());
  }
}

template <class F>
bool SubspaceBasis<F>::contains(std::span<const Elem> v) const {
  if (v.size() != ambient_dim()) throw std::invalid_argument("contains: width mismatch");
  Vec<F> w(v.begin(), v.end());
  reduce(w);
  return is_zero_vector(field(), std::span<const Elem>(w));
}

template <class F>
bool SubspaceBasis<F>::contains(const SubspaceBasis& other) const {
  if (other.ambient_dim() != ambient_dim()) return false;
  for (std::size_t k = 0; k < other.dim(); ++k)
    if (!contains(other.vector(k))) return false;
  return true;
}

template <class F>
Vec<F> SubspaceBasis<F>::coordinates(std::span<const Elem> v) const {
  Vec<F> out;
  out.reserve(dim());
  for (std::size_t p : pivots_) out.push_back(v[p]);
  return out;
}

// ---------------------------------------------------------------------------

template <class F>
SubspaceBasis<F> rref(const Matrix<F>& m) {
  EchelonBuilder<F> b(m.field(), m.cols());
  b.add_rows(m);
  return b.finish();
}

template <class F>
std::size_t rank(const Matrix<F>& m) {
  EchelonBuilder<F> b(m.field(), m.cols());
  b.add_rows(m);
  return b.rank();
}

template <class F>
SubspaceBasis<F> subspace_sum(const SubspaceBasis<F>& a, const SubspaceBasis<F>& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw std::invalid_argument("subspace_sum: ambient dimension mismatch");
  }
  EchelonBuilder<F> eb(a.field(), a.ambient_dim());
  eb.add_rows(a.basis());
  eb.add_rows(b.basis());
  return eb.finish();
}

template <class F>
SubspaceBasis<F> subspace_intersect(const SubspaceBasis<F>& a, const SubspaceBasis<F>& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw std::invalid_argument("subspace_intersect: ambient dimension mismatch");
  }
  const F& f = a.field();
  const std::size_t n = a.ambient_dim();
  // Zassenhaus: rows (a | a) and (b | 0); rows with vanishing left half
  // carry the intersection in their right half.
  EchelonBuilder<F> eb(f, 2 * n);
  Vec<F> row(2 * n, f.zero());
  for (std::size_t k = 0; k < a.dim(); ++k) {
    auto v = a.vector(k);
    std::copy(v.begin(), v.end(), row.begin());
    std::copy(v.begin(), v.end(), row.begin() + static_cast<std::ptrdiff_t>(n));
    eb.add(row);
  }
  for (std::size_t k = 0; k < b.dim(); ++k) {
    auto v = b.vector(k);
    std::copy(v.begin(), v.end(), row.begin());
    std::fill(row.begin() + static_cast<std::ptrdiff_t>(n), row.end(), f.zero());
    eb.add(row);
  }
  const auto full = eb.finish();
  EchelonBuilder<F> out(f, n);
  for (std::size_t k = 0; k < full.dim(); ++k) {
    if (full.pivots()[k] < n) continue;
    auto v = full.vector(k);
    out.add(v.subspan(n));
  }
  return out.finish();
}

namespace {

template <class F>
Matrix<F> kernel_rows_from_rref(const SubspaceBasis<F>& r) {
  const F& f = r.field();
  const std::size_t n = r.ambient_dim();
  const auto free_cols = r.non_pivots();
  Matrix<F> out(f, free_cols.size(), n);
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const std::size_t fc = free_cols[k];
    out(k, fc) = f.one();
    for (std::size_t i = 0; i < r.dim(); ++i) out(k, r.pivots()[i]) = f.neg(r.basis()(i, fc));
  }
  return out;
}

}  // namespace

template <class F>
SubspaceBasis<F> kernel(const Matrix<F>& m) {
  return rref(kernel_rows_from_rref(rref(m)));
}

template <class F>
Matrix<F> left_kernel_rows(const Matrix<F>& m) {
  return kernel_rows_from_rref(rref(m.transpose()));
}

template <class F>
SubspaceBasis<F> annihilator(const SubspaceBasis<F>& s) {
  if (s.dim() == 0) return SubspaceBasis<F>::whole(s.field(), s.ambient_dim());
  return kernel(s.basis());
}

template <class F>
std::size_t quotient_dim(const SubspaceBasis<F>& whole, const SubspaceBasis<F>& part) {
  if (!whole.contains(part)) throw std::invalid_argument("quotient_dim: not a subspace");
  return whole.dim() - part.dim();
}

#define KOSZUL_INSTANTIATE_EXACTLIN(F)                                                  \
  template class EchelonBuilder<F>;                                                     \
  template class SubspaceBasis<F>;                                                      \
  template Matrix<F> multiply(const Matrix<F>&, const Matrix<F>&);                      \
  template Vec<F> row_times(const F&, std::span<const F::Elem>, const Matrix<F>&);      \
  template F::Elem determinant(const Matrix<F>&);                                       \
  template SubspaceBasis<F> rref(const Matrix<F>&);                                     \
  template std::size_t rank(const Matrix<F>&);                                          \
  template SubspaceBasis<F> subspace_sum(const SubspaceBasis<F>&, const SubspaceBasis<F>&); \
  template SubspaceBasis<F> subspace_intersect(const SubspaceBasis<F>&,                 \
                                               const SubspaceBasis<F>&);                \
  template SubspaceBasis<F> kernel(const Matrix<F>&);                                   \
  template Matrix<F> left_kernel_rows(const Matrix<F>&);                                \
  template SubspaceBasis<F> annihilator(const SubspaceBasis<F>&);                       \
  template std::size_t quotient_dim(const SubspaceBasis<F>&, const SubspaceBasis<F>&);

KOSZUL_INSTANTIATE_EXACTLIN(PrimeField)
KOSZUL_INSTANTIATE_EXACTLIN(RationalField)

}  // namespace koszul
