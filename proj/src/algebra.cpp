#include "koszul/algebra.hpp"

namespace koszul {

template <class F>
Vec<F> GradedAlgebraTable<F>::left_multiply(std::size_t gen, int m,
                                            std::span<const Elem> v) const {
  if (m < 0 || m >= cutoff) throw std::out_of_range("left_multiply: degree beyond cutoff");
  Vec<F> out(dim(m + 1), field.zero());
  for (std::size_t b = 0; b < v.size(); ++b) {
    if (field.is_zero(v[b])) continue;
    field.axpy(out.data(), v[b], mult_row(gen, m, b).data(), 0, out.size());
  }
  return out;
}

template <class F>
Vec<F> GradedAlgebraTable<F>::product(int m, std::span<const Elem> a, int k,
                                      std::span<const Elem> c) const {
  if (m + k > cutoff) throw std::out_of_range("product: degree beyond cutoff");
  if (m == 0) {
    Vec<F> out(c.begin(), c.end());
    for (auto& x : out) x = field.mul(x, a[0]);
    return out;
  }
  // basis_b · c, built up along the factorization chain of b.
  std::function<const Vec<F>&(int, std::size_t, std::vector<std::vector<Vec<F>>>&)> basis_times;
  std::vector<std::vector<Vec<F>>> memo(static_cast<std::size_t>(m) + 1);
  for (int r = 0; r <= m; ++r) memo[static_cast<std::size_t>(r)].resize(dim(r));
  basis_times = [&](int r, std::size_t b, std::vector<std::vector<Vec<F>>>& mm) -> const Vec<F>& {
    auto& slot = mm[static_cast<std::size_t>(r)][b];
    if (!slot.empty() || dim(r + k) == 0) return slot;
    if (r == 0) {
      slot.assign(c.begin(), c.end());
    } else {
      const Factor& fac = factors[static_cast<std::size_t>(r)][b];
      const Vec<F>& inner = basis_times(r - 1, fac.parent, mm);
      slot = left_multiply(fac.gen, r - 1 + k, inner);
    }
    return slot;
  };
  Vec<F> out(dim(m + k), field.zero());
  for (std::size_t b = 0; b < a.size(); ++b) {
    if (field.is_zero(a[b])) continue;
    const Vec<F>& term = basis_times(m, b, memo);
    if (!term.empty()) field.axpy(out.data(), a[b], term.data(), 0, out.size());
  }
  return out;
}

template <class F>
Vec<F> GradedAlgebraTable<F>::basis_vector(int m, std::size_t b) const {
  Vec<F> v(dim(m), field.zero());
  v.at(b) = field.one();
  return v;
}

template <class F>
Vec<F> GradedAlgebraTable<F>::word(const std::vector<std::size_t>& w) const {
  Vec<F> v{field.one()};
  int m = 0;
  for (std::size_t k = w.size(); k-- > 0;) {
    v = left_multiply(w[k], m, v);
    ++m;
  }
  return v;
}

template <class F>
Vec<F> GradedAlgebraTable<F>::monomial(const std::vector<int>& exponents) const {
  if (exponents.size() != variables.rows()) {
    throw std::invalid_argument("monomial: exponent vector has wrong length");
  }
  Vec<F> v{field.one()};
  int m = 0;
  for (std::size_t var = exponents.size(); var-- > 0;) {
    for (int e = 0; e < exponents[var]; ++e) {
      Vec<F> next(dim(m + 1), field.zero());
      for (std::size_t g = 0; g < num_generators(); ++g) {
        const auto& c = variables(var, g);
        if (field.is_zero(c)) continue;
        auto part = left_multiply(g, m, v);
        field.axpy(next.data(), c, part.data(), 0, next.size());
      }
      v = std::move(next);
      ++m;
    }
  }
  return v;
}

template <class F>
std::string GradedAlgebraTable<F>::label(int m, std::size_t b) const {
  if (m == 0) return "1";
  std::string out;
  while (m > 0) {
    const Factor& fac = factors[static_cast<std::size_t>(m)][b];
    out += fac.gen < generator_names.size() ? generator_names[fac.gen]
                                            : "x" + std::to_string(fac.gen);
    b = fac.parent;
    --m;
  }
  return out;
}

template <class F>
GradedAlgebraTable<F> build_quotient_table(const F& field, std::size_t num_vars, int cutoff,
                                           const RelationFn<F>& relations,
                                           std::vector<std::string> variable_names) {
  if (cutoff < 1) throw std::invalid_argument("build_quotient_table: cutoff must be ≥ 1");
  GradedAlgebraTable<F> t(field);
  t.cutoff = 0;
  t.dims = {1};
  t.factors = {{}};

  for (int m = 1; m <= cutoff; ++m) {
    const std::size_t width = (m == 1) ? num_vars : t.dims[1] * t.dims[static_cast<std::size_t>(m - 1)];
    Matrix<F> q = relations(m, t);
    if (q.rows() > 0 && q.cols() != width) {
      throw InternalError("build_quotient_table: relation width mismatch in degree " +
                          std::to_string(m));
    }
    const auto red = q.rows() > 0 ? rref(q) : SubspaceBasis<F>(field, width);
    const auto normal = red.non_pivots();
    std::vector<std::size_t> position(width, static_cast<std::size_t>(-1));
    for (std::size_t k = 0; k < normal.size(); ++k) position[normal[k]] = k;

    // Coordinates of every A_1 ⊗ A_{m-1} basis vector in the new normal basis.
    Matrix<F> proj(field, width, normal.size());
    for (std::size_t k = 0; k < normal.size(); ++k) proj(normal[k], k) = field.one();
    for (std::size_t r = 0; r < red.dim(); ++r) {
      const std::size_t pc = red.pivots()[r];
      for (std::size_t k = 0; k < normal.size(); ++k) {
        proj(pc, k) = field.neg(red.basis()(r, normal[k]));
      }
    }

    if (m == 1) {
      t.variables = proj;
      t.dims.push_back(normal.size());
      t.mult.push_back(Matrix<F>::identity(field, normal.size()));
      std::vector<Factor> fac(normal.size());
      for (std::size_t k = 0; k < normal.size(); ++k) fac[k] = {k, 0};
      t.factors.push_back(std::move(fac));
      if (!variable_names.empty()) {
        for (std::size_t k : normal) t.generator_names.push_back(variable_names.at(k));
      }
    } else {
      const std::size_t prev = t.dims[static_cast<std::size_t>(m - 1)];
      std::vector<Factor> fac(normal.size());
      for (std::size_t k = 0; k < normal.size(); ++k) fac[k] = {normal[k] / prev, normal[k] % prev};
      t.dims.push_back(normal.size());
      t.mult.push_back(std::move(proj));
      t.factors.push_back(std::move(fac));
    }
    t.cutoff = m;
  }
  return t;
}

template <class F>
bool check_associativity(const GradedAlgebraTable<F>& t, int max_degree) {
  max_degree = std::min(max_degree, t.cutoff);
  for (int m = 0; m <= max_degree; ++m)
    for (int k = 0; m + k <= max_degree; ++k)
      for (int l = 0; m + k + l <= max_degree; ++l)
        for (std::size_t a = 0; a < t.dim(m); ++a)
          for (std::size_t b = 0; b < t.dim(k); ++b) {
            const auto va = t.basis_vector(m, a);
            const auto vb = t.basis_vector(k, b);
            const auto ab = t.product(m, va, k, vb);
            for (std::size_t c = 0; c < t.dim(l); ++c) {
              const auto vc = t.basis_vector(l, c);
              const auto left = t.product(m + k, ab, l, vc);
              const auto right = t.product(m, va, k + l, t.product(k, vb, l, vc));
              for (std::size_t x = 0; x < left.size(); ++x)
                if (!t.field.equal(left[x], right[x])) return false;
            }
          }
  return true;
}

std::vector<long long> duality_product(const std::vector<std::size_t>& ha,
                                       const std::vector<std::size_t>& hb, int N) {
  std::vector<long long> out(static_cast<std::size_t>(N) + 1, 0);
  for (int m = 0; m <= N; ++m) {
    long long s = 0;
    for (int i = 0; i <= m; ++i) {
      const auto j = static_cast<std::size_t>(m - i);
      const auto ii = static_cast<std::size_t>(i);
      if (ii >= ha.size() || j >= hb.size()) {
        throw std::invalid_argument("duality_product: Hilbert data shorter than requested degree");
      }
      const long long term = static_cast<long long>(ha[ii]) * static_cast<long long>(hb[j]);
      s += (m - i) % 2 == 0 ? term : -term;
    }
    out[static_cast<std::size_t>(m)] = s;
  }
  return out;
}

#define KOSZUL_INSTANTIATE_ALGEBRA(F)                                                       \
  template struct GradedAlgebraTable<F>;                                                    \
  template GradedAlgebraTable<F> build_quotient_table(const F&, std::size_t, int,           \
                                                      const RelationFn<F>&,                 \
                                                      std::vector<std::string>);            \
  template bool check_associativity(const GradedAlgebraTable<F>&, int);

KOSZUL_INSTANTIATE_ALGEBRA(PrimeField)
KOSZUL_INSTANTIATE_ALGEBRA(RationalField)

}  // namespace koszul
