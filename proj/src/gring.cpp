#include "koszul/gring.hpp"

#include <algorithm>

namespace koszul {

int HomogeneousForm::degree() const {
  if (terms.empty()) throw InputError("empty form");
  int deg = -1;
  for (const auto& [exp, c] : terms) {
    int d = 0;
    for (int e : exp) {
      if (e < 0) throw InputError("negative exponent in form");
      d += e;
    }
    if (deg >= 0 && d != deg) throw InputError("form is not homogeneous");
    deg = d;
  }
  return deg;
}

namespace {

template <class F>
void check_form_shape(const HomogeneousForm& form, std::size_t num_vars) {
  for (const auto& [exp, c] : form.terms) {
    if (exp.size() != num_vars) throw InputError("form exponent vector has wrong length");
  }
  if (form.degree() < 1) throw InputError("forms must have positive degree");
}

// Element of A_{deg} represented by the form.
template <class F>
Vec<F> form_element(const GradedAlgebraTable<F>& t, const HomogeneousForm& form) {
  const F& f = t.field;
  const int deg = form.degree();
  Vec<F> out(t.dim(deg), f.zero());
  for (const auto& [exp, c] : form.terms) {
    const auto coeff = f.from_rational(c);
    if (f.is_zero(coeff)) continue;
    const auto mono = t.monomial(exp);
    f.axpy(out.data(), coeff, mono.data(), 0, out.size());
  }
  return out;
}

}  // namespace

template <class F>
GradedAlgebraTable<F> quotient_by_forms_table(const F& field, std::size_t num_vars,
                                              const std::vector<HomogeneousForm>& forms, int N,
                                              std::vector<std::string> names) {
  for (const auto& form : forms) check_form_shape<F>(form, num_vars);
  const F& f = field;
  RelationFn<F> rel = [&](int m, const GradedAlgebraTable<F>& t) -> Matrix<F> {
    if (m == 1) {
      Matrix<F> out(f, 0, num_vars);
      for (const auto& form : forms) {
        if (form.degree() != 1) continue;
        Vec<F> row(num_vars, f.zero());
        for (const auto& [exp, c] : form.terms) {
          const auto var = static_cast<std::size_t>(std::find(exp.begin(), exp.end(), 1) - exp.begin());
          row[var] = f.add(row[var], f.from_rational(c));
        }
        out.append_row(row);
      }
      return out;
    }
    const std::size_t n = t.dim(1);
    const std::size_t prev = t.dim(m - 1);
    const std::size_t base = t.dim(m - 2);
    Matrix<F> out(f, 0, n * prev);
    Vec<F> row(n * prev, f.zero());
    // Commutators of the degree-1 generators.
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t b = 0; b < base; ++b) {
          std::fill(row.begin(), row.end(), f.zero());
          auto xj_b = t.mult_row(j, m - 2, b);
          auto xi_b = t.mult_row(i, m - 2, b);
          f.axpy(row.data() + i * prev, f.one(), xj_b.data(), 0, prev);
          f.axpy(row.data() + j * prev, f.neg(f.one()), xi_b.data(), 0, prev);
          out.append_row(row);
        }
    // Forms of degree m, written as Σ x_var ⊗ (remaining monomial).
    for (const auto& form : forms) {
      if (form.degree() != m) continue;
      std::fill(row.begin(), row.end(), f.zero());
      for (const auto& [exp, c] : form.terms) {
        const auto coeff = f.from_rational(c);
        if (f.is_zero(coeff)) continue;
        std::size_t var = 0;
        while (exp[var] == 0) ++var;
        auto rest = exp;
        rest[var] -= 1;
        const auto w = t.monomial(rest);
        for (std::size_t g = 0; g < n; ++g) {
          const auto& vg = t.variables(var, g);
          if (f.is_zero(vg)) continue;
          f.axpy(row.data() + g * prev, f.mul(coeff, vg), w.data(), 0, prev);
        }
      }
      out.append_row(row);
    }
    return out;
  };
  if (names.empty()) {
    static const char* small[] = {"x", "y", "z", "w"};
    for (std::size_t i = 0; i < num_vars; ++i)
      names.push_back(num_vars <= 4 ? std::string(small[i]) : "x" + std::to_string(i + 1));
  }
  return build_quotient_table(f, num_vars, N, rel, names);
}

template <class F>
GradedRingModel<F> model_quotient_by_forms(const F& field, std::size_t num_vars,
                                           const std::vector<HomogeneousForm>& forms, int N,
                                           std::vector<std::string> names) {
  GradedRingModel<F> model;
  model.kind = GradedRingModel<F>::Kind::quotient_by_forms;
  std::string degs;
  for (const auto& form : forms) degs += (degs.empty() ? "" : ",") + std::to_string(form.degree());
  model.description = "quotient of a polynomial ring in " + std::to_string(num_vars) +
                      " variables by forms of degrees [" + degs + "]";
  model.table = std::make_shared<const GradedAlgebraTable<F>>(
      quotient_by_forms_table(field, num_vars, forms, N, std::move(names)));
  return model;
}

template <class F>
GradedRingModel<F> model_rational_normal_curve(const F& field, int d, int N) {
  if (d < 1) throw InputError("rational normal curve degree must be ≥ 1");
  if (N < 1) throw InputError("cutoff must be ≥ 1");
  GradedAlgebraTable<F> t(field);
  const auto ud = static_cast<std::size_t>(d);
  t.cutoff = N;
  t.dims.clear();
  for (int m = 0; m <= N; ++m) t.dims.push_back(static_cast<std::size_t>(d * m + 1));
  t.factors.assign(1, {});
  for (int m = 1; m <= N; ++m) {
    std::vector<Factor> fac(t.dims[static_cast<std::size_t>(m)]);
    for (std::size_t c = 0; c < fac.size(); ++c) {
      const std::size_t i = std::min(c, ud);
      fac[c] = {i, c - i};
    }
    t.factors.push_back(std::move(fac));
  }
  for (int m = 0; m < N; ++m) {
    const std::size_t src = t.dims[static_cast<std::size_t>(m)];
    Matrix<F> mult(field, (ud + 1) * src, t.dims[static_cast<std::size_t>(m) + 1]);
    for (std::size_t a = 0; a <= ud; ++a)
      for (std::size_t b = 0; b < src; ++b) mult(a * src + b, a + b) = field.one();
    t.mult.push_back(std::move(mult));
  }
  t.variables = Matrix<F>::identity(field, ud + 1);
  for (std::size_t a = 0; a <= ud; ++a) t.generator_names.push_back("u" + std::to_string(a));
  GradedRingModel<F> model;
  model.kind = GradedRingModel<F>::Kind::rational_normal_curve;
  model.description = "rational normal curve of degree " + std::to_string(d);
  model.table = std::make_shared<const GradedAlgebraTable<F>>(std::move(t));
  return model;
}

template <class F>
GradedRingModel<F> model_point_ring(const PointConfiguration<F>& c, int N) {
  const F& f = c.field;
  const std::size_t nv = static_cast<std::size_t>(c.ambient_dim) + 1;
  const std::size_t d = c.size();
  std::vector<std::vector<Vec<F>>> evals(1, std::vector<Vec<F>>{Vec<F>(d, f.one())});

  RelationFn<F> rel = [&](int m, const GradedAlgebraTable<F>& t) -> Matrix<F> {
    if (m == 1) {
      Matrix<F> e(f, nv, d);
      for (std::size_t v = 0; v < nv; ++v)
        for (std::size_t p = 0; p < d; ++p) e(v, p) = c.points[p][v];
      return left_kernel_rows(e);
    }
    // Evaluation vectors of the basis of A_{m−1}, from the factorizations.
    const auto mm = static_cast<std::size_t>(m);
    if (evals.size() < 2) {
      std::vector<Vec<F>> e1;
      for (std::size_t g = 0; g < t.dim(1); ++g) {
        std::size_t var = 0;
        for (; var < nv; ++var) {
          bool unit = true;
          for (std::size_t h = 0; h < t.dim(1) && unit; ++h)
            unit = f.equal(t.variables(var, h), h == g ? f.one() : f.zero());
          if (unit) break;
        }
        Vec<F> ev(d);
        for (std::size_t p = 0; p < d; ++p) ev[p] = c.points[p][var];
        e1.push_back(std::move(ev));
      }
      evals.push_back(std::move(e1));
    }
    while (evals.size() < mm) {
      const std::size_t k = evals.size();
      std::vector<Vec<F>> ek;
      for (const auto& fac : t.factors[k]) {
        Vec<F> ev(d);
        for (std::size_t p = 0; p < d; ++p) ev[p] = f.mul(evals[1][fac.gen][p], evals[k - 1][fac.parent][p]);
        ek.push_back(std::move(ev));
      }
      evals.push_back(std::move(ek));
    }
    const std::size_t n = t.dim(1), prev = t.dim(m - 1);
    Matrix<F> e(f, n * prev, d);
    for (std::size_t g = 0; g < n; ++g)
      for (std::size_t b = 0; b < prev; ++b)
        for (std::size_t p = 0; p < d; ++p) e(g * prev + b, p) = f.mul(evals[1][g][p], evals[mm - 1][b][p]);
    return left_kernel_rows(e);
  };
  std::vector<std::string> names;
  for (std::size_t v = 0; v < nv; ++v) names.push_back("x" + std::to_string(v));
  GradedRingModel<F> model;
  model.kind = GradedRingModel<F>::Kind::point_ring;
  model.description = "coordinate ring of " + std::to_string(d) + " points in P^" + std::to_string(c.ambient_dim);
  model.table = std::make_shared<const GradedAlgebraTable<F>>(build_quotient_table(f, nv, N, rel, names));
  return model;
}

template <class F>
std::vector<SubspaceBasis<F>> ideal_of_forms(const GradedAlgebraTable<F>& ring,
                                             const std::vector<HomogeneousForm>& forms, int top) {
  const F& f = ring.field;
  top = std::min(top, ring.cutoff);
  std::vector<SubspaceBasis<F>> out;
  for (int j = 0; j <= top; ++j) {
    EchelonBuilder<F> eb(f, ring.dim(j));
    for (const auto& form : forms) {
      const int e = form.degree();
      if (e > j) continue;
      const auto fe = form_element(ring, form);
      for (std::size_t b = 0; b < ring.dim(j - e); ++b) {
        eb.add(ring.product(e, fe, j - e, ring.basis_vector(j - e, b)));
      }
    }
    out.push_back(eb.finish());
  }
  return out;
}

// ---------------------------------------------------------------------------

template <class F>
BinaryForm<F> binary_monomial(const F& field, int degree, int a) {
  BinaryForm<F> out{degree, Vec<F>(static_cast<std::size_t>(degree) + 1, field.zero())};
  out.coeffs.at(static_cast<std::size_t>(a)) = field.one();
  return out;
}

template <class F>
BinaryForm<F> binary_multiply(const F& field, const BinaryForm<F>& a, const BinaryForm<F>& b) {
  BinaryForm<F> out{a.degree + b.degree,
                    Vec<F>(static_cast<std::size_t>(a.degree + b.degree) + 1, field.zero())};
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (field.is_zero(a.coeffs[i])) continue;
    field.axpy(out.coeffs.data() + i, a.coeffs[i], b.coeffs.data(), 0, b.coeffs.size());
  }
  return out;
}

template <class F>
typename F::Elem binary_resultant(const F& field, const BinaryForm<F>& a, const BinaryForm<F>& b) {
  const auto m = static_cast<std::size_t>(a.degree), n = static_cast<std::size_t>(b.degree);
  if (m + n == 0) return field.one();
  Matrix<F> s(field, m + n, m + n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k <= m; ++k) s(r, r + k) = a.coeffs[k];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t k = 0; k <= n; ++k) s(n + r, r + k) = b.coeffs[k];
  return determinant(s);
}

namespace {

// Univariate polynomial, coefficient k multiplies s^k.
template <class F>
Vec<F> trim(const F& f, Vec<F> p) {
  while (!p.empty() && f.is_zero(p.back())) p.pop_back();
  return p;
}

template <class F>
Vec<F> poly_mod(const F& f, Vec<F> a, const Vec<F>& b) {
  const auto inv = f.inv(b.back());
  while (a.size() >= b.size()) {
    const auto c = f.mul(a.back(), inv);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] = f.sub(a[shift + k], f.mul(c, b[k]));
    a = trim(f, std::move(a));
  }
  return a;
}

}  // namespace

template <class F>
int binary_gcd_degree(const F& field, const std::vector<BinaryForm<F>>& forms) {
  if (forms.empty()) throw std::invalid_argument("binary_gcd_degree: empty family");
  // Multiplicity of the point [1:0] (leading coefficients in s vanish) plus the
  // degree of the gcd of the dehomogenized polynomials in s.
  int at_infinity = -1;
  Vec<F> g;
  for (const auto& form : forms) {
    int lead = 0;
    while (lead <= form.degree && field.is_zero(form.coeffs[static_cast<std::size_t>(lead)])) ++lead;
    if (lead > form.degree) throw std::invalid_argument("binary_gcd_degree: zero form");
    at_infinity = at_infinity < 0 ? lead : std::min(at_infinity, lead);
    Vec<F> p(static_cast<std::size_t>(form.degree) + 1);
    for (int a = 0; a <= form.degree; ++a)
      p[static_cast<std::size_t>(form.degree - a)] = form.coeffs[static_cast<std::size_t>(a)];
    p = trim(field, std::move(p));
    if (g.empty()) {
      g = p;
      continue;
    }
    Vec<F> a = g, b = p;
    while (!b.empty()) {
      auto r = poly_mod(field, a, b);
      a = std::move(b);
      b = std::move(r);
    }
    g = a;
  }
  return static_cast<int>(g.size()) - 1 + at_infinity;
}

template <class F>
SurjectivityVerdict multiplication_surjectivity(const Matrix<F>& pair_images, std::size_t target_dim) {
  if (pair_images.rows() > 0 && pair_images.cols() != target_dim) {
    throw std::invalid_argument("multiplication_surjectivity: image width differs from target dimension");
  }
  SurjectivityVerdict v;
  EchelonBuilder<F> eb(pair_images.field(), target_dim);
  eb.add_rows(pair_images, target_dim);
  v.image_rank = eb.rank();
  v.cokernel_dim = target_dim - v.image_rank;
  v.surjective = v.cokernel_dim == 0;
  return v;
}

template <class F>
SurjectivityVerdict binary_multiplication_surjectivity(const F& field,
                                                       const std::vector<BinaryForm<F>>& v, int k) {
  if (v.empty()) throw std::invalid_argument("binary_multiplication_surjectivity: empty family");
  const int e = v.front().degree;
  for (const auto& form : v)
    if (form.degree != e) throw std::invalid_argument("binary_multiplication_surjectivity: mixed degrees");
  const auto target = static_cast<std::size_t>(std::max(0, e + k + 1));
  Matrix<F> images(field, 0, target);
  if (k >= 0) {
    for (const auto& form : v)
      for (int a = 0; a <= k; ++a) images.append_row(binary_multiply(field, form, binary_monomial(field, k, a)).coeffs);
  }
  return multiplication_surjectivity(images, target);
}

// ---------------------------------------------------------------------------

long long h0_p1(long long k) { return std::max(0LL, k + 1); }
long long h1_p1(long long k) { return std::max(0LL, -k - 1); }

template <class F>
GradedModuleTable<F> sheaf_module_p1(const GradedRingModel<F>& ring, int d, int m, int top) {
  if (ring.kind != GradedRingModel<F>::Kind::rational_normal_curve || ring.table->dim(1) != static_cast<std::size_t>(d) + 1) {
    throw std::invalid_argument("sheaf_module_p1: ring must be the degree-d rational normal curve model");
  }
  const F& f = ring.table->field;
  GradedModuleTable<F> mod;
  mod.ring = ring.table;
  mod.start_degree = 0;
  for (int i = 0; i <= top; ++i) mod.dims.push_back(static_cast<std::size_t>(h0_p1(m + static_cast<long long>(d) * i)));
  const auto ud = static_cast<std::size_t>(d);
  for (int i = 0; i < top; ++i) {
    const std::size_t src = mod.dims[static_cast<std::size_t>(i)];
    const std::size_t dst = mod.dims[static_cast<std::size_t>(i) + 1];
    Matrix<F> a(f, (ud + 1) * src, dst);
    for (std::size_t g = 0; g <= ud; ++g)
      for (std::size_t b = 0; b < src; ++b) a(g * src + b, g + b) = f.one();
    mod.action.push_back(std::move(a));
  }
  return mod;
}

template <class F>
Theorem8Report check_theorem8(const F& field, int d, int m, int N) {
  if (d < 1) throw InputError("regularity check needs d ≥ 1");
  if (N < 1) throw InputError("homological cutoff must be ≥ 1");
  Theorem8Report rep;
  rep.d = d;
  rep.m = m;
  rep.N = N;
  rep.h1_twist = h1_p1(static_cast<long long>(m) - d);
  rep.hypothesis = rep.h1_twist == 0;
  // First degree i with M_i ≠ 0; the window must reach N + 1 past it.
  int gen = 0;
  while (static_cast<long long>(m) + static_cast<long long>(d) * gen < 0) ++gen;
  const int top = gen + N + 1;
  for (int i = 0; i <= top; ++i) rep.module_dims.push_back(static_cast<std::size_t>(h0_p1(m + static_cast<long long>(d) * i)));
  if (!rep.hypothesis) return rep;
  const auto ring = model_rational_normal_curve(field, d, N + 1);
  const auto mod = sheaf_module_p1(ring, d, m, top);
  const auto res = minimal_free_resolution(mod, N, top);
  rep.betti = res.betti;
  rep.linear = check_linear_resolution(res.betti, N);
  return rep;
}

#define KOSZUL_INSTANTIATE_GRING(F)                                                               \
  template GradedAlgebraTable<F> quotient_by_forms_table(const F&, std::size_t,                   \
                                                         const std::vector<HomogeneousForm>&, int, \
                                                         std::vector<std::string>);               \
  template GradedRingModel<F> model_quotient_by_forms(const F&, std::size_t,                      \
                                                      const std::vector<HomogeneousForm>&, int,   \
                                                      std::vector<std::string>);                  \
  template GradedRingModel<F> model_rational_normal_curve(const F&, int, int);                    \
  template GradedRingModel<F> model_point_ring(const PointConfiguration<F>&, int);                \
  template std::vector<SubspaceBasis<F>> ideal_of_forms(const GradedAlgebraTable<F>&,             \
                                                        const std::vector<HomogeneousForm>&, int); \
  template BinaryForm<F> binary_monomial(const F&, int, int);                                     \
  template BinaryForm<F> binary_multiply(const F&, const BinaryForm<F>&, const BinaryForm<F>&);   \
  template F::Elem binary_resultant(const F&, const BinaryForm<F>&, const BinaryForm<F>&);        \
  template int binary_gcd_degree(const F&, const std::vector<BinaryForm<F>>&);                    \
  template SurjectivityVerdict multiplication_surjectivity(const Matrix<F>&, std::size_t);        \
  template SurjectivityVerdict binary_multiplication_surjectivity(                                \
      const F&, const std::vector<BinaryForm<F>>&, int);                                          \
  template GradedModuleTable<F> sheaf_module_p1(const GradedRingModel<F>&, int, int, int);        \
  template Theorem8Report check_theorem8(const F&, int, int, int);

KOSZUL_INSTANTIATE_GRING(PrimeField)
KOSZUL_INSTANTIATE_GRING(RationalField)

}  // namespace koszul
