#include "koszul/curvecomplex.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace koszul {

namespace {

template <class F>
BinaryForm<F> linear_factor(const F& f, long root) {
  // s − root·t
  return BinaryForm<F>{1, Vec<F>{f.one(), f.neg(f.from_int(root))}};
}

template <class F>
BinaryForm<F> product_of_roots(const F& f, const std::vector<long>& roots) {
  BinaryForm<F> out{0, Vec<F>{f.one()}};
  for (long r : roots) out = binary_multiply(f, out, linear_factor(f, r));
  return out;
}

template <class F>
void check_roots(const F& f, const std::vector<long>& roots) {
  std::vector<typename F::Elem> seen;
  for (long r : roots) {
    const auto x = f.from_int(r);
    for (const auto& y : seen)
      if (f.equal(x, y)) throw InputError("divisor must be reduced: repeated root " + std::to_string(r));
    seen.push_back(x);
  }
}

template <class F>
BinaryForm<F> random_form(const F& f, CounterRng& rng, int degree) {
  BinaryForm<F> out{degree, {}};
  for (int a = 0; a <= degree; ++a) out.coeffs.push_back(f.from_int(rng.uniform(-9, 9)));
  return out;
}

template <class F>
bool is_zero_form(const F& f, const BinaryForm<F>& p) {
  return is_zero_vector(f, std::span<const typename F::Elem>(p.coeffs));
}

void check_degrees(int d, int e, int N) {
  if (e < 1 || e > d - 1) {
    throw InputError("divisor degree must satisfy 1 ≤ e ≤ d−1 (got d=" + std::to_string(d) +
                     ", e=" + std::to_string(e) + ")");
  }
  if (N < 4) throw InputError("window must be at least 4 (got " + std::to_string(N) + ")");
}

template <class F>
TwistedSectionModel<F> assemble(const F& field, int d, std::vector<long> roots, BinaryForm<F> f1, int N,
                                std::uint64_t seed) {
  const int e = static_cast<int>(roots.size());
  TwistedSectionModel<F> m(field);
  m.d = d;
  m.e = e;
  m.seed = seed;
  m.f0 = product_of_roots(field, roots);
  m.roots = std::move(roots);
  m.f1 = std::move(f1);
  const int c = d - 1 - e;
  m.p0 = binary_multiply(field, m.f0, binary_monomial(field, c, 0));
  m.p1 = binary_multiply(field, m.f1, binary_monomial(field, c, c));
  m.u_change = Matrix<F>::identity(field, m.dim_u());
  m.ring = model_rational_normal_curve(field, d, N);
  m.window = N;
  return m;
}

template <class F>
std::vector<long> draw_roots(const F& field, int e, CounterRng& rng) {
  const long bound = std::max<long>(9, e);
  for (int attempt = 0; attempt < 256; ++attempt) {
    std::vector<long> roots;
    std::vector<typename F::Elem> seen;
    while (roots.size() < static_cast<std::size_t>(e)) {
      const long r = rng.uniform(-bound, bound);
      const auto x = field.from_int(r);
      if (std::any_of(seen.begin(), seen.end(), [&](const auto& y) { return field.equal(x, y); })) break;
      seen.push_back(x);
      roots.push_back(r);
    }
    if (roots.size() == static_cast<std::size_t>(e)) return roots;
  }
  throw InputError("could not draw " + std::to_string(e) + " distinct points in " + field.name());
}

}  // namespace

template <class F>
std::vector<BinaryForm<F>> TwistedSectionModel<F>::u_basis() const {
  const int c = d - e;
  std::vector<BinaryForm<F>> quotient;
  for (int b = 0; b <= c; ++b) quotient.push_back(binary_multiply(field, f0, binary_monomial(field, c, b)));
  std::vector<BinaryForm<F>> out;
  for (std::size_t a = 0; a < dim_u(); ++a) {
    BinaryForm<F> u{d, Vec<F>(static_cast<std::size_t>(d) + 1, field.zero())};
    for (std::size_t b = 0; b < dim_u(); ++b)
      field.axpy(u.coeffs.data(), u_change(a, b), quotient[b].coeffs.data(), 0, u.coeffs.size());
    out.push_back(std::move(u));
  }
  return out;
}

template <class F>
TwistedSectionModel<F> build_twisted_model(const F& field, int d, int e, std::uint64_t seed, int N) {
  return build_twisted_model<F>(field, d, e, seed, N,
                                [&field](CounterRng& rng, int degree) { return random_form(field, rng, degree); });
}

template <class F>
TwistedSectionModel<F> build_twisted_model(const F& field, int d, int e, std::uint64_t seed, int N,
                                           const FormSource<F>& f1_source, int max_attempts) {
  check_degrees(d, e, N);
  CounterRng root_rng(seed, 0xD1);
  auto roots = draw_roots(field, e, root_rng);
  CounterRng rng(seed, 0xF1);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    auto f1 = f1_source(rng, e);
    if (f1.degree != e || f1.coeffs.size() != static_cast<std::size_t>(e) + 1) {
      throw InputError("form source returned a form of the wrong degree");
    }
    if (is_zero_form(field, f1)) continue;
    auto m = assemble(field, d, roots, std::move(f1), N, seed);
    if (!field.is_zero(binary_resultant(field, m.p0, m.p1))) return m;
  }
  throw InputError("no base-point-free pencil found after " + std::to_string(max_attempts) +
                   " draws (d=" + std::to_string(d) + ", e=" + std::to_string(e) + ", seed=" +
                   std::to_string(seed) + ", field " + field.name() + "): resultant was always zero");
}

template <class F>
TwistedSectionModel<F> twisted_model_from_forms(const F& field, int d, std::vector<long> roots,
                                                BinaryForm<F> f1, int N) {
  const int e = static_cast<int>(roots.size());
  check_degrees(d, e, N);
  check_roots(field, roots);
  if (f1.degree != e || f1.coeffs.size() != static_cast<std::size_t>(e) + 1) {
    throw InputError("second pencil form must have degree " + std::to_string(e));
  }
  return assemble(field, d, std::move(roots), std::move(f1), N, 0);
}

template <class F>
TwistedSectionModel<F> rebase_u(TwistedSectionModel<F> model, Matrix<F> change) {
  if (change.rows() != model.dim_u() || change.cols() != model.dim_u()) {
    throw InputError("basis change must be a square matrix of size dim U");
  }
  if (model.field.is_zero(determinant(change))) throw InputError("basis change is singular");
  model.u_change = std::move(change);
  return model;
}

template <class F>
std::vector<ChecklistItem> check_exact_triples(const TwistedSectionModel<F>& m, int n_max) {
  const F& f = m.field;
  std::vector<ChecklistItem> out;
  {
    // 0 → O(−D) → V⊗O → O(D) → 0 twisted by L^n; h^1(L^n) = 0 so coker = h^1(O(dn − e)).
    ChecklistItem item{"divisor triple 0 → O(−D) → V⊗O → O(D) → 0", Verdict::pass, ""};
    for (int n = 0; n <= n_max && item.verdict == Verdict::pass; ++n) {
      const long long k = static_cast<long long>(m.d) * n;
      const auto v = binary_multiplication_surjectivity(f, {m.f0, m.f1}, m.d * n);
      const long long ker = 2 * h0_p1(k) - static_cast<long long>(v.image_rank);
      if (ker != h0_p1(k - m.e) || static_cast<long long>(v.cokernel_dim) != h1_p1(k - m.e)) {
        item.verdict = Verdict::fail;
        item.detail = "fails in degree n=" + std::to_string(n);
      }
    }
    if (item.verdict == Verdict::pass) item.detail = "kernel and cokernel match for 0 ≤ n ≤ " + std::to_string(n_max);
    out.push_back(std::move(item));
  }
  {
    // 0 → K → U⊗O → L(−D) → 0 with K ≅ O(−1)^{d−e}, twisted by L^n.
    ChecklistItem item{"twist triple 0 → L^{-1}(D) → U⊗O → L(−D) → 0", Verdict::pass, ""};
    const int c = m.d - m.e;
    std::vector<BinaryForm<F>> quotient;
    for (int b = 0; b <= c; ++b) quotient.push_back(binary_monomial(f, c, b));
    for (int n = 0; n <= n_max && item.verdict == Verdict::pass; ++n) {
      const long long k = static_cast<long long>(m.d) * n;
      const auto v = binary_multiplication_surjectivity(f, quotient, m.d * n);
      const long long ker = (c + 1) * h0_p1(k) - static_cast<long long>(v.image_rank);
      if (ker != c * h0_p1(k - 1) || !v.surjective) {
        item.verdict = Verdict::fail;
        item.detail = "fails in degree n=" + std::to_string(n);
      }
    }
    if (item.verdict == Verdict::pass) item.detail = "kernel and cokernel match for 0 ≤ n ≤ " + std::to_string(n_max);
    out.push_back(std::move(item));
  }
  return out;
}

// ---------------------------------------------------------------------------

template <class F>
std::size_t KComplex<F>::term_dim(int p, int n) const {
  if (p < 0 || p > depth || n < p) return 0;
  return coef_dims[static_cast<std::size_t>(p)] * static_cast<std::size_t>(model.d * (n - p) + 1);
}

namespace {

template <class F>
class KComplexAssembler {
 public:
  explicit KComplexAssembler(const TwistedSectionModel<F>& m)
      : m_(m), f_(m.field), c_(static_cast<std::size_t>(m.d - m.e)),
        s_(binary_monomial(f_, 1, 0)), t_(binary_monomial(f_, 1, 1)), u_(m.u_basis()),
        u_inverse_(invert(m.u_change)) {}

  std::size_t coef_dim(int p) const {
    if (p == 0) return 1;
    if (p == 1) return c_ + 1;
    return 2 * c_;
  }

  Matrix<F> differential(int p, int n) const {
    const auto rows = block(n - p), cols = block(n - p + 1);
    Matrix<F> out(f_, coef_dim(p) * rows, coef_dim(p - 1) * cols);
    for (std::size_t i = 0; i < coef_dim(p); ++i) {
      for (std::size_t r = 0; r < rows; ++r) {
        const auto mono = binary_monomial(f_, m_.d * (n - p), static_cast<int>(r));
        auto dst = out.row(i * rows + r);
        fill_row(p, i, mono, cols, dst);
      }
    }
    return out;
  }

 private:
  std::size_t block(int k) const { return k < 0 ? 0 : static_cast<std::size_t>(m_.d * k + 1); }

  static Matrix<F> invert(const Matrix<F>& g) {
    const F& f = g.field();
    const std::size_t n = g.rows();
    Matrix<F> aug(f, n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) aug(i, j) = g(i, j);
      aug(i, n + i) = f.one();
    }
    const auto r = rref(aug);
    Matrix<F> inv(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.basis()(i, n + j);
    return inv;
  }

  void add_form(std::span<typename F::Elem> dst, std::size_t slot, std::size_t cols, const BinaryForm<F>& g,
                bool negate) const {
    if (g.coeffs.size() != cols) throw InternalError("K-complex: form degree does not match its block");
    for (std::size_t k = 0; k < cols; ++k) {
      auto& x = dst[slot * cols + k];
      x = negate ? f_.sub(x, g.coeffs[k]) : f_.add(x, g.coeffs[k]);
    }
  }

  const BinaryForm<F>& pencil(std::size_t b) const { return b == 0 ? m_.p0 : m_.p1; }

  void fill_row(int p, std::size_t i, const BinaryForm<F>& r, std::size_t cols,
                std::span<typename F::Elem> dst) const {
    if (p == 1) {
      add_form(dst, 0, cols, binary_multiply(f_, u_[i], r), false);
      return;
    }
    if (p == 2) {
      // (a,b) ↦ e'_a ⊗ t·g − e'_{a+1} ⊗ s·g in the monomial basis e' of U, then rebased.
      const std::size_t a = i / 2, b = i % 2;
      const auto g = binary_multiply(f_, pencil(b), r);
      const auto tg = binary_multiply(f_, t_, g), sg = binary_multiply(f_, s_, g);
      for (std::size_t j = 0; j <= c_; ++j) {
        const auto wa = u_inverse_(a, j), wb = u_inverse_(a + 1, j);
        for (std::size_t k = 0; k < cols; ++k) {
          auto& x = dst[j * cols + k];
          x = f_.add(x, f_.sub(f_.mul(wa, tg.coeffs[k]), f_.mul(wb, sg.coeffs[k])));
        }
      }
      return;
    }
    const std::size_t a = i / 2, sub = i % 2;
    if (p % 2 == 0) {
      const auto g = binary_multiply(f_, pencil(sub), r);
      add_form(dst, 2 * a, cols, binary_multiply(f_, t_, g), false);
      add_form(dst, 2 * a + 1, cols, binary_multiply(f_, s_, g), true);
    } else {
      const auto h = binary_multiply(f_, sub == 0 ? s_ : t_, r);
      add_form(dst, 2 * a, cols, binary_multiply(f_, h, m_.p1), false);
      add_form(dst, 2 * a + 1, cols, binary_multiply(f_, h, m_.p0), true);
    }
  }

  const TwistedSectionModel<F>& m_;
  const F& f_;
  std::size_t c_;
  BinaryForm<F> s_, t_;
  std::vector<BinaryForm<F>> u_;
  Matrix<F> u_inverse_;
};

}  // namespace

template <class F>
KComplex<F> build_k_complex(const TwistedSectionModel<F>& m, int depth, int window) {
  if (depth < 0) throw InputError("depth must be nonnegative");
  if (window < 0 || window > m.window) {
    throw InputError("internal-degree window must lie in [0, " + std::to_string(m.window) + "]");
  }
  KComplex<F> k{m, depth, window, {}, {}};
  KComplexAssembler<F> asmb(m);
  for (int p = 0; p <= depth; ++p) k.coef_dims.push_back(asmb.coef_dim(p));
  k.differential.resize(static_cast<std::size_t>(depth) + 1);
  for (int p = 1; p <= depth; ++p)
    for (int n = 0; n <= window; ++n) k.differential[static_cast<std::size_t>(p)].push_back(asmb.differential(p, n));
  if (!differential_squares_to_zero(k)) throw InternalError("K-complex differential does not square to zero");
  return k;
}

template <class F>
bool differential_squares_to_zero(const KComplex<F>& k) {
  for (int p = 2; p <= k.depth; ++p)
    for (int n = 0; n <= k.window; ++n) {
      const auto& a = k.diff(p, n);
      const auto& b = k.diff(p - 1, n);
      if (a.rows() == 0 || b.cols() == 0) continue;
      if (!multiply(a, b).is_zero()) return false;
    }
  return true;
}

std::optional<long long> HomologyTable::at(int p, int n) const {
  if (p < 0 || n < 0 || p > p_max || n > n_max) return std::nullopt;
  return cells[static_cast<std::size_t>(p)][static_cast<std::size_t>(n)];
}

template <class F>
HomologyTable homology_bigraded(const KComplex<F>& k, int p_max, int n_max) {
  HomologyTable h{p_max, n_max, {}};
  for (int p = 0; p <= p_max; ++p) {
    std::vector<std::optional<long long>> row;
    for (int n = 0; n <= n_max; ++n) {
      if (n > k.window) {
        row.emplace_back(std::nullopt);
        continue;
      }
      if (k.depth == 0) {
        // The complex is R itself.
        row.emplace_back(p == 0 ? static_cast<long long>(k.term_dim(0, n)) : 0);
        continue;
      }
      if (p >= k.depth) {
        // The top term has no incoming differential in the truncation.
        row.emplace_back(std::nullopt);
        continue;
      }
      const long long dim = static_cast<long long>(k.term_dim(p, n));
      const long long out = p == 0 ? 0 : static_cast<long long>(rank(k.diff(p, n)));
      const long long in = static_cast<long long>(rank(k.diff(p + 1, n)));
      row.emplace_back(dim - out - in);
    }
    h.cells.push_back(std::move(row));
  }
  return h;
}

template <class F>
HomologyTable homology_closed_form(const TwistedSectionModel<F>& m, int p_max, int n_max) {
  const F& f = m.field;
  const long long copies = m.d - m.e;
  const std::vector<BinaryForm<F>> pencil{m.p0, m.p1};
  const std::vector<BinaryForm<F>> linear{binary_monomial(f, 1, 0), binary_monomial(f, 1, 1)};
  auto coker = [&](const std::vector<BinaryForm<F>>& v, int x) -> long long {
    if (x < 0) return 0;  // source and target both vanish for d ≥ 2
    return static_cast<long long>(binary_multiplication_surjectivity(f, v, m.d * x).cokernel_dim);
  };
  HomologyTable h{p_max, n_max, {}};
  for (int p = 0; p <= p_max; ++p) {
    std::vector<std::optional<long long>> row;
    for (int n = 0; n <= n_max; ++n) {
      const long long dn = static_cast<long long>(m.d) * n;
      if (p == 0) {
        row.emplace_back(h0_p1(dn) - h0_p1(dn - m.e));
      } else if (p % 2 == 1) {
        row.emplace_back(copies * coker(pencil, n - p - 1));
      } else {
        row.emplace_back(copies * coker(linear, n - p - 1));
      }
    }
    h.cells.push_back(std::move(row));
  }
  return h;
}

template <class F>
std::vector<SubspaceBasis<F>> divisor_ideal(const TwistedSectionModel<F>& m, int top) {
  std::vector<SubspaceBasis<F>> out;
  for (int n = 0; n <= top; ++n) {
    const int k = m.d * n - m.e;
    const auto ambient = static_cast<std::size_t>(m.d * n + 1);
    Matrix<F> rows(m.field, 0, ambient);
    for (int a = 0; a <= k; ++a) rows.append_row(binary_multiply(m.field, m.f0, binary_monomial(m.field, k, a)).coeffs);
    out.push_back(rows.rows() == 0 ? SubspaceBasis<F>(m.field, ambient) : rref(rows));
  }
  return out;
}

template <class F>
Theorem4Hypotheses check_theorem4_hypotheses(const KComplex<F>& k,
                                             const std::vector<SubspaceBasis<F>>& expected_ideal) {
  Theorem4Hypotheses h;
  const F& f = k.model.field;

  h.h0_matches = {"H_0(K) = A and im(d_1) = J_D", Verdict::pass, ""};
  for (int n = 0; n <= k.window; ++n) {
    if (n >= static_cast<int>(expected_ideal.size())) {
      h.h0_matches.verdict = Verdict::abstain;
      h.h0_matches.detail = "expected quotient not supplied in degree " + std::to_string(n);
      break;
    }
    const auto ambient = k.term_dim(0, n);
    const auto image = k.depth == 0 || k.diff(1, n).rows() == 0 ? SubspaceBasis<F>(f, ambient) : rref(k.diff(1, n));
    if (!(image == expected_ideal[static_cast<std::size_t>(n)])) {
      h.h0_matches.verdict = Verdict::fail;
      h.h0_matches.detail = "im(d_1) differs from the ideal in degree " + std::to_string(n) + " (dims " +
                            std::to_string(image.dim()) + " vs " +
                            std::to_string(expected_ideal[static_cast<std::size_t>(n)].dim()) + ")";
      break;
    }
  }
  if (h.h0_matches.verdict == Verdict::pass) {
    h.h0_matches.detail = "checked in degrees 0.." + std::to_string(k.window);
  }

  h.vanishing = {"H_p(K)_j = 0 for p ≥ 1, j > p+1", Verdict::pass, ""};
  const auto hom = homology_bigraded(k, k.depth, k.window);
  for (int p = 1; p <= k.depth; ++p) {
    for (int j = p + 2; j <= k.window; ++j) {
      const auto cell = hom.at(p, j);
      if (!cell) {
        h.uncovered_cells.emplace_back(p, j);
      } else if (*cell != 0 && h.vanishing.verdict == Verdict::pass) {
        h.vanishing.verdict = Verdict::fail;
        h.vanishing.detail = "H_" + std::to_string(p) + "(K)_" + std::to_string(j) + " = " + std::to_string(*cell);
      }
    }
  }
  if (h.vanishing.verdict == Verdict::pass) {
    bool any_checked = false;
    for (int p = 1; p < k.depth; ++p) any_checked = any_checked || p + 2 <= k.window;
    if (k.depth >= 1 && !any_checked) {
      h.vanishing.verdict = Verdict::abstain;
      h.vanishing.detail = "window too small to certify any cell";
    } else {
      h.vanishing.detail = "certified for 1 ≤ p ≤ " + std::to_string(std::max(0, k.depth - 1)) + ", j ≤ " +
                           std::to_string(k.window) + "; " + std::to_string(h.uncovered_cells.size()) +
                           " cell(s) outside the window";
    }
  }

  h.shape = {"K_p = V_p ⊗ R(−p) with V_0 = k", Verdict::pass, ""};
  if (k.coef_dims.empty() || k.coef_dims[0] != 1) {
    h.shape.verdict = Verdict::fail;
    h.shape.detail = "V_0 is not one-dimensional";
  } else {
    for (int p = 1; p <= k.depth && h.shape.verdict == Verdict::pass; ++p)
      for (int n = 0; n < p; ++n)
        if (k.term_dim(p, n) != 0) {
          h.shape.verdict = Verdict::fail;
          h.shape.detail = "term " + std::to_string(p) + " has generators below degree " + std::to_string(p);
        }
  }
  if (h.shape.verdict == Verdict::pass) {
    std::ostringstream os;
    os << "dim V_p =";
    for (auto c : k.coef_dims) os << ' ' << c;
    h.shape.detail = os.str();
  }
  return h;
}

template <class F>
Theorem4Conclusions cross_validate_theorem4(const KComplex<F>& k, const Theorem4Hypotheses& hyp, int N) {
  if (N < 1) throw InputError("homological cutoff must be ≥ 1");
  const auto& m = k.model;
  Theorem4Conclusions out;
  out.hypotheses_established = hyp.established();
  out.label = out.hypotheses_established
                  ? "hypotheses established on the window"
                  : "hypotheses not established; conclusions computed for information only";
  const auto ring = model_rational_normal_curve(m.field, m.d, N + 1);
  out.ring_betti = betti_trivial_module(ring.table, N, N + 1);
  out.ring_koszul = scan_off_diagonal(out.ring_betti, N, 0);
  const auto mod = quotient_module(ring.table, divisor_ideal(m, N + 1));
  out.module_dims = mod.dims;
  out.module_betti = minimal_free_resolution(mod, N, N + 1).betti;
  out.module_linear = check_linear_resolution(out.module_betti, N);
  return out;
}

// ---------------------------------------------------------------------------

bool Theorem6Report::all_pass() const {
  return std::all_of(items.begin(), items.end(), [](const ChecklistItem& i) {
    return i.verdict == Verdict::pass || i.verdict == Verdict::not_applicable;
  });
}

namespace {

std::string h1_text(const std::string& what, long long k, long long value) {
  return what + " = h^1(O(" + std::to_string(k) + ")) = " + std::to_string(value);
}

}  // namespace

template <class F>
Theorem6Report check_theorem6(const Theorem6Input& in, const TwistedSectionModel<F>* model) {
  if (in.g < 0) throw InputError("genus must be nonnegative");
  if (in.h1L < 0) throw InputError("h^1(L) must be nonnegative");
  if (model != nullptr && in.g != 0) throw InputError("a twisted-section model is only available in genus 0");
  Theorem6Report r;
  const long long g = in.g, degL = in.degL, h1L = in.h1L;
  r.divisor_degree = degL - g - 1 + 2 * h1L;
  r.divisor_series_dim = degL - 2 * g + 4 * h1L - 1;
  const long long dD = r.divisor_degree;
  auto add = [&r](std::string name, Verdict v, std::string detail) {
    r.items.push_back({std::move(name), v, std::move(detail)});
  };

  add("deg L ≥ g + 3", verdict_of(degL >= g + 3),
      "deg L = " + std::to_string(degL) + ", g + 3 = " + std::to_string(g + 3));
  add("divisor degree recomputed", Verdict::pass,
      "d = deg L − g − 1 + 2h^1(L) = " + std::to_string(dD) + ", dim|D| = " + std::to_string(r.divisor_series_dim));
  const long long p = h1L + 1;
  add("number of points p = h^1(L) + 1 ≤ d/2", verdict_of(2 * p <= dD),
      "p = " + std::to_string(p) + ", d = " + std::to_string(dD));

  if (g != 0) {
    for (const char* name : {"h^1(L) consistent with the curve", "L embeds projectively normally",
                             "|D| base-point-free of the stated dimension", "|L(−D)| base-point-free pencil",
                             "h^1(L(D)) = 0", "h^1(L^2(−D)) = 0", "h^1(D) = 2h^1(L)", "h^1(L(−D)) = 2h^1(L)",
                             "alpha injective", "beta injective"}) {
      add(name, Verdict::abstain, "needs the cohomology of a curve of genus " + std::to_string(g));
    }
    add("general h^1(L) points impose independent conditions",
        h1L <= 1 ? Verdict::pass : Verdict::abstain,
        h1L <= 1 ? "automatic for h^1(L) ≤ 1" : "needs the geometry of the curve");
    return r;
  }

  add("h^1(L) consistent with the curve", verdict_of(h1_p1(degL) == h1L),
      h1_text("h^1(L)", degL, h1_p1(degL)));
  add("L embeds projectively normally", verdict_of(degL >= 1),
      degL >= 1 ? "rational normal curve of degree " + std::to_string(degL) : "L is not very ample");
  add("|D| base-point-free of the stated dimension",
      verdict_of(dD >= 0 && h0_p1(dD) - 1 == r.divisor_series_dim),
      "h^0(O(" + std::to_string(dD) + ")) − 1 = " + std::to_string(h0_p1(dD) - 1));
  add("|L(−D)| base-point-free pencil", verdict_of(degL - dD >= 0 && h0_p1(degL - dD) - 1 == 1),
      "h^0(O(" + std::to_string(degL - dD) + ")) − 1 = " + std::to_string(h0_p1(degL - dD) - 1));
  const long long h1_LD = h1_p1(degL + dD), h1_L2D = h1_p1(2 * degL - dD);
  add("h^1(L(D)) = 0", verdict_of(h1_LD == 0), h1_text("h^1(L(D))", degL + dD, h1_LD));
  add("h^1(L^2(−D)) = 0", verdict_of(h1_L2D == 0), h1_text("h^1(L^2(−D))", 2 * degL - dD, h1_L2D));
  add("general h^1(L) points impose independent conditions", verdict_of(h1L <= 1),
      h1L <= 1 ? "automatic for h^1(L) ≤ 1" : "h^1(L) > 1 is impossible in genus 0");
  const long long h1_D = h1_p1(dD), h1_LmD = h1_p1(degL - dD);
  add("h^1(D) = 2h^1(L)", verdict_of(h1_D == 2 * h1L), h1_text("h^1(D)", dD, h1_D));
  add("h^1(L(−D)) = 2h^1(L)", verdict_of(h1_LmD == 2 * h1L), h1_text("h^1(L(−D))", degL - dD, h1_LmD));
  // alpha: H^1(L(−D)) → V⊗H^1(L) is onto when h^1(L(D)) = 0, so it is injective iff the dimensions agree.
  auto injectivity = [&](const std::string& name, long long source, long long target, bool onto) {
    if (source == 0) {
      add(name, Verdict::pass, "vacuous: source is zero");
    } else if (!onto) {
      add(name, Verdict::abstain, "surjectivity not established");
    } else {
      add(name, verdict_of(source == target),
          "source " + std::to_string(source) + ", target " + std::to_string(target));
    }
  };
  injectivity("alpha injective", h1_LmD, 2 * h1L, h1_LD == 0);
  injectivity("beta injective", h1_D, 2 * h1L, h1_L2D == 0);

  if (model == nullptr) {
    add("model consistent with the numerology", Verdict::not_applicable, "no model supplied");
  } else {
    const bool ok = model->d == degL && model->e == dD && model->dim_u() == static_cast<std::size_t>(h0_p1(degL - dD)) &&
                    !model->field.is_zero(binary_resultant(model->field, model->p0, model->p1));
    add("model consistent with the numerology", verdict_of(ok),
        "model d=" + std::to_string(model->d) + ", e=" + std::to_string(model->e) + ", dim U=" +
            std::to_string(model->dim_u()));
  }
  return r;
}

#define KOSZUL_INSTANTIATE_CURVECOMPLEX(F)                                                              \
  template struct TwistedSectionModel<F>;                                                               \
  template struct KComplex<F>;                                                                          \
  template TwistedSectionModel<F> build_twisted_model(const F&, int, int, std::uint64_t, int);         \
  template TwistedSectionModel<F> build_twisted_model(const F&, int, int, std::uint64_t, int,           \
                                                      const FormSource<F>&, int);                       \
  template TwistedSectionModel<F> twisted_model_from_forms(const F&, int, std::vector<long>,            \
                                                           BinaryForm<F>, int);                         \
  template TwistedSectionModel<F> rebase_u(TwistedSectionModel<F>, Matrix<F>);                         \
  template std::vector<ChecklistItem> check_exact_triples(const TwistedSectionModel<F>&, int);          \
  template KComplex<F> build_k_complex(const TwistedSectionModel<F>&, int, int);                        \
  template bool differential_squares_to_zero(const KComplex<F>&);                                       \
  template HomologyTable homology_bigraded(const KComplex<F>&, int, int);                               \
  template HomologyTable homology_closed_form(const TwistedSectionModel<F>&, int, int);                 \
  template std::vector<SubspaceBasis<F>> divisor_ideal(const TwistedSectionModel<F>&, int);             \
  template Theorem4Hypotheses check_theorem4_hypotheses(const KComplex<F>&,                             \
                                                        const std::vector<SubspaceBasis<F>>&);          \
  template Theorem4Conclusions cross_validate_theorem4(const KComplex<F>&, const Theorem4Hypotheses&, int); \
  template Theorem6Report check_theorem6(const Theorem6Input&, const TwistedSectionModel<F>*);

KOSZUL_INSTANTIATE_CURVECOMPLEX(PrimeField)
KOSZUL_INSTANTIATE_CURVECOMPLEX(RationalField)

}  // namespace koszul
