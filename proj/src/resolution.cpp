#include "koszul/resolution.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace koszul {

BettiTable::BettiTable(int hom_cutoff, int deg_lo, int deg_hi)
    : hom_cutoff_(hom_cutoff), deg_lo_(deg_lo), deg_hi_(deg_hi) {
  const auto width = static_cast<std::size_t>(std::max(0, deg_hi - deg_lo + 1));
  cells_.assign(static_cast<std::size_t>(hom_cutoff + 1),
                std::vector<std::optional<std::size_t>>(width));
}

std::optional<std::size_t> BettiTable::at(int i, int j) const {
  if (i < 0) return 0;
  if (i > hom_cutoff_) return std::nullopt;
  if (j < deg_lo_) return 0;
  if (j > deg_hi_) return std::nullopt;
  return cells_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - deg_lo_)];
}

void BettiTable::set(int i, int j, std::optional<std::size_t> value) {
  if (i < 0 || i > hom_cutoff_ || j < deg_lo_ || j > deg_hi_) {
    throw std::out_of_range("BettiTable::set: cell outside table");
  }
  cells_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - deg_lo_)] = value;
}

bool BettiTable::complete_to(int I, int J) const {
  for (int i = 0; i <= I; ++i)
    for (int j = deg_lo_; j <= J; ++j)
      if (!at(i, j)) return false;
  return true;
}

std::optional<int> BettiTable::generation_degree() const {
  for (int j = deg_lo_; j <= deg_hi_; ++j) {
    auto v = at(0, j);
    if (!v) return std::nullopt;
    if (*v > 0) return j;
  }
  return std::nullopt;
}

std::string BettiTable::to_string() const {
  std::ostringstream os;
  os << "j\\i";
  for (int i = 0; i <= hom_cutoff_; ++i) os << '\t' << i;
  os << '\n';
  for (int j = deg_lo_; j <= deg_hi_; ++j) {
    os << j;
    for (int i = 0; i <= hom_cutoff_; ++i) {
      auto v = at(i, j);
      os << '\t' << (v ? std::to_string(*v) : "?");
    }
    os << '\n';
  }
  return os.str();
}

DiagonalVerdict scan_off_diagonal(const BettiTable& b, int N, int shift) {
  DiagonalVerdict first_unknown{DiagonalVerdict::Status::unknown};
  bool saw_unknown = false;
  for (int i = 0; i <= N; ++i) {
    for (int j = 0; j <= N + 1; ++j) {
      if (i == j) continue;
      auto v = b.at(i, j + shift);
      if (!v) {
        if (!saw_unknown) {
          saw_unknown = true;
          first_unknown.i = i;
          first_unknown.j = j;
        }
        continue;
      }
      if (*v != 0) return {DiagonalVerdict::Status::violated, i, j};
    }
  }
  if (saw_unknown) return first_unknown;
  return {DiagonalVerdict::Status::holds};
}

DiagonalVerdict check_linear_resolution(const BettiTable& b, int N) {
  const auto g = b.generation_degree();
  if (!g) {
    // Zero module in the window (or unknown generation degree).
    if (b.at(0, b.deg_lo())) {
      bool all_zero = true;
      for (int j = b.deg_lo(); j <= b.deg_hi(); ++j) {
        auto v = b.at(0, j);
        if (!v) return {DiagonalVerdict::Status::unknown, 0, j};
        all_zero = all_zero && *v == 0;
      }
      if (all_zero) return {DiagonalVerdict::Status::holds};
    }
    return {DiagonalVerdict::Status::unknown, 0, b.deg_lo()};
  }
  return scan_off_diagonal(b, N, *g);
}

std::vector<std::optional<long long>> euler_characteristic(
    const BettiTable& b, const std::vector<std::size_t>& ring_hilbert, int top) {
  std::vector<std::optional<long long>> out;
  for (int j = b.deg_lo(); j <= top; ++j) {
    long long s = 0;
    bool ok = true;
    for (int i = 0; ok && i <= j - b.deg_lo(); ++i) {
      for (int m = b.deg_lo(); m <= j; ++m) {
        const auto h_idx = static_cast<std::size_t>(j - m);
        if (h_idx >= ring_hilbert.size()) {
          ok = false;
          break;
        }
        auto v = b.at(i, m);
        if (!v) {
          // Cells with m < i + deg_lo vanish for minimal resolutions of modules
          // generated in degrees ≥ deg_lo; anything else unknown poisons the sum.
          if (m < i + b.deg_lo()) continue;
          ok = false;
          break;
        }
        const long long term = static_cast<long long>(*v) * static_cast<long long>(ring_hilbert[h_idx]);
        s += (i % 2 == 0) ? term : -term;
      }
    }
    out.push_back(ok ? std::optional<long long>(s) : std::nullopt);
  }
  return out;
}

// ---------------------------------------------------------------------------

template <class F>
Vec<F> GradedModuleTable<F>::act(std::size_t gen, int j, std::span<const typename F::Elem> v) const {
  const int k = j - start_degree;
  if (k < 0 || k + 1 >= static_cast<int>(dims.size())) {
    throw std::out_of_range("GradedModuleTable::act: degree outside window");
  }
  const auto& a = action[static_cast<std::size_t>(k)];
  const F& f = ring->field;
  Vec<F> out(dims[static_cast<std::size_t>(k) + 1], f.zero());
  const std::size_t d = dims[static_cast<std::size_t>(k)];
  for (std::size_t b = 0; b < v.size(); ++b) {
    if (f.is_zero(v[b])) continue;
    f.axpy(out.data(), v[b], a.row(gen * d + b).data(), 0, out.size());
  }
  return out;
}

template <class F>
GradedModuleTable<F> quotient_module(std::shared_ptr<const GradedAlgebraTable<F>> ring,
                                     const std::vector<SubspaceBasis<F>>& ideal) {
  const F& f = ring->field;
  const int top = std::min(ring->cutoff, static_cast<int>(ideal.size()) - 1);
  GradedModuleTable<F> m;
  m.ring = ring;
  m.start_degree = 0;
  std::vector<std::vector<std::size_t>> normal;
  for (int j = 0; j <= top; ++j) {
    const auto& ij = ideal[static_cast<std::size_t>(j)];
    if (ij.ambient_dim() != ring->dim(j)) {
      throw std::invalid_argument("quotient_module: ideal piece has wrong ambient dimension");
    }
    normal.push_back(ij.non_pivots());
    m.dims.push_back(normal.back().size());
  }
  const std::size_t n = ring->num_generators();
  for (int j = 0; j < top; ++j) {
    const auto& src = normal[static_cast<std::size_t>(j)];
    const auto& next = ideal[static_cast<std::size_t>(j + 1)];
    const auto& next_normal = normal[static_cast<std::size_t>(j + 1)];
    Matrix<F> a(f, n * src.size(), next_normal.size());
    for (std::size_t g = 0; g < n; ++g) {
      for (std::size_t b = 0; b < src.size(); ++b) {
        auto row = ring->mult_row(g, j, src[b]);
        Vec<F> w(row.begin(), row.end());
        next.reduce(w);
        for (std::size_t k = 0; k < next_normal.size(); ++k) a(g * src.size() + b, k) = w[next_normal[k]];
      }
    }
    m.action.push_back(std::move(a));
  }
  return m;
}

template <class F>
GradedModuleTable<F> ring_module(std::shared_ptr<const GradedAlgebraTable<F>> ring) {
  std::vector<SubspaceBasis<F>> ideal;
  for (int j = 0; j <= ring->cutoff; ++j) ideal.emplace_back(ring->field, ring->dim(j));
  return quotient_module(ring, ideal);
}

template <class F>
GradedModuleTable<F> trivial_module(std::shared_ptr<const GradedAlgebraTable<F>> ring, int top) {
  const F& f = ring->field;
  GradedModuleTable<F> m;
  m.ring = ring;
  m.start_degree = 0;
  m.dims.assign(static_cast<std::size_t>(top) + 1, 0);
  m.dims[0] = 1;
  const std::size_t n = ring->num_generators();
  for (int j = 0; j < top; ++j) {
    m.action.emplace_back(f, n * m.dims[static_cast<std::size_t>(j)], 0);
  }
  return m;
}

template <class F>
bool check_module_associativity(const GradedModuleTable<F>& m) {
  const auto& r = *m.ring;
  const F& f = r.field;
  const std::size_t n = r.num_generators();
  for (int j = m.start_degree; j + 2 <= m.end_degree(); ++j) {
    if (r.cutoff < 2) break;
    for (std::size_t b = 0; b < m.dim(j); ++b) {
      Vec<F> v(m.dim(j), f.zero());
      v[b] = f.one();
      for (std::size_t gi = 0; gi < n; ++gi)
        for (std::size_t gj = 0; gj < n; ++gj) {
          const auto lhs = m.act(gi, j + 1, m.act(gj, j, v));
          // (x_i x_j)·v expanded along the normal basis of A_2.
          const auto prod = r.left_multiply(gi, 1, r.basis_vector(1, gj));
          Vec<F> rhs(m.dim(j + 2), f.zero());
          for (std::size_t c = 0; c < prod.size(); ++c) {
            if (f.is_zero(prod[c])) continue;
            const Factor& fac = r.factors[2][c];
            const auto part = m.act(fac.gen, j + 1, m.act(fac.parent, j, v));
            f.axpy(rhs.data(), prod[c], part.data(), 0, rhs.size());
          }
          for (std::size_t k = 0; k < rhs.size(); ++k)
            if (!f.equal(lhs[k], rhs[k])) return false;
        }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------

namespace {

// One free module F_k = ⊕_g R(−deg g) of a resolution under construction.
template <class F>
struct FreeLevel {
  std::vector<int> degrees;
  std::vector<Vec<F>> images;

  // Offsets of the generator blocks inside (F_k)_j, and total dimension.
  std::vector<std::size_t> offsets(const GradedAlgebraTable<F>& r, int j, std::size_t& total) const {
    std::vector<std::size_t> off(degrees.size(), 0);
    total = 0;
    for (std::size_t g = 0; g < degrees.size(); ++g) {
      off[g] = total;
      if (degrees[g] <= j) total += r.dim(j - degrees[g]);
    }
    return off;
  }

  std::optional<int> min_degree() const {
    if (degrees.empty()) return std::nullopt;
    return degrees.front();
  }
};

template <class F>
class ResolutionBuilder {
 public:
  ResolutionBuilder(const GradedModuleTable<F>& m, int I, int J)
      : m_(m), r_(*m.ring), f_(r_.field), I_(I), J_(J), levels_(static_cast<std::size_t>(I) + 1) {}

  Resolution<F> run() {
    const int j0 = m_.start_degree;
    const int top = std::max(J_, j0);
    Resolution<F> res;
    res.ring = m_.ring;
    res.betti = BettiTable(I_, j0, top);
    const auto L = static_cast<std::size_t>(I_) + 1;
    std::vector<bool> gens_known(L, true);       // level k generators known through current j
    std::vector<bool> prev_computable(L, true);  // Z_k was computable at j − 1
    std::vector<std::optional<Matrix<F>>> phi_prev(L), phi_cur(L);
    std::vector<std::optional<Matrix<F>>> z_prev(L), z_cur(L);

    for (int j = j0; j <= top; ++j) {
      std::vector<bool> computable(L, false);
      for (int k = 0; k <= I_; ++k) {
        const auto kk = static_cast<std::size_t>(k);
        // Generators of level k in degree j.
        bool known;
        if (k == 0) {
          known = gens_known[0] && j <= m_.end_degree();
        } else {
          known = gens_known[kk] && computable[kk - 1] && (j == j0 || prev_computable[kk - 1]);
        }
        gens_known[kk] = known;
        if (!known) {
          res.betti.set(k, j, std::nullopt);
        } else {
          const std::size_t count = (k == 0) ? new_module_generators(j)
                                             : new_syzygy_generators(k, j, z_cur[kk - 1], z_prev[kk - 1]);
          res.betti.set(k, j, count);
        }
        // Differential φ_k in degree j and its kernel, needed for level k + 1.
        if (k < I_ && known && target_ok(k, j) && source_ok(k, j)) {
          phi_cur[kk] = build_phi(k, j, phi_prev[kk]);
          z_cur[kk] = left_kernel_rows(*phi_cur[kk]);
          computable[kk] = true;
        } else {
          phi_cur[kk].reset();
          z_cur[kk].reset();
        }
      }
      phi_prev = phi_cur;
      z_prev = z_cur;
      prev_computable = computable;
    }
    for (auto& lvl : levels_) {
      res.generator_degrees.push_back(lvl.degrees);
      res.generator_images.push_back(lvl.images);
    }
    return res;
  }

 private:
  bool source_ok(int k, int j) const {
    auto md = levels_[static_cast<std::size_t>(k)].min_degree();
    return !md || j - *md <= r_.cutoff;
  }

  bool target_ok(int k, int j) const {
    if (k == 0) return j <= m_.end_degree();
    auto md = levels_[static_cast<std::size_t>(k) - 1].min_degree();
    return !md || j - *md <= r_.cutoff;
  }

  std::size_t dim_level(int k, int j) const {
    if (k < 0) return m_.dim(j);
    std::size_t total = 0;
    levels_[static_cast<std::size_t>(k)].offsets(r_, j, total);
    return total;
  }

  // x_gen · w for w in degree j of F_k (k = −1 means the module itself).
  Vec<F> mult_level(int k, int j, std::size_t gen, std::span<const typename F::Elem> w) const {
    if (k < 0) {
      if (m_.dim(j) == 0) return Vec<F>(m_.dim(j + 1), f_.zero());
      return m_.act(gen, j, w);
    }
    const auto& lvl = levels_[static_cast<std::size_t>(k)];
    std::size_t tot_src = 0, tot_dst = 0;
    const auto off_src = lvl.offsets(r_, j, tot_src);
    const auto off_dst = lvl.offsets(r_, j + 1, tot_dst);
    Vec<F> out(tot_dst, f_.zero());
    for (std::size_t g = 0; g < lvl.degrees.size(); ++g) {
      const int dg = lvl.degrees[g];
      if (dg > j) break;
      const std::size_t len = r_.dim(j - dg);
      const std::size_t out_len = r_.dim(j + 1 - dg);
      for (std::size_t b = 0; b < len; ++b) {
        const auto& c = w[off_src[g] + b];
        if (f_.is_zero(c)) continue;
        f_.axpy(out.data() + off_dst[g], c, r_.mult_row(gen, j - dg, b).data(), 0, out_len);
      }
    }
    return out;
  }

  std::size_t new_module_generators(int j) {
    auto& lvl = levels_[0];
    const std::size_t dim = m_.dim(j);
    EchelonBuilder<F> eb(f_, dim);
    if (j > m_.start_degree) {
      const std::size_t prev = m_.dim(j - 1);
      for (std::size_t g = 0; g < r_.num_generators() && eb.rank() < dim; ++g)
        for (std::size_t b = 0; b < prev && eb.rank() < dim; ++b) {
          Vec<F> v(prev, f_.zero());
          v[b] = f_.one();
          eb.add(m_.act(g, j - 1, v));
        }
    }
    std::size_t count = 0;
    for (std::size_t b = 0; b < dim && eb.rank() < dim; ++b) {
      Vec<F> v(dim, f_.zero());
      v[b] = f_.one();
      if (eb.add(v)) {
        lvl.degrees.push_back(j);
        lvl.images.push_back(std::move(v));
        ++count;
      }
    }
    return count;
  }

  std::size_t new_syzygy_generators(int k, int j, const std::optional<Matrix<F>>& z_cur,
                                    const std::optional<Matrix<F>>& z_prev) {
    if (!z_cur) throw InternalError("resolution: kernel missing for a known cell");
    const Matrix<F>& z = *z_cur;
    if (z.rows() == 0) return 0;
    // Z_{k−1} in degree j, modulo A_1 · Z_{k−1} in degree j − 1.
    EchelonBuilder<F> eb(f_, z.cols());
    if (z_prev && z_prev->rows() > 0) {
      for (std::size_t g = 0; g < r_.num_generators() && eb.rank() < z.rows(); ++g)
        for (std::size_t r = 0; r < z_prev->rows() && eb.rank() < z.rows(); ++r)
          eb.add(mult_level(k - 1, j - 1, g, z_prev->row(r)));
    }
    auto& lvl = levels_[static_cast<std::size_t>(k)];
    std::size_t count = 0;
    for (std::size_t r = 0; r < z.rows() && eb.rank() < z.rows(); ++r) {
      if (eb.add(z.row(r))) {
        lvl.degrees.push_back(j);
        lvl.images.emplace_back(z.row(r).begin(), z.row(r).end());
        ++count;
      }
    }
    return count;
  }

  // Matrix of φ_k : (F_k)_j → (F_{k−1})_j (or M_j), rows generator-major.
  Matrix<F> build_phi(int k, int j, const std::optional<Matrix<F>>& phi_prev) const {
    const auto& lvl = levels_[static_cast<std::size_t>(k)];
    std::size_t rows = 0;
    const auto off = lvl.offsets(r_, j, rows);
    std::size_t prev_rows = 0;
    const auto off_prev = lvl.offsets(r_, j - 1, prev_rows);
    const std::size_t cols = dim_level(k - 1, j);
    Matrix<F> phi(f_, rows, cols);
    for (std::size_t g = 0; g < lvl.degrees.size(); ++g) {
      const int dg = lvl.degrees[g];
      if (dg > j) break;
      if (dg == j) {
        auto dst = phi.row(off[g]);
        std::copy(lvl.images[g].begin(), lvl.images[g].end(), dst.begin());
        continue;
      }
      if (!phi_prev) throw InternalError("resolution: previous differential missing");
      const int deg = j - dg;
      for (std::size_t b = 0; b < r_.dim(deg); ++b) {
        const Factor& fac = r_.factors[static_cast<std::size_t>(deg)][b];
        const auto v = mult_level(k - 1, j - 1, fac.gen, phi_prev->row(off_prev[g] + fac.parent));
        auto dst = phi.row(off[g] + b);
        std::copy(v.begin(), v.end(), dst.begin());
      }
    }
    return phi;
  }

  const GradedModuleTable<F>& m_;
  const GradedAlgebraTable<F>& r_;
  const F& f_;
  int I_;
  int J_;
  std::vector<FreeLevel<F>> levels_;
};

}  // namespace

template <class F>
Resolution<F> minimal_free_resolution(const GradedModuleTable<F>& m, int I, int J) {
  if (I < 0) throw std::invalid_argument("minimal_free_resolution: negative homological cutoff");
  return ResolutionBuilder<F>(m, I, J).run();
}

template <class F>
bool resolution_is_minimal(const Resolution<F>& r) {
  const auto& ring = *r.ring;
  for (std::size_t k = 1; k < r.generator_degrees.size(); ++k) {
    const auto& prev = r.generator_degrees[k - 1];
    for (std::size_t g = 0; g < r.generator_degrees[k].size(); ++g) {
      const int d = r.generator_degrees[k][g];
      const auto& img = r.generator_images[k][g];
      std::size_t offset = 0;
      for (std::size_t h = 0; h < prev.size() && prev[h] <= d; ++h) {
        if (prev[h] == d && !ring.field.is_zero(img.at(offset))) return false;
        offset += ring.dim(d - prev[h]);
      }
    }
  }
  return true;
}

template <class F>
BettiTable betti_trivial_module(std::shared_ptr<const GradedAlgebraTable<F>> t, int I, int J) {
  const auto k = trivial_module(t, J);
  return minimal_free_resolution(k, I, J).betti;
}

template <class F>
DiagonalVerdict is_koszul_to(std::shared_ptr<const GradedAlgebraTable<F>> t, int N) {
  const auto b = betti_trivial_module(t, N, N + 1);
  return scan_off_diagonal(b, N, 0);
}

#define KOSZUL_INSTANTIATE_RESOLUTION(F)                                                        \
  template struct GradedModuleTable<F>;                                                         \
  template GradedModuleTable<F> quotient_module(std::shared_ptr<const GradedAlgebraTable<F>>,   \
                                                const std::vector<SubspaceBasis<F>>&);          \
  template GradedModuleTable<F> ring_module(std::shared_ptr<const GradedAlgebraTable<F>>);      \
  template GradedModuleTable<F> trivial_module(std::shared_ptr<const GradedAlgebraTable<F>>, int); \
  template bool check_module_associativity(const GradedModuleTable<F>&);                        \
  template Resolution<F> minimal_free_resolution(const GradedModuleTable<F>&, int, int);        \
  template bool resolution_is_minimal(const Resolution<F>&);                                    \
  template BettiTable betti_trivial_module(std::shared_ptr<const GradedAlgebraTable<F>>, int, int); \
  template DiagonalVerdict is_koszul_to(std::shared_ptr<const GradedAlgebraTable<F>>, int);

KOSZUL_INSTANTIATE_RESOLUTION(PrimeField)
KOSZUL_INSTANTIATE_RESOLUTION(RationalField)

}  // namespace koszul
