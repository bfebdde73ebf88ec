#include "koszul/points.hpp"

#include <functional>
#include <map>

#include "koszul/rng.hpp"

namespace koszul {

template <class F>
PointConfiguration<F> make_configuration(const F& field, int ambient_dim, std::vector<Vec<F>> points) {
  if (ambient_dim < 0) throw InputError("ambient dimension must be nonnegative");
  if (points.empty()) throw InputError("configuration needs at least one point");
  const auto len = static_cast<std::size_t>(ambient_dim) + 1;
  for (std::size_t k = 0; k < points.size(); ++k) {
    auto& v = points[k];
    if (v.size() != len) {
      throw InputError("point " + std::to_string(k + 1) + " has " + std::to_string(v.size()) +
                       " coordinates, expected " + std::to_string(len));
    }
    std::size_t lead = 0;
    while (lead < len && field.is_zero(v[lead])) ++lead;
    if (lead == len) throw InputError("point " + std::to_string(k + 1) + " is the zero vector");
    const auto inv = field.inv(v[lead]);
    for (auto& x : v) x = field.mul(x, inv);
    for (std::size_t q = 0; q < k; ++q) {
      bool same = true;
      for (std::size_t i = 0; i < len && same; ++i) same = field.equal(points[q][i], v[i]);
      if (same) {
        throw InputError("points " + std::to_string(q + 1) + " and " + std::to_string(k + 1) +
                         " coincide");
      }
    }
  }
  return PointConfiguration<F>{field, ambient_dim, std::move(points)};
}

std::vector<std::vector<int>> monomial_basis(std::size_t num_vars, int n) {
  std::vector<std::vector<int>> out;
  if (num_vars == 0) return out;
  std::vector<int> cur(num_vars, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == num_vars) {
      cur[i] = left;
      out.push_back(cur);
      return;
    }
    for (int e = left; e >= 0; --e) {
      cur[i] = e;
      rec(i + 1, left - e);
    }
  };
  rec(0, n);
  return out;
}

template <class F>
Matrix<F> evaluation_matrix(const PointConfiguration<F>& c, int n) {
  const F& f = c.field;
  const auto monos = monomial_basis(static_cast<std::size_t>(c.ambient_dim) + 1, n);
  Matrix<F> e(f, monos.size(), c.size());
  for (std::size_t r = 0; r < monos.size(); ++r)
    for (std::size_t p = 0; p < c.size(); ++p) {
      auto v = f.one();
      for (std::size_t i = 0; i < monos[r].size(); ++i)
        for (int k = 0; k < monos[r][i]; ++k) v = f.mul(v, c.points[p][i]);
      e(r, p) = v;
    }
  return e;
}

template <class F>
SubspaceBasis<F> ideal_truncation(const PointConfiguration<F>& c, int n) {
  if (n < 0) throw std::invalid_argument("ideal_truncation: negative degree");
  return kernel(evaluation_matrix(c, n).transpose());
}

template <class F>
int span_dimension(const PointConfiguration<F>& c) {
  Matrix<F> m(c.field, 0, static_cast<std::size_t>(c.ambient_dim) + 1);
  for (const auto& p : c.points) m.append_row(p);
  return static_cast<int>(rank(m)) - 1;
}

namespace {

// Calls fn on each k-subset of {0..d−1} in lexicographic order until it returns false.
bool for_each_subset(std::size_t d, std::size_t k, const std::function<bool(const std::vector<std::size_t>&)>& fn) {
  if (k > d) return true;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (!fn(idx)) return false;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == d - k + i - 1) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<std::size_t> one_based(const std::vector<std::size_t>& idx) {
  std::vector<std::size_t> out;
  for (auto i : idx) out.push_back(i + 1);
  return out;
}

}  // namespace

template <class F>
GeneralPositionVerdict general_position_check(const PointConfiguration<F>& c) {
  GeneralPositionVerdict v;
  v.span_dim = span_dimension(c);
  const std::size_t limit = static_cast<std::size_t>(v.span_dim) + 1;
  for (std::size_t k = 2; k <= limit && v.general; ++k) {
    for_each_subset(c.size(), k, [&](const std::vector<std::size_t>& idx) {
      Matrix<F> m(c.field, 0, static_cast<std::size_t>(c.ambient_dim) + 1);
      for (auto i : idx) m.append_row(c.points[i]);
      if (rank(m) < k) {
        v.general = false;
        v.witness = one_based(idx);
        return false;
      }
      return true;
    });
  }
  return v;
}

template <class F>
IndependentConditionsVerdict impose_independent_conditions(const PointConfiguration<F>& c,
                                                           const SubspaceBasis<F>& forms, int n,
                                                           std::size_t k) {
  if (k > c.size()) throw std::invalid_argument("impose_independent_conditions: subset larger than configuration");
  const auto e = evaluation_matrix(c, n);
  if (forms.ambient_dim() != e.rows()) {
    throw std::invalid_argument("impose_independent_conditions: forms are not in Sym^n coordinates");
  }
  const auto values = multiply(forms.basis(), e);  // dim(forms) × d
  IndependentConditionsVerdict v;
  for_each_subset(c.size(), k, [&](const std::vector<std::size_t>& idx) {
    Matrix<F> sub(c.field, values.rows(), k);
    for (std::size_t r = 0; r < values.rows(); ++r)
      for (std::size_t j = 0; j < k; ++j) sub(r, j) = values(r, idx[j]);
    if (rank(sub) < k) {
      v.independent = false;
      v.witness = one_based(idx);
      return false;
    }
    return true;
  });
  return v;
}

template <class F>
QuadraticGenerationVerdict quadratic_generation_check(const PointConfiguration<F>& c, int N) {
  if (N < 3) throw std::invalid_argument("quadratic_generation_check: N must be ≥ 3");
  const F& f = c.field;
  const std::size_t nv = static_cast<std::size_t>(c.ambient_dim) + 1;
  QuadraticGenerationVerdict v;
  const auto i2 = ideal_truncation(c, 2);
  const auto mono2 = monomial_basis(nv, 2);
  for (int n = 0; n <= N; ++n) {
    const auto in = ideal_truncation(c, n);
    v.ideal_dims.push_back(in.dim());
    if (n < 3 || !v.quadratic) continue;
    const auto monos = monomial_basis(nv, n);
    std::map<std::vector<int>, std::size_t> pos;
    for (std::size_t k = 0; k < monos.size(); ++k) pos[monos[k]] = k;
    EchelonBuilder<F> eb(f, monos.size());
    for (const auto& mult : monomial_basis(nv, n - 2)) {
      for (std::size_t r = 0; r < i2.dim() && eb.rank() < in.dim(); ++r) {
        Vec<F> row(monos.size(), f.zero());
        const auto q = i2.vector(r);
        for (std::size_t k = 0; k < mono2.size(); ++k) {
          if (f.is_zero(q[k])) continue;
          auto e = mono2[k];
          for (std::size_t i = 0; i < nv; ++i) e[i] += mult[i];
          row[pos.at(e)] = q[k];
        }
        eb.add(row);
      }
    }
    if (eb.rank() != in.dim()) {
      v.quadratic = false;
      v.failing_degree = n;
    }
  }
  return v;
}

template <class F>
KempfVerdict kempf_predict(const PointConfiguration<F>& c) {
  KempfVerdict v;
  v.d = c.size();
  const auto gp = general_position_check(c);
  v.span_dim = gp.span_dim;
  v.general_position = gp.general;
  if (v.d == 1) {
    v.p = 0;
    v.status = KempfVerdict::Status::predicted_koszul;
    return v;
  }
  v.p = static_cast<int>(v.d) - v.span_dim;
  const bool in_range = 2 * static_cast<long>(v.p) <= static_cast<long>(v.d);
  v.status = (in_range && v.general_position) ? KempfVerdict::Status::predicted_koszul
                                              : KempfVerdict::Status::out_of_range;
  return v;
}

template <class F>
KempfReport verify_kempf(const PointConfiguration<F>& c, int N) {
  KempfReport r;
  r.prediction = kempf_predict(c);
  r.quadratic = quadratic_generation_check(c, std::max(N, 3));
  const auto ring = model_point_ring(c, N + 1);
  r.hilbert = ring.table->dims;
  r.betti = betti_trivial_module(ring.table, N, N + 1);
  r.koszul = scan_off_diagonal(r.betti, N, 0);
  return r;
}

std::vector<std::vector<long>> random_point_coordinates(std::size_t d, int span, std::uint64_t seed) {
  if (span < 0) throw InputError("span dimension must be nonnegative");
  if (d == 0) throw InputError("number of points must be positive");
  if (d < static_cast<std::size_t>(span) + 1) {
    throw InputError(std::to_string(d) + " points cannot span P^" + std::to_string(span));
  }
  CounterRng rng(seed, 0x9017);
  const RationalField q;
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<std::vector<long>> coords(d, std::vector<long>(static_cast<std::size_t>(span) + 1));
    for (auto& p : coords)
      for (auto& x : p) x = rng.uniform(-9, 9);
    try {
      auto c = configuration_from_integers(q, span, coords);
      auto gp = general_position_check(c);
      if (gp.general && gp.span_dim == span) return coords;
    } catch (const InputError&) {
      // zero or repeated point; draw again
    }
  }
  throw InputError("could not draw a general-position configuration from the seed");
}

template <class F>
PointConfiguration<F> configuration_from_integers(const F& field, int ambient_dim,
                                                  const std::vector<std::vector<long>>& coords) {
  std::vector<Vec<F>> pts;
  for (const auto& p : coords) {
    Vec<F> v;
    for (long x : p) v.push_back(field.from_int(x));
    pts.push_back(std::move(v));
  }
  return make_configuration(field, ambient_dim, std::move(pts));
}

template <class F>
PointConfiguration<F> random_configuration(const F& field, std::size_t d, int span, std::uint64_t seed) {
  return configuration_from_integers(field, span, random_point_coordinates(d, span, seed));
}

#define KOSZUL_INSTANTIATE_POINTS(F)                                                              \
  template PointConfiguration<F> make_configuration(const F&, int, std::vector<Vec<F>>);          \
  template Matrix<F> evaluation_matrix(const PointConfiguration<F>&, int);                        \
  template SubspaceBasis<F> ideal_truncation(const PointConfiguration<F>&, int);                  \
  template int span_dimension(const PointConfiguration<F>&);                                      \
  template GeneralPositionVerdict general_position_check(const PointConfiguration<F>&);           \
  template IndependentConditionsVerdict impose_independent_conditions(                            \
      const PointConfiguration<F>&, const SubspaceBasis<F>&, int, std::size_t);                   \
  template QuadraticGenerationVerdict quadratic_generation_check(const PointConfiguration<F>&, int); \
  template KempfVerdict kempf_predict(const PointConfiguration<F>&);                              \
  template KempfReport verify_kempf(const PointConfiguration<F>&, int);                           \
  template PointConfiguration<F> configuration_from_integers(const F&, int,                       \
                                                             const std::vector<std::vector<long>>&); \
  template PointConfiguration<F> random_configuration(const F&, std::size_t, int, std::uint64_t);

KOSZUL_INSTANTIATE_POINTS(PrimeField)
KOSZUL_INSTANTIATE_POINTS(RationalField)

}  // namespace koszul
