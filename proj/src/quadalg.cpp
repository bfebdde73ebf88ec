#include "koszul/quadalg.hpp"

#include <map>
#include <set>
#include <sstream>

namespace koszul {

std::vector<std::string> default_generator_names(std::size_t n) {
  static const char* small[] = {"x", "y", "z", "w"};
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(n <= 4 ? std::string(small[i]) : "x" + std::to_string(i + 1));
  }
  return out;
}

template <class F>
Matrix<F> commutator_rows(const F& field, std::size_t n) {
  Matrix<F> m(field, 0, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec<F> v(n * n, field.zero());
      v[i * n + j] = field.one();
      v[j * n + i] = field.neg(field.one());
      m.append_row(v);
    }
  return m;
}

template <class F>
QuadraticPresentation<F> make_presentation(const F& field, std::vector<std::string> generators,
                                           bool commutative, const Matrix<F>& relation_rows) {
  const std::size_t n = generators.size();
  if (n == 0) throw InputError("presentation needs at least one generator");
  std::set<std::string> seen;
  for (const auto& g : generators) {
    if (g.empty()) throw InputError("empty generator name");
    if (!seen.insert(g).second) throw InputError("duplicate generator name '" + g + "'");
  }
  if (relation_rows.rows() > 0 && relation_rows.cols() != n * n) {
    throw InputError("relation vectors must have n² = " + std::to_string(n * n) + " entries");
  }
  EchelonBuilder<F> eb(field, n * n);
  eb.add_rows(relation_rows);
  if (commutative) eb.add_rows(commutator_rows(field, n));
  return QuadraticPresentation<F>{field, std::move(generators), commutative, eb.finish()};
}

template <class F>
QuadraticPresentation<F> symmetric_presentation(const F& field, std::size_t n) {
  return make_presentation(field, default_generator_names(n), true, Matrix<F>(field, 0, n * n));
}

template <class F>
QuadraticPresentation<F> exterior_presentation(const F& field, std::size_t n) {
  Matrix<F> m(field, 0, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Vec<F> v(n * n, field.zero());
      v[i * n + j] = field.add(v[i * n + j], field.one());
      v[j * n + i] = field.add(v[j * n + i], field.one());
      m.append_row(v);
    }
  return make_presentation(field, default_generator_names(n), false, m);
}

template <class F>
QuadraticPresentation<F> free_presentation(const F& field, std::size_t n) {
  return make_presentation(field, default_generator_names(n), false, Matrix<F>(field, 0, n * n));
}

template <class F>
GradedAlgebraTable<F> expand_table(const QuadraticPresentation<F>& p, int N) {
  const F& f = p.field;
  const std::size_t n = p.num_generators();
  const auto& R = p.relations;
  RelationFn<F> rel = [&](int m, const GradedAlgebraTable<F>& t) -> Matrix<F> {
    if (m < 2) return Matrix<F>(f, 0, n);
    const std::size_t prev = t.dim(m - 1);
    const std::size_t base = t.dim(m - 2);
    Matrix<F> out(f, 0, n * prev);
    Vec<F> row(n * prev, f.zero());
    for (std::size_t r = 0; r < R.dim(); ++r) {
      const auto rv = R.vector(r);
      for (std::size_t b = 0; b < base; ++b) {
        std::fill(row.begin(), row.end(), f.zero());
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) {
            const auto& c = rv[i * n + j];
            if (f.is_zero(c)) continue;
            f.axpy(row.data() + i * prev, c, t.mult_row(j, m - 2, b).data(), 0, prev);
          }
        out.append_row(row);
      }
    }
    return out;
  };
  return build_quotient_table(f, n, N, rel, p.generators);
}

template <class F>
QuadraticPresentation<F> quadratic_dual(const QuadraticPresentation<F>& p) {
  std::vector<std::string> names;
  for (const auto& g : p.generators) names.push_back(g + "*");
  return QuadraticPresentation<F>{p.field, std::move(names), false, annihilator(p.relations)};
}

template <class F>
NumericVerdict koszul_numeric_check(const QuadraticPresentation<F>& p, int N) {
  if (N < 2) throw std::invalid_argument("koszul_numeric_check: N must be ≥ 2");
  NumericVerdict v;
  v.hilbert = expand_table(p, N).dims;
  v.dual_hilbert = expand_table(quadratic_dual(p), N).dims;
  v.coefficients = duality_product(v.hilbert, v.dual_hilbert, N);
  for (int m = 0; m <= N; ++m) {
    const long long expected = m == 0 ? 1 : 0;
    if (v.coefficients[static_cast<std::size_t>(m)] != expected) {
      v.consistent = false;
      v.failing_degree = m;
      break;
    }
  }
  return v;
}

// ---------------------------------------------------------------------------

namespace {

template <class F>
std::string subspace_key(const SubspaceBasis<F>& s) {
  std::ostringstream os;
  os << s.dim() << ':';
  for (auto p : s.pivots()) os << p << ',';
  os << '|';
  for (const auto& x : s.basis().entries()) os << s.field().to_string(x) << ',';
  return os.str();
}

}  // namespace

template <class F>
DistributivityVerdict distributivity_check(const QuadraticPresentation<F>& p, int n,
                                           const DistributivityBudget& budget) {
  if (n < 3) throw std::invalid_argument("distributivity_check: degree must be ≥ 3");
  const F& f = p.field;
  const std::size_t g = p.num_generators();
  DistributivityVerdict out;
  std::size_t dim = 1;
  for (int k = 0; k < n; ++k) {
    dim *= g;
    if (dim > budget.max_tensor_dim) {
      out.detail = "tensor power dimension exceeds budget of " + std::to_string(budget.max_tensor_dim);
      return out;
    }
  }

  // Generators R_i of the lattice.
  std::vector<SubspaceBasis<F>> elements;
  std::map<std::string, std::size_t> index;
  auto intern = [&](SubspaceBasis<F> s) -> std::size_t {
    auto key = subspace_key(s);
    auto it = index.find(key);
    if (it != index.end()) return it->second;
    index.emplace(std::move(key), elements.size());
    elements.push_back(std::move(s));
    return elements.size() - 1;
  };
  const auto& R = p.relations;
  for (int i = 1; i <= n - 1; ++i) {
    std::size_t left = 1, right = 1;
    for (int k = 0; k < i - 1; ++k) left *= g;
    for (int k = 0; k < n - i - 1; ++k) right *= g;
    EchelonBuilder<F> eb(f, dim);
    Vec<F> v(dim, f.zero());
    for (std::size_t w = 0; w < left; ++w)
      for (std::size_t r = 0; r < R.dim(); ++r)
        for (std::size_t u = 0; u < right; ++u) {
          std::fill(v.begin(), v.end(), f.zero());
          const auto rv = R.vector(r);
          for (std::size_t ab = 0; ab < g * g; ++ab) v[(w * g * g + ab) * right + u] = rv[ab];
          eb.add(v);
        }
    intern(eb.finish());
  }

  // Closure under sum and intersection.
  std::map<std::pair<std::size_t, std::size_t>, std::pair<std::size_t, std::size_t>> ops;
  std::size_t pair_ops = 0;
  bool grew = true;
  while (grew) {
    grew = false;
    const std::size_t count = elements.size();
    for (std::size_t a = 0; a < count; ++a)
      for (std::size_t b = a + 1; b < count; ++b) {
        if (ops.count({a, b})) continue;
        if (++pair_ops > budget.max_pair_operations) {
          out.lattice_size = elements.size();
          out.detail = "closure exceeded the operation budget of " +
                       std::to_string(budget.max_pair_operations);
          return out;
        }
        auto join = subspace_sum(elements[a], elements[b]);
        auto meet = subspace_intersect(elements[a], elements[b]);
        const std::size_t before = elements.size();
        const std::size_t j = intern(std::move(join));
        const std::size_t m = intern(std::move(meet));
        ops[{a, b}] = {j, m};
        if (elements.size() != before) grew = true;
        if (elements.size() > budget.max_elements) {
          out.lattice_size = elements.size();
          out.detail = "lattice exceeds " + std::to_string(budget.max_elements) + " elements";
          return out;
        }
      }
  }

  const std::size_t k = elements.size();
  auto join = [&](std::size_t a, std::size_t b) {
    if (a == b) return a;
    auto [x, y] = std::minmax(a, b);
    return ops.at({x, y}).first;
  };
  auto meet = [&](std::size_t a, std::size_t b) {
    if (a == b) return a;
    auto [x, y] = std::minmax(a, b);
    return ops.at({x, y}).second;
  };
  out.lattice_size = k;
  for (std::size_t x = 0; x < k; ++x)
    for (std::size_t y = 0; y < k; ++y)
      for (std::size_t z = y + 1; z < k; ++z) {
        if (meet(x, join(y, z)) != join(meet(x, y), meet(x, z))) {
          out.status = DistributivityVerdict::Status::not_distributive;
          out.detail = "distributive law fails on lattice elements of dimensions " +
                       std::to_string(elements[x].dim()) + ", " + std::to_string(elements[y].dim()) +
                       ", " + std::to_string(elements[z].dim());
          return out;
        }
      }
  out.status = DistributivityVerdict::Status::distributive;
  out.detail = "closure has " + std::to_string(k) + " elements";
  return out;
}

#define KOSZUL_INSTANTIATE_QUADALG(F)                                                          \
  template Matrix<F> commutator_rows(const F&, std::size_t);                                   \
  template QuadraticPresentation<F> make_presentation(const F&, std::vector<std::string>, bool, \
                                                      const Matrix<F>&);                       \
  template QuadraticPresentation<F> symmetric_presentation(const F&, std::size_t);             \
  template QuadraticPresentation<F> exterior_presentation(const F&, std::size_t);              \
  template QuadraticPresentation<F> free_presentation(const F&, std::size_t);                  \
  template GradedAlgebraTable<F> expand_table(const QuadraticPresentation<F>&, int);           \
  template QuadraticPresentation<F> quadratic_dual(const QuadraticPresentation<F>&);           \
  template NumericVerdict koszul_numeric_check(const QuadraticPresentation<F>&, int);          \
  template DistributivityVerdict distributivity_check(const QuadraticPresentation<F>&, int,    \
                                                      const DistributivityBudget&);

KOSZUL_INSTANTIATE_QUADALG(PrimeField)
KOSZUL_INSTANTIATE_QUADALG(RationalField)

}  // namespace koszul
