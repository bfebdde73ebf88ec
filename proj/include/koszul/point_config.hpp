#pragma once

#include <vector>

#include "koszul/matrix.hpp"

namespace koszul {

/// d points of P^m, each normalized so that its first nonzero coordinate is 1.
template <class F>
struct PointConfiguration {
  F field;
  int ambient_dim = 0;
  std::vector<Vec<F>> points;

  std::size_t size() const { return points.size(); }
};

/// Normalizes and validates: rejects zero vectors, wrong lengths and repeated points.
template <class F>
PointConfiguration<F> make_configuration(const F& field, int ambient_dim, std::vector<Vec<F>> points);

}  // namespace koszul
