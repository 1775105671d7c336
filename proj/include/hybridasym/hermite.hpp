#pragma once

#include <stdexcept>
#include <vector>

#include "hybridasym/polynomial.hpp"

namespace hybridasym {

// One interpolation node: an abscissa plus the prescribed value and
// derivatives 0..c-1 at that point.
template <typename T>
struct HermiteNode {
  T x;
  std::vector<T> derivatives;
};

// Hermite interpolation by generalized (repeated-node) divided differences.
// Returns the unique polynomial of degree <= (sum of contact orders) - 1
// matching every prescribed derivative.  Exact over an exact field T.
template <typename T>
Polynomial<T> hermite_interpolate(const std::vector<HermiteNode<T>>& nodes) {
  if (nodes.empty()) throw std::invalid_argument("hermite_interpolate: no nodes");
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].derivatives.empty())
      throw std::invalid_argument("hermite_interpolate: node without data");
    for (std::size_t j = i + 1; j < nodes.size(); ++j)
      if (nodes[i].x == nodes[j].x)
        throw std::invalid_argument("hermite_interpolate: duplicate nodes");
  }

  std::vector<T> z;       // abscissas with multiplicity
  std::vector<std::size_t> origin;
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t k = 0; k < nodes[i].derivatives.size(); ++k) {
      z.push_back(nodes[i].x);
      origin.push_back(i);
    }
  std::size_t m = z.size();

  // table[j] holds f[z_i .. z_{i+j}] as j advances.
  std::vector<T> cur(m), prev(m);
  std::vector<T> newton(m);
  T fact(1);
  for (std::size_t i = 0; i < m; ++i) cur[i] = nodes[origin[i]].derivatives[0];
  newton[0] = cur[0];
  for (std::size_t j = 1; j < m; ++j) {
    fact = fact * T(long(j));
    std::swap(prev, cur);
    for (std::size_t i = 0; i + j < m; ++i) {
      if (z[i] == z[i + j]) {
        // all abscissas in between coincide: f[x,...,x] = f^{(j)}(x)/j!
        cur[i] = nodes[origin[i]].derivatives[j] / fact;
      } else {
        cur[i] = (prev[i + 1] - prev[i]) / (z[i + j] - z[i]);
      }
    }
    newton[j] = cur[0];
  }

  // Expand the Newton form sum_j newton[j] prod_{i<j} (X - z_i).
  Polynomial<T> result;
  Polynomial<T> basis(T(1));
  Polynomial<T> X = Polynomial<T>::variable();
  for (std::size_t j = 0; j < m; ++j) {
    result += basis * Polynomial<T>(newton[j]);
    basis = basis * (X - Polynomial<T>(z[j]));
  }
  return result;
}

}  // namespace hybridasym
