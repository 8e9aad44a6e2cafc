#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "bubble/error.hpp"
#include "bubble/poly.hpp"

namespace bubble {

using IntVector = std::vector<long>;
using IntMatrix = std::vector<IntVector>;
using RationalMatrix = std::vector<std::vector<Rational>>;
using ScalarVector = std::vector<GaussianRational>;
using PolyVector = std::vector<Poly>;

namespace linalg {

inline void check_square(const IntMatrix& gram, std::size_t n) {
  if (gram.size() != n) throw Error(ErrorCode::DimensionMismatch, "dimension mismatch");
  for (const auto& row : gram) {
    if (row.size() != n) throw Error(ErrorCode::DimensionMismatch, "gram is not square");
  }
}

/// u^T * gram * v, bilinear (no conjugation). Element types only need
/// `+`, `*` and multiplication by a `long` entry of `gram`.
template <class Result, class U, class V>
Result bilinear(const std::vector<U>& u, const std::vector<V>& v, const IntMatrix& gram) {
  if (u.size() != v.size()) throw Error(ErrorCode::DimensionMismatch, "dimension mismatch");
  check_square(gram, u.size());
  Result acc{};
  for (std::size_t i = 0; i < u.size(); ++i) {
    Result row{};
    bool any = false;
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (gram[i][j] == 0) continue;
      row += Result(v[j]) * Result(gram[i][j]);
      any = true;
    }
    if (any) acc += Result(u[i]) * row;
  }
  return acc;
}

/// Exact inverse of a nonsingular integer matrix.
RationalMatrix inverse(const IntMatrix& m);

BigInt determinant(const IntMatrix& m);

/// Rank over Q.
std::size_t rank(const IntMatrix& rows);

/// Z-basis of {x in Z^n : rows * x = 0}. The basis spans a saturated lattice.
IntMatrix integer_kernel(const IntMatrix& rows, std::size_t n);

/// (positive, negative) eigenvalue counts of a symmetric integer matrix,
/// obtained by exact congruence diagonalization.
std::pair<std::size_t, std::size_t> signature(const IntMatrix& sym);

/// gram * v as integers.
IntVector apply(const IntMatrix& gram, const IntVector& v);

}  // namespace linalg
}  // namespace bubble
