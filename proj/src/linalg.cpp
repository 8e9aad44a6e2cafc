#include "bubble/linalg.hpp"

#include <algorithm>

namespace bubble::linalg {

namespace {

using BigMatrix = std::vector<std::vector<BigInt>>;

RationalMatrix to_rational(const IntMatrix& m) {
  RationalMatrix out;
  out.reserve(m.size());
  for (const auto& row : m) {
    std::vector<Rational> r;
    r.reserve(row.size());
    for (long x : row) r.emplace_back(x);
    out.push_back(std::move(r));
  }
  return out;
}

// Row-reduces `rows` (first `width` columns) to echelon form with unimodular
// integer row operations. Returns the number of nonzero rows.
std::size_t integer_echelon(BigMatrix& rows, std::size_t width) {
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < width && pivot_row < rows.size(); ++col) {
    for (;;) {
      // smallest nonzero |entry| at or below pivot_row
      std::size_t best = rows.size();
      for (std::size_t r = pivot_row; r < rows.size(); ++r) {
        if (rows[r][col] == 0) continue;
        if (best == rows.size() || abs(rows[r][col]) < abs(rows[best][col])) best = r;
      }
      if (best == rows.size()) break;
      std::swap(rows[pivot_row], rows[best]);
      bool done = true;
      for (std::size_t r = pivot_row + 1; r < rows.size(); ++r) {
        if (rows[r][col] == 0) continue;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), rows[r][col].get_mpz_t(), rows[pivot_row][col].get_mpz_t());
        for (std::size_t c = 0; c < rows[r].size(); ++c) rows[r][c] -= q * rows[pivot_row][c];
        if (rows[r][col] != 0) done = false;
      }
      if (done) {
        ++pivot_row;
        break;
      }
    }
  }
  return pivot_row;
}

// Hermite normal form of a full-row-rank integer basis: positive pivots and
// entries above each pivot reduced into [0, pivot).
void hermite_reduce(BigMatrix& basis) {
  const std::size_t width = basis.empty() ? 0 : basis.front().size();
  integer_echelon(basis, width);
  std::size_t col = 0;
  for (std::size_t r = 0; r < basis.size(); ++r) {
    while (col < width && basis[r][col] == 0) ++col;
    if (col == width) break;
    if (basis[r][col] < 0) {
      for (auto& x : basis[r]) x = -x;
    }
    for (std::size_t above = 0; above < r; ++above) {
      BigInt q;
      mpz_fdiv_q(q.get_mpz_t(), basis[above][col].get_mpz_t(), basis[r][col].get_mpz_t());
      if (q == 0) continue;
      for (std::size_t c = 0; c < width; ++c) basis[above][c] -= q * basis[r][c];
    }
    ++col;
  }
}

long to_long(const BigInt& x) {
  if (!x.fits_slong_p()) throw Error(ErrorCode::InternalInvariant, "integer overflow in lattice basis");
  return x.get_si();
}

}  // namespace

RationalMatrix inverse(const IntMatrix& m) {
  const std::size_t n = m.size();
  check_square(m, n);
  RationalMatrix a = to_rational(m);
  RationalMatrix inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = Rational(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) throw Error(ErrorCode::DivisionByZero, "singular matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    const Rational scale = a[col][col].inverse();
    for (std::size_t c = 0; c < n; ++c) {
      a[col][c] *= scale;
      inv[col][c] *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      const Rational f = a[r][col];
      for (std::size_t c = 0; c < n; ++c) {
        a[r][c] -= f * a[col][c];
        inv[r][c] -= f * inv[col][c];
      }
    }
  }
  return inv;
}

BigInt determinant(const IntMatrix& m) {
  const std::size_t n = m.size();
  check_square(m, n);
  if (n == 0) return 1;
  BigMatrix a(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
  }
  // Bareiss fraction-free elimination
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

std::size_t rank(const IntMatrix& rows) {
  if (rows.empty()) return 0;
  RationalMatrix a = to_rational(rows);
  const std::size_t width = a.front().size();
  std::size_t r = 0;
  for (std::size_t col = 0; col < width && r < a.size(); ++col) {
    std::size_t piv = r;
    while (piv < a.size() && a[piv][col].is_zero()) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      if (a[i][col].is_zero()) continue;
      const Rational f = a[i][col] / a[r][col];
      for (std::size_t c = col; c < width; ++c) a[i][c] -= f * a[r][c];
    }
    ++r;
  }
  return r;
}

IntMatrix integer_kernel(const IntMatrix& rows, std::size_t n) {
  for (const auto& row : rows) {
    if (row.size() != n) throw Error(ErrorCode::DimensionMismatch, "dimension mismatch");
  }
  const std::size_t m = rows.size();
  // [A^T | I]: unimodular reduction of the left block leaves kernel rows on the right.
  BigMatrix aug(n, std::vector<BigInt>(m + n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) aug[i][j] = rows[j][i];
    aug[i][m + i] = 1;
  }
  const std::size_t nonzero = integer_echelon(aug, m);
  BigMatrix kernel;
  for (std::size_t i = nonzero; i < n; ++i) {
    kernel.emplace_back(aug[i].begin() + static_cast<std::ptrdiff_t>(m), aug[i].end());
  }
  hermite_reduce(kernel);
  IntMatrix out;
  out.reserve(kernel.size());
  for (const auto& row : kernel) {
    IntVector v;
    v.reserve(n);
    for (const auto& x : row) v.push_back(to_long(x));
    out.push_back(std::move(v));
  }
  return out;
}

std::pair<std::size_t, std::size_t> signature(const IntMatrix& sym) {
  const std::size_t n = sym.size();
  check_square(sym, n);
  RationalMatrix a = to_rational(sym);
  std::size_t pos = 0;
  std::size_t neg = 0;
  auto swap_index = [&](std::size_t i, std::size_t j) {
    std::swap(a[i], a[j]);
    for (auto& row : a) std::swap(row[i], row[j]);
  };
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv][piv].is_zero()) ++piv;
    if (piv < n) {
      swap_index(k, piv);
    } else {
      // all remaining diagonal entries vanish: x_k += x_j makes a[k][k] = 2 a[k][j]
      std::size_t j = k + 1;
      while (j < n && a[k][j].is_zero()) ++j;
      if (j == n) {
        bool rest_zero = true;
        for (std::size_t r = k; r < n && rest_zero; ++r) {
          for (std::size_t c = k; c < n; ++c) {
            if (!a[r][c].is_zero()) {
              rest_zero = false;
              break;
            }
          }
        }
        if (rest_zero) break;
        // row k is zero but something below is not; move it to the end
        std::size_t other = k + 1;
        while (other < n) {
          bool zero_row = true;
          for (std::size_t c = k; c < n; ++c) zero_row = zero_row && a[other][c].is_zero();
          if (!zero_row) break;
          ++other;
        }
        swap_index(k, other);
        --k;
        continue;
      }
      for (std::size_t c = 0; c < n; ++c) a[k][c] += a[j][c];
      for (std::size_t r = 0; r < n; ++r) a[r][k] += a[r][j];
    }
    const Rational p = a[k][k];
    (p.sign() > 0 ? pos : neg) += 1;
    for (std::size_t r = k + 1; r < n; ++r) {
      if (a[r][k].is_zero()) continue;
      const Rational f = a[r][k] / p;
      for (std::size_t c = k; c < n; ++c) a[r][c] -= f * a[k][c];
      a[r][k] = Rational(0);
    }
    for (std::size_t c = k + 1; c < n; ++c) a[k][c] = Rational(0);
  }
  return {pos, neg};
}

IntVector apply(const IntMatrix& gram, const IntVector& v) {
  check_square(gram, v.size());
  IntVector out(v.size(), 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += gram[i][j] * v[j];
  }
  return out;
}

}  // namespace bubble::linalg
