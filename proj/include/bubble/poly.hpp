#pragma once

#include <cstddef>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "bubble/gaussian.hpp"

namespace bubble {

/// Order of vanishing at t = 0. `kInfiniteOrder` stands for the zero polynomial.
using Order = std::size_t;
inline constexpr Order kInfiniteOrder = std::numeric_limits<Order>::max();

/// Univariate polynomial in t over Q(i). Coefficients are indexed by exponent;
/// trailing zeros are always trimmed, so the zero polynomial has no coefficients.
class Poly {
 public:
  Poly() = default;
  Poly(GaussianRational c);  // NOLINT: constants embed
  template <std::integral I>
  Poly(I c) : Poly(GaussianRational(c)) {}  // NOLINT
  explicit Poly(std::vector<GaussianRational> coefficients);

  static Poly t() { return monomial(1, 1); }
  static Poly monomial(GaussianRational c, std::size_t exponent);

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; 0 for constants and for zero.
  std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  const std::vector<GaussianRational>& coefficients() const { return coeffs_; }
  /// Coefficient of t^exponent (zero beyond the degree).
  GaussianRational coeff(std::size_t exponent) const;

  Order ord() const;
  /// Coefficient at t^ord; throws NoLeadingTerm on zero.
  GaussianRational leading_coeff() const;

  /// Exact division by t^k; requires ord() >= k.
  Poly divide_by_t_power(std::size_t k) const;
  GaussianRational eval(const GaussianRational& at) const;
  /// p(q(t))
  Poly compose(const Poly& inner) const;
  /// p(s*t)
  Poly rescale_variable(const GaussianRational& s) const;
  Poly conj() const;

  std::string to_string() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const GaussianRational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) { Poly r = a; return r *= b; }
  friend Poly operator*(Poly a, const GaussianRational& c) { return a *= c; }
  friend Poly operator*(const GaussianRational& c, Poly a) { return a *= c; }
  friend Poly operator*(Poly a, const Rational& c) { return a *= GaussianRational(c); }
  friend Poly operator*(const Rational& c, Poly a) { return a *= GaussianRational(c); }

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void trim();

  std::vector<GaussianRational> coeffs_;
};

inline Order ord(const Poly& p) { return p.ord(); }
inline GaussianRational leading_coeff(const Poly& p) { return p.leading_coeff(); }

struct ParseOptions {
  std::size_t max_exponent = 1'000'000;
};

/// Reads a polynomial literal such as "t^2 + 1/2*t" or "(3+2i)*t^3 - t".
/// Throws ParseError carrying the byte offset of the failure.
Poly parse_poly(std::string_view text, const ParseOptions& options = {});

/// Same grammar, restricted to a single coefficient (no t).
GaussianRational parse_scalar(std::string_view text);

}  // namespace bubble
