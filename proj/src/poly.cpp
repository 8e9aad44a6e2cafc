#include "bubble/poly.hpp"

#include "bubble/error.hpp"

namespace bubble {

Poly::Poly(GaussianRational c) {
  if (!c.is_zero()) coeffs_.push_back(std::move(c));
}

Poly::Poly(std::vector<GaussianRational> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

Poly Poly::monomial(GaussianRational c, std::size_t exponent) {
  if (c.is_zero()) return {};
  std::vector<GaussianRational> coeffs(exponent + 1);
  coeffs[exponent] = std::move(c);
  return Poly(std::move(coeffs));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

GaussianRational Poly::coeff(std::size_t exponent) const {
  return exponent < coeffs_.size() ? coeffs_[exponent] : GaussianRational{};
}

Order Poly::ord() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) return i;
  }
  return kInfiniteOrder;
}

GaussianRational Poly::leading_coeff() const {
  if (is_zero()) throw Error(ErrorCode::NoLeadingTerm, "no leading term");
  return coeffs_[ord()];
}

Poly Poly::divide_by_t_power(std::size_t k) const {
  if (is_zero()) return {};
  if (ord() < k) {
    throw Error(ErrorCode::InternalInvariant, "polynomial not divisible by t^" + std::to_string(k));
  }
  return Poly(std::vector<GaussianRational>(coeffs_.begin() + static_cast<std::ptrdiff_t>(k),
                                            coeffs_.end()));
}

GaussianRational Poly::eval(const GaussianRational& at) const {
  GaussianRational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

Poly Poly::compose(const Poly& inner) const {
  Poly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * inner + Poly(*it);
  return acc;
}

Poly Poly::rescale_variable(const GaussianRational& s) const {
  std::vector<GaussianRational> out(coeffs_.size());
  GaussianRational power(1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    out[i] = coeffs_[i] * power;
    power *= s;
  }
  return Poly(std::move(out));
}

Poly Poly::conj() const {
  std::vector<GaussianRational> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.conj());
  return Poly(std::move(out));
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<GaussianRational> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Poly& Poly::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

namespace {

std::string monomial_text(std::size_t e) {
  return e == 1 ? "t" : "t^" + std::to_string(e);
}

// Body of one term without its sign; `negative` reports the sign to pull out.
std::string term_body(const GaussianRational& c, std::size_t e, bool& negative) {
  std::string coeff;
  bool unit = false;
  negative = false;
  if (c.is_real()) {
    negative = c.re().sign() < 0;
    const Rational mag = c.re().abs();
    unit = mag == Rational(1);
    coeff = mag.to_string();
  } else if (c.re().is_zero()) {
    negative = c.im().sign() < 0;
    const Rational mag = c.im().abs();
    coeff = mag == Rational(1) ? "i" : mag.to_string() + "i";
  } else {
    coeff = c.to_string();
  }
  if (e == 0) return coeff;
  if (unit) return monomial_text(e);
  return coeff + "*" + monomial_text(e);
}

}  // namespace

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t e = 0; e < coeffs_.size(); ++e) {
    if (coeffs_[e].is_zero()) continue;
    bool negative = false;
    const std::string body = term_body(coeffs_[e], e, negative);
    if (first) {
      out += negative ? "-" + body : body;
      first = false;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

}  // namespace bubble
