#include "bubble/gaussian.hpp"

#include "bubble/error.hpp"

namespace bubble {

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  const Rational n = norm();
  return {re_ / n, -im_ / n};
}

namespace {

std::string imaginary_magnitude(const Rational& mag) {
  return mag == Rational(1) ? "i" : mag.to_string() + "i";
}

}  // namespace

std::string GaussianRational::to_string() const {
  if (im_.is_zero()) return re_.to_string();
  if (re_.is_zero()) return (im_.sign() < 0 ? "-" : "") + imaginary_magnitude(im_.abs());
  return "(" + re_.to_string() + (im_.sign() < 0 ? "-" : "+") + imaginary_magnitude(im_.abs()) +
         ")";
}

}  // namespace bubble
