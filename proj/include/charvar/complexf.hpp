#pragma once

#include <cmath>
#include <complex>

#include "charvar/errors.hpp"

namespace charvar {

// Complex floating scalar for the evaluation boundary. Components must be
// finite; symbolic arithmetic never touches this type.
class ComplexF {
 public:
  ComplexF() : re_(0.0), im_(0.0) {}
  ComplexF(double re, double im = 0.0) : re_(re), im_(im) {
    if (!std::isfinite(re_) || !std::isfinite(im_))
      throw DomainError("ComplexF: non-finite component");
  }
  explicit ComplexF(std::complex<double> z) : ComplexF(z.real(), z.imag()) {}

  double re() const { return re_; }
  double im() const { return im_; }
  std::complex<double> std() const { return {re_, im_}; }
  double abs() const { return std::hypot(re_, im_); }

  ComplexF operator-() const { return ComplexF(-re_, -im_); }
  ComplexF operator+(const ComplexF& o) const { return ComplexF(re_ + o.re_, im_ + o.im_); }
  ComplexF operator-(const ComplexF& o) const { return ComplexF(re_ - o.re_, im_ - o.im_); }
  ComplexF operator*(const ComplexF& o) const {
    return ComplexF(re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_);
  }
  ComplexF operator/(const ComplexF& o) const { return ComplexF(std() / o.std()); }
  ComplexF& operator+=(const ComplexF& o) { return *this = *this + o; }
  ComplexF& operator-=(const ComplexF& o) { return *this = *this - o; }
  ComplexF& operator*=(const ComplexF& o) { return *this = *this * o; }

  friend bool operator==(const ComplexF&, const ComplexF&) = default;

 private:
  double re_;
  double im_;
};

}  // namespace charvar
