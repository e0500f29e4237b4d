#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>

namespace parq {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;
using Complex = std::complex<double>;

/// Gaussian rational: re + im*i with exact rational components.
/// Exact backend for the parabolic quandle and the polynomial engine;
/// the floating backend is std::complex<double>.
struct GaussRat {
  Rational re{0};
  Rational im{0};

  GaussRat() = default;
  GaussRat(long r) : re(r) {}
  GaussRat(Rational r) : re(std::move(r)) {}
  GaussRat(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static GaussRat i() { return GaussRat(Rational(0), Rational(1)); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  GaussRat conj() const { return {re, -im}; }

  friend GaussRat operator+(const GaussRat& a, const GaussRat& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussRat operator-(const GaussRat& a, const GaussRat& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussRat operator-(const GaussRat& a) { return {-a.re, -a.im}; }
  friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussRat operator/(const GaussRat& a, const GaussRat& b) {
    Rational n = b.re * b.re + b.im * b.im;
    if (n == 0) throw std::domain_error("GaussRat: division by zero");
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
  }
  GaussRat& operator+=(const GaussRat& b) { return *this = *this + b; }
  GaussRat& operator-=(const GaussRat& b) { return *this = *this - b; }
  GaussRat& operator*=(const GaussRat& b) { return *this = *this * b; }

  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }
  friend bool operator<(const GaussRat& a, const GaussRat& b) {
    if (a.re != b.re) return a.re < b.re;
    return a.im < b.im;
  }

  Complex to_complex() const {
    return {re.convert_to<double>(), im.convert_to<double>()};
  }

  std::string str() const {
    std::ostringstream os;
    if (im == 0) {
      os << re;
    } else if (re == 0) {
      os << im << "*i";
    } else {
      os << re << (im > 0 ? "+" : "") << im << "*i";
    }
    return os.str();
  }
};

inline GaussRat conj(const GaussRat& z) { return z.conj(); }

/// Number-field shims so the parabolic formulas can be written once for
/// GaussRat, std::complex<double>, and polynomial coefficients alike.
inline Complex to_complex(const Complex& z) { return z; }
inline Complex to_complex(const GaussRat& z) { return z.to_complex(); }

inline bool is_zero(const GaussRat& z) { return z.is_zero(); }
inline bool is_zero(const Complex& z) { return z == Complex(0.0, 0.0); }

/// Distance from z to the nearest Gaussian integer.
inline double gaussian_integer_distance(Complex z) {
  double dr = z.real() - std::round(z.real());
  double di = z.imag() - std::round(z.imag());
  return std::hypot(dr, di);
}

/// Flush -0.0 components to +0.0 (serialization hygiene).
inline Complex canonical_zero(Complex z) {
  return {z.real() + 0.0, z.imag() + 0.0};
}

/// Sign normalization on C/{±1}: representative with Re > 0, or Re == 0 and
/// Im >= 0. Used for traces and serialized coordinates.
inline Complex sign_normalize(Complex z) {
  if (z.real() < 0 || (z.real() == 0 && z.imag() < 0)) return canonical_zero(-z);
  return canonical_zero(z);
}
inline GaussRat sign_normalize(const GaussRat& z) {
  if (z.re < 0 || (z.re == 0 && z.im < 0)) return -z;
  return z;
}

}  // namespace parq
