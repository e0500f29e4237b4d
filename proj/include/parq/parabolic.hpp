#pragma once

#include <array>
#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "parq/arith.hpp"

namespace parq {

/// One element of the parabolic quandle Par = (C^2 \ {0}) / ±, stored as a
/// representative (x, y). The scalar type R is a commutative ring: the same
/// formulas serve the exact backend (GaussRat), the floating backend
/// (std::complex<double>) and the symbolic one (multivariate polynomials).
template <class R>
struct ParVec {
  R x{};
  R y{};
};

using ParC = ParVec<Complex>;
using ParQ = ParVec<GaussRat>;

/// Quandle operation of Par:
///   [x1,y1] * [x2,y2] = [x1 + x1 x2 y2 - y1 x2^2,  x1 y2^2 + y1 - x2 y2 y1].
/// Linear in the first argument: v * w = P(w)^{-1} v as column vectors.
template <class R>
ParVec<R> par_op(const ParVec<R>& v, const ParVec<R>& w) {
  return {v.x + v.x * w.x * w.y - v.y * w.x * w.x,
          v.x * w.y * w.y + v.y - w.x * w.y * v.y};
}

/// Inverse operation: the unique u with par_op(u, w) = v. Closed form
/// u = P(w) v, i.e. [x1 - x1 x2 y2 + x2^2 y1,  y1 - x1 y2^2 + x2 y2 y1].
template <class R>
ParVec<R> par_op_inv(const ParVec<R>& v, const ParVec<R>& w) {
  return {v.x - v.x * w.x * w.y + w.x * w.x * v.y,
          v.y - v.x * w.y * w.y + w.x * w.y * v.y};
}

/// 2x2 matrix over R, row major.
template <class R>
struct Mat2 {
  R a{}, b{}, c{}, d{};

  static Mat2 identity() { return {R(1), R(0), R(0), R(1)}; }

  R trace() const { return a + d; }
  R det() const { return a * d - b * c; }

  /// Inverse of a determinant-one matrix (adjugate).
  Mat2 inv_unimodular() const { return {d, -b, -c, a}; }

  friend Mat2 operator*(const Mat2& p, const Mat2& q) {
    return {p.a * q.a + p.b * q.c, p.a * q.b + p.b * q.d,
            p.c * q.a + p.d * q.c, p.c * q.b + p.d * q.d};
  }
  friend Mat2 operator-(const Mat2& p) { return {-p.a, -p.b, -p.c, -p.d}; }
  friend bool operator==(const Mat2& p, const Mat2& q) {
    return p.a == q.a && p.b == q.b && p.c == q.c && p.d == q.d;
  }
};

using Mat2c = Mat2<Complex>;
using Mat2q = Mat2<GaussRat>;

/// The parabolic matrix P(x,y) = [[1-xy, x^2],[-y^2, 1+xy]].
/// det = 1 and trace = 2 identically; P(-v) = P(v), so the map is well
/// defined on ± classes. Conjugation equivariance:
///   P(par_op(v,w)) = P(w)^{-1} P(v) P(w).
template <class R>
Mat2<R> to_matrix(const ParVec<R>& v) {
  return {R(1) - v.x * v.y, v.x * v.x, -(v.y * v.y), R(1) + v.x * v.y};
}

inline Mat2c to_complex(const Mat2q& m) {
  return {m.a.to_complex(), m.b.to_complex(), m.c.to_complex(), m.d.to_complex()};
}
inline Mat2c conj(const Mat2c& m) {
  return {std::conj(m.a), std::conj(m.b), std::conj(m.c), std::conj(m.d)};
}
inline Mat2q conj(const Mat2q& m) {
  return {m.a.conj(), m.b.conj(), m.c.conj(), m.d.conj()};
}

inline double max_abs(const Mat2c& m) {
  return std::max(std::max(std::abs(m.a), std::abs(m.b)),
                  std::max(std::abs(m.c), std::abs(m.d)));
}

/// min(||m - I||, ||m + I||) in max-entry norm: distance to ±identity.
inline double pm_identity_residual(const Mat2c& m) {
  auto dist = [&](double s) {
    Mat2c d{m.a - s, m.b, m.c, m.d - s};
    return max_abs(d);
  };
  return std::min(dist(1.0), dist(-1.0));
}

inline double norm2(const ParC& v) { return std::hypot(std::abs(v.x), std::abs(v.y)); }

/// Equality in (C^2 \ {0})/±:  min(||v-w||, ||v+w||) <= eps * max(||v||,||w||).
inline bool projective_eq(const ParC& v, const ParC& w, double eps) {
  double dm = std::hypot(std::abs(v.x - w.x), std::abs(v.y - w.y));
  double dp = std::hypot(std::abs(v.x + w.x), std::abs(v.y + w.y));
  return std::min(dm, dp) <= eps * std::max(norm2(v), norm2(w));
}

inline bool projective_eq(const ParQ& v, const ParQ& w) {
  return (v.x == w.x && v.y == w.y) || (v.x == -w.x && v.y == -w.y);
}

/// Canonical ± representative: the first nonzero coordinate gets argument in
/// (-pi/2, pi/2], ties toward +.
inline ParC normalize_sign(const ParC& v, double eps = 0.0) {
  Complex lead = std::abs(v.x) > eps ? v.x : v.y;
  if (lead.real() < 0 || (lead.real() == 0 && lead.imag() < 0))
    return {canonical_zero(-v.x), canonical_zero(-v.y)};
  return {canonical_zero(v.x), canonical_zero(v.y)};
}
inline ParQ normalize_sign(const ParQ& v) {
  const GaussRat& lead = v.x.is_zero() ? v.y : v.x;
  if (lead.re < 0 || (lead.re == 0 && lead.im < 0)) return {-v.x, -v.y};
  return v;
}

}  // namespace parq
