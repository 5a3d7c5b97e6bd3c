#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>

#include "nearconf/rational.hpp"

namespace nearconf {

/// Homogeneous coordinates of a projective point or line over the rationals.
///
/// Stored as a coprime integer triple whose first nonzero entry is positive,
/// so projective equality is plain operator==. Incidence between a point u
/// and a line v is the exact condition dot(u, v) == 0.
class HomogeneousCoord {
 public:
  HomogeneousCoord() : c_{0, 0, 0} {}

  HomogeneousCoord(const Rational& a, const Rational& b, const Rational& c) {
    BigInt l = lcm(lcm(denominator(a), denominator(b)), denominator(c));
    c_[0] = numerator(a) * (l / denominator(a));
    c_[1] = numerator(b) * (l / denominator(b));
    c_[2] = numerator(c) * (l / denominator(c));
    normalize();
  }

  HomogeneousCoord(BigInt a, BigInt b, BigInt c) : c_{std::move(a), std::move(b), std::move(c)} {
    normalize();
  }

  const BigInt& operator[](int i) const { return c_[i]; }
  bool is_zero() const { return c_[0] == 0 && c_[1] == 0 && c_[2] == 0; }

  friend bool operator==(const HomogeneousCoord& x, const HomogeneousCoord& y) = default;
  friend auto operator<=>(const HomogeneousCoord& x, const HomogeneousCoord& y) = default;

  std::string str() const {
    return c_[0].str() + " " + c_[1].str() + " " + c_[2].str();
  }

 private:
  void normalize() {
    BigInt g = gcd(gcd(abs(c_[0]), abs(c_[1])), abs(c_[2]));
    if (g > 1)
      for (auto& x : c_) x /= g;
    for (const auto& x : c_) {
      if (x != 0) {
        if (x < 0)
          for (auto& y : c_) y = -y;
        break;
      }
    }
  }

  std::array<BigInt, 3> c_;
};

inline BigInt dot(const HomogeneousCoord& u, const HomogeneousCoord& v) {
  return u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
}

inline bool incident(const HomogeneousCoord& point, const HomogeneousCoord& line) {
  return dot(point, line) == 0;
}

/// Cross product: join of two points is a line, meet of two lines is a point.
/// Zero result means the arguments were projectively equal.
inline HomogeneousCoord cross(const HomogeneousCoord& u, const HomogeneousCoord& v) {
  return HomogeneousCoord(u[1] * v[2] - u[2] * v[1],
                          u[2] * v[0] - u[0] * v[2],
                          u[0] * v[1] - u[1] * v[0]);
}

/// Affine point (x, y) as (x, y, 1).
inline HomogeneousCoord affine_point(const Rational& x, const Rational& y) {
  return HomogeneousCoord(x, y, Rational(1));
}

/// 3x3 integer matrix, representing a projective transformation up to scale.
struct Mat3 {
  std::array<std::array<BigInt, 3>, 3> m{};

  static Mat3 identity() {
    Mat3 r;
    for (int i = 0; i < 3; ++i) r.m[i][i] = 1;
    return r;
  }

  BigInt det() const {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  }

  /// Adjugate: M * adj(M) == det(M) * I. Exact inverse up to scale.
  Mat3 adjugate() const {
    Mat3 a;
    a.m[0][0] = m[1][1] * m[2][2] - m[1][2] * m[2][1];
    a.m[0][1] = m[0][2] * m[2][1] - m[0][1] * m[2][2];
    a.m[0][2] = m[0][1] * m[1][2] - m[0][2] * m[1][1];
    a.m[1][0] = m[1][2] * m[2][0] - m[1][0] * m[2][2];
    a.m[1][1] = m[0][0] * m[2][2] - m[0][2] * m[2][0];
    a.m[1][2] = m[0][2] * m[1][0] - m[0][0] * m[1][2];
    a.m[2][0] = m[1][0] * m[2][1] - m[1][1] * m[2][0];
    a.m[2][1] = m[0][1] * m[2][0] - m[0][0] * m[2][1];
    a.m[2][2] = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    return a;
  }

  Mat3 transposed() const {
    Mat3 t;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) t.m[i][j] = m[j][i];
    return t;
  }

  friend Mat3 operator*(const Mat3& a, const Mat3& b) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) r.m[i][j] += a.m[i][k] * b.m[k][j];
    return r;
  }
};

/// Apply to a point: p -> M p.
inline HomogeneousCoord apply_to_point(const Mat3& t, const HomogeneousCoord& p) {
  return HomogeneousCoord(t.m[0][0] * p[0] + t.m[0][1] * p[1] + t.m[0][2] * p[2],
                          t.m[1][0] * p[0] + t.m[1][1] * p[1] + t.m[1][2] * p[2],
                          t.m[2][0] * p[0] + t.m[2][1] * p[1] + t.m[2][2] * p[2]);
}

/// Apply to a line: l -> adj(M)^T l, which preserves incidence with M p.
inline HomogeneousCoord apply_to_line(const Mat3& t, const HomogeneousCoord& l) {
  return apply_to_point(t.adjugate().transposed(), l);
}

/// Matrix taking the standard frame e1, e2, e3, (1,1,1) to the frame
/// p0, p1, p2, p3 (the classic four-point construction). Empty if the four
/// points are not in general position.
inline std::optional<Mat3> frame_matrix(const HomogeneousCoord& p0, const HomogeneousCoord& p1,
                                        const HomogeneousCoord& p2, const HomogeneousCoord& p3) {
  Mat3 base;
  for (int j = 0; j < 3; ++j) {
    base.m[j][0] = p0[j];
    base.m[j][1] = p1[j];
    base.m[j][2] = p2[j];
  }
  if (base.det() == 0) return std::nullopt;
  // Solve base * w = p3; columns scaled by w map (1,1,1) to p3.
  Mat3 adj = base.adjugate();
  std::array<BigInt, 3> w;
  for (int i = 0; i < 3; ++i)
    w[i] = adj.m[i][0] * p3[0] + adj.m[i][1] * p3[1] + adj.m[i][2] * p3[2];
  if (w[0] == 0 || w[1] == 0 || w[2] == 0) return std::nullopt;  // p3 on a frame line
  Mat3 r;
  for (int j = 0; j < 3; ++j)
    for (int i = 0; i < 3; ++i) r.m[j][i] = base.m[j][i] * w[i];
  return r;
}

/// Projective transformation mapping source frame points to target frame
/// points (both quadruples in general position). Exact, integer entries.
inline std::optional<Mat3> four_point_transform(const std::array<HomogeneousCoord, 4>& src,
                                                const std::array<HomogeneousCoord, 4>& dst) {
  auto u = frame_matrix(src[0], src[1], src[2], src[3]);
  auto v = frame_matrix(dst[0], dst[1], dst[2], dst[3]);
  if (!u || !v) return std::nullopt;
  return *v * u->adjugate();  // v * u^{-1} up to scale
}

}  // namespace nearconf
