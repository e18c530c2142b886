#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <string>

#include "hardyq/errors.hpp"
#include "hardyq/tolerances.hpp"

// Complex linear algebra for the 2-dimensional single-particle and
// 4-dimensional two-particle spaces. All operations are pure functions on
// immutable values and safe to call concurrently.

namespace hardyq {

using cplx = std::complex<double>;

template <std::size_t N>
struct Vec {
  std::array<cplx, N> c{};

  cplx& operator[](std::size_t i) { return c[i]; }
  const cplx& operator[](std::size_t i) const { return c[i]; }

  bool operator==(const Vec&) const = default;
};

using Vec2 = Vec<2>;
using Vec4 = Vec<4>;

template <std::size_t N>
Vec<N> operator+(Vec<N> a, const Vec<N>& b) {
  for (std::size_t i = 0; i < N; ++i) a.c[i] += b.c[i];
  return a;
}

template <std::size_t N>
Vec<N> operator-(Vec<N> a, const Vec<N>& b) {
  for (std::size_t i = 0; i < N; ++i) a.c[i] -= b.c[i];
  return a;
}

template <std::size_t N>
Vec<N> operator*(const cplx& s, Vec<N> v) {
  for (auto& x : v.c) x *= s;
  return v;
}

/// <a|b>: conjugate-linear in the first argument, linear in the second.
/// Mixed dimensions do not compile; the equal-dimension precondition is
/// enforced by the type system.
template <std::size_t N>
cplx inner(const Vec<N>& a, const Vec<N>& b) {
  cplx s{};
  for (std::size_t i = 0; i < N; ++i) s += std::conj(a.c[i]) * b.c[i];
  return s;
}

template <std::size_t N>
double squared_norm(const Vec<N>& v) {
  double s = 0.0;
  for (const auto& x : v.c) s += std::norm(x);
  return s;
}

template <std::size_t N>
double norm(const Vec<N>& v) {
  return std::sqrt(squared_norm(v));
}

/// Product-space components are ordered left-major: component 2i+j of
/// tensor(a, b) is a[i]*b[j]. Every module shares this convention.
inline Vec4 tensor(const Vec2& a, const Vec2& b) {
  Vec4 out;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) out.c[2 * i + j] = a.c[i] * b.c[j];
  return out;
}

/// Scales v to unit norm. Throws DegenerateStateError if norm(v) <= tolerance.
template <std::size_t N>
Vec<N> normalize(const Vec<N>& v, double tolerance = zero_tolerance) {
  const double n = norm(v);
  if (!(n > tolerance)) {
    throw DegenerateStateError("cannot normalize: vector norm " +
                               std::to_string(n) + " is at or below tolerance");
  }
  Vec<N> out = v;
  for (auto& x : out.c) x /= n;
  return out;
}

template <std::size_t N>
bool all_finite(const Vec<N>& v) {
  for (const auto& x : v.c) {
    if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) return false;
  }
  return true;
}

}  // namespace hardyq
