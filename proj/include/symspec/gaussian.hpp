#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "symspec/rational.hpp"

namespace symspec {

/// Exact complex number a + bi with rational a, b.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() : re(0), im(0) {}
  GaussianRational(long r) : re(r), im(0) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational r) : re(std::move(r)), im(0) {}  // NOLINT
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }

  GaussianRational conj() const { return {re, -im}; }

  /// Squared modulus re^2 + im^2 (a rational, not a Gaussian rational).
  Rational norm_sq() const { return re * re + im * im; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    Rational r = re * o.re - im * o.im;
    Rational i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) {
    Rational n = o.norm_sq();
    if (sgn(n) == 0) throw std::domain_error("GaussianRational: division by zero");
    Rational r = (re * o.re + im * o.im) / n;
    Rational i = (im * o.re - re * o.im) / n;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  /// Canonical "a+bi" rendering, e.g. "3/2-1/3i".
  std::string str() const {
    std::string s = re.get_str();
    if (sgn(im) >= 0) {
      s += "+" + im.get_str() + "i";
    } else {
      Rational a = -im;
      s += "-" + a.get_str() + "i";
    }
    return s;
  }
};

inline GaussianRational gauss(long re, long im = 0) {
  return {make_rational(re), make_rational(im)};
}

inline GaussianRational gauss_i() { return gauss(0, 1); }

inline std::complex<double> to_complex(const GaussianRational& g) {
  return {g.re.get_d(), g.im.get_d()};
}

using GaussianVec = std::vector<GaussianRational>;

/// Bilinear pairing (a,b) = sum a_i b_i, no conjugation.
inline GaussianRational dot_bilinear(const GaussianVec& a, const GaussianVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot_bilinear: length mismatch");
  GaussianRational acc;
  for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

inline GaussianVec conj(const GaussianVec& a) {
  GaussianVec out;
  out.reserve(a.size());
  for (const auto& x : a) out.push_back(x.conj());
  return out;
}

}  // namespace symspec
