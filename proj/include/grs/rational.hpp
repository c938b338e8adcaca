#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace grs {

// GMP keeps mpq_class canonical (gcd-reduced, positive denominator) after
// every arithmetic operation; values built from raw parts go through
// canonicalize().
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(std::int64_t num, std::int64_t den = 1);

// "num/den" with den > 0, always written with the slash.
std::string to_fraction_string(const Rational& q);
// Accepts "a", "-a", "a/b"; throws Error(kParse) otherwise.
Rational parse_rational(std::string_view text);

Integer to_integer(std::int64_t v);
std::int64_t to_int64(const Integer& v);

// Exact Gaussian rational re + im*i.
struct ComplexRational {
  Rational re;
  Rational im;

  ComplexRational() = default;
  ComplexRational(Rational r) : re(std::move(r)) {}  // NOLINT: implicit widening is the point
  ComplexRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  ComplexRational(std::int64_t r) : re(make_rational(r)) {}  // NOLINT

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }
  Rational norm() const { return re * re + im * im; }

  ComplexRational& operator+=(const ComplexRational& o);
  ComplexRational& operator-=(const ComplexRational& o);
  ComplexRational& operator*=(const ComplexRational& o);

  friend bool operator==(const ComplexRational& a, const ComplexRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

ComplexRational operator+(ComplexRational a, const ComplexRational& b);
ComplexRational operator-(ComplexRational a, const ComplexRational& b);
ComplexRational operator-(const ComplexRational& a);
ComplexRational operator*(ComplexRational a, const ComplexRational& b);

inline ComplexRational conj(const ComplexRational& z) { return {z.re, -z.im}; }
inline std::int64_t conj(std::int64_t v) { return v; }

inline Rational norm(const ComplexRational& z) { return z.norm(); }

// "re" when real, otherwise "re+imi" with fraction strings; for display only.
std::string to_display_string(const ComplexRational& z);

// True when q is the square of a rational; writes the nonnegative root.
bool exact_sqrt(const Rational& q, Rational& root);

}  // namespace grs
