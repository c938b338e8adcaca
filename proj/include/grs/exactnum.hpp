#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "grs/rational.hpp"

namespace grs {

// p + q a + r a^2 where a = alpha0 is the real root of X^3 + X^2 - 2X - 4.
struct QAlpha {
  Rational p, q, r;

  QAlpha() = default;
  QAlpha(Rational p_) : p(std::move(p_)) {}  // NOLINT: rationals embed
  QAlpha(std::int64_t p_) : p(make_rational(p_)) {}  // NOLINT
  QAlpha(Rational p_, Rational q_, Rational r_)
      : p(std::move(p_)), q(std::move(q_)), r(std::move(r_)) {}

  static QAlpha alpha() { return {0, 1, 0}; }

  bool is_zero() const { return sgn(p) == 0 && sgn(q) == 0 && sgn(r) == 0; }
  bool is_rational() const { return sgn(q) == 0 && sgn(r) == 0; }

  QAlpha& operator+=(const QAlpha& o);
  QAlpha& operator-=(const QAlpha& o);
  QAlpha& operator*=(const QAlpha& o);

  friend bool operator==(const QAlpha& a, const QAlpha& b) {
    return a.p == b.p && a.q == b.q && a.r == b.r;
  }
};

QAlpha operator+(QAlpha a, const QAlpha& b);
QAlpha operator-(QAlpha a, const QAlpha& b);
QAlpha operator-(const QAlpha& a);
QAlpha operator*(QAlpha a, const QAlpha& b);
QAlpha operator/(const QAlpha& a, const QAlpha& b);
QAlpha inverse(const QAlpha& a);  // extended Euclid against m(X)

// alpha0^n; negative n through inversion.
QAlpha alpha_pow(std::int64_t n);
QAlpha pow(const QAlpha& a, std::int64_t n);

Rational signifier(const QAlpha& v);
// Sign of v - w; a total order on Q(alpha0) as a subfield of the reals.
std::strong_ordering compare(const QAlpha& v, const QAlpha& w);
int sign(const QAlpha& v);

struct MinPoly {
  Rational s, t, u;  // X^3 + sX^2 + tX + u
};
MinPoly min_poly_of(const QAlpha& v);  // kRationalInput when q = r = 0

// "[lo, hi]" with hi - lo = 10^-digits (or lo = hi when v is such a decimal).
std::string decimal_approx(const QAlpha& v, int digits);

std::string to_string(const QAlpha& v);   // "p q r" as fractions
QAlpha parse_qalpha(std::string_view text);
// "p + q*a + r*a^2" with zero terms dropped; display only.
std::string to_display_string(const QAlpha& v);

// a + b alpha1 in K = Q(alpha0, alpha1, alpha2), with a, b in Q(alpha0).
struct KElem {
  QAlpha a, b;

  KElem() = default;
  KElem(QAlpha a_) : a(std::move(a_)) {}  // NOLINT
  KElem(std::int64_t v) : a(v) {}          // NOLINT
  KElem(QAlpha a_, QAlpha b_) : a(std::move(a_)), b(std::move(b_)) {}

  static KElem alpha(int j);  // alpha_j for j in Z/3Z

  bool is_zero() const { return a.is_zero() && b.is_zero(); }
  bool is_real() const { return b.is_zero(); }
  // Coefficient of alpha0^i alpha1^j.
  const Rational& c(int i, int j) const;

  KElem& operator+=(const KElem& o);
  KElem& operator-=(const KElem& o);
  KElem& operator*=(const KElem& o);

  friend bool operator==(const KElem& x, const KElem& y) { return x.a == y.a && x.b == y.b; }
};

KElem operator+(KElem x, const KElem& y);
KElem operator-(KElem x, const KElem& y);
KElem operator-(const KElem& x);
KElem operator*(KElem x, const KElem& y);
// Swaps alpha1 and alpha2, fixing alpha0.
KElem tau(const KElem& x);
KElem k_div(const KElem& num, const KElem& den);
KElem pow(const KElem& x, std::int64_t n);

std::string to_string(const KElem& v);  // six fractions, row-major (i, j)

// Polynomial in X, Y, Z (standing for alpha0, alpha1, alpha2).
class Poly3 {
 public:
  using Exponent = std::array<int, 3>;

  Poly3() = default;
  Poly3(Rational c);  // NOLINT
  static Poly3 var(int which);  // 0 -> X, 1 -> Y, 2 -> Z

  const std::map<Exponent, Rational>& terms() const { return terms_; }
  int total_degree() const;
  void add_term(const Exponent& e, const Rational& c);

  Poly3& operator+=(const Poly3& o);
  Poly3& operator*=(const Poly3& o);
  friend Poly3 operator+(Poly3 a, const Poly3& b) { return a += b; }
  friend Poly3 operator-(Poly3 a, const Poly3& b);
  friend Poly3 operator*(Poly3 a, const Poly3& b) { return a *= b; }

 private:
  std::map<Exponent, Rational> terms_;
};

inline constexpr int kMaxReduceDegree = 24;

// Standard reduction: Z -> -X-Y-1, Y^2 -> -XY-Y-X^2-X+2, X^3 -> -X^2+2X+4.
KElem reduce_poly(const Poly3& a);

}  // namespace grs
