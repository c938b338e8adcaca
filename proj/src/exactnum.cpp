#include "grs/exactnum.hpp"

#include <sstream>
#include <vector>

#include "grs/errors.hpp"

namespace grs {

// ---- Q(alpha0) ----

QAlpha& QAlpha::operator+=(const QAlpha& o) {
  p += o.p;
  q += o.q;
  r += o.r;
  return *this;
}

QAlpha& QAlpha::operator-=(const QAlpha& o) {
  p -= o.p;
  q -= o.q;
  r -= o.r;
  return *this;
}

QAlpha& QAlpha::operator*=(const QAlpha& o) {
  Rational c0 = p * o.p;
  Rational c1 = p * o.q + q * o.p;
  Rational c2 = p * o.r + q * o.q + r * o.p;
  Rational c3 = q * o.r + r * o.q;
  Rational c4 = r * o.r;
  // a^3 = -a^2 + 2a + 4, a^4 = 3a^2 + 2a - 4
  p = c0 + 4 * c3 - 4 * c4;
  q = c1 + 2 * c3 + 2 * c4;
  r = c2 - c3 + 3 * c4;
  return *this;
}

QAlpha operator+(QAlpha a, const QAlpha& b) { return a += b; }
QAlpha operator-(QAlpha a, const QAlpha& b) { return a -= b; }
QAlpha operator-(const QAlpha& a) { return {-a.p, -a.q, -a.r}; }
QAlpha operator*(QAlpha a, const QAlpha& b) { return a *= b; }

namespace {

using Poly = std::vector<Rational>;  // low degree first

void trim(Poly& a) {
  while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

Poly poly_sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

void poly_divmod(Poly a, const Poly& b, Poly& quot, Poly& rem) {
  trim(a);
  quot.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
  while (a.size() >= b.size() && !a.empty()) {
    std::size_t shift = a.size() - b.size();
    Rational c = a.back() / b.back();
    quot[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
    trim(a);
  }
  rem = std::move(a);
  trim(quot);
}

}  // namespace

QAlpha inverse(const QAlpha& a) {
  if (a.is_zero()) throw Error(ErrorCode::kDivisionByZero, "inverse of zero in Q(alpha0)");
  // Invariant: old_s * v == old_r (mod m).
  Poly m = {Rational(-4), Rational(-2), Rational(1), Rational(1)};
  Poly v = {a.p, a.q, a.r};
  trim(v);
  Poly old_r = v, r = m;
  Poly old_s = {Rational(1)}, s = {};
  while (!r.empty()) {
    Poly quot, rem;
    poly_divmod(old_r, r, quot, rem);
    old_r = std::move(r);
    r = std::move(rem);
    Poly next_s = poly_sub(old_s, poly_mul(quot, s));
    old_s = std::move(s);
    s = std::move(next_s);
  }
  // old_r is a nonzero constant since m is irreducible.
  Rational g = old_r.at(0);
  old_s.resize(3);
  return {old_s[0] / g, old_s[1] / g, old_s[2] / g};
}

QAlpha operator/(const QAlpha& a, const QAlpha& b) { return a * inverse(b); }

QAlpha pow(const QAlpha& a, std::int64_t n) {
  if (n < 0) return pow(inverse(a), -n);
  QAlpha result(1), base = a;
  while (n > 0) {
    if (n & 1) result *= base;
    base *= base;
    n >>= 1;
  }
  return result;
}

QAlpha alpha_pow(std::int64_t n) { return pow(QAlpha::alpha(), n); }

Rational signifier(const QAlpha& v) {
  const Rational &p = v.p, &q = v.q, &r = v.r;
  return p * p * p - p * p * q - 2 * p * q * q + 4 * q * q * q + 5 * p * p * r -
         10 * p * q * r - 4 * q * q * r + 12 * p * r * r - 8 * q * r * r + 16 * r * r * r;
}

int sign(const QAlpha& v) { return sgn(signifier(v)); }

std::strong_ordering compare(const QAlpha& v, const QAlpha& w) {
  int s = sign(v - w);
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

MinPoly min_poly_of(const QAlpha& v) {
  if (v.is_rational()) {
    throw Error(ErrorCode::kRationalInput, "minimal polynomial formula needs q or r nonzero");
  }
  const Rational &p = v.p, &q = v.q, &r = v.r;
  MinPoly mp;
  mp.s = -3 * p + q - 5 * r;
  mp.t = 3 * p * p - 2 * p * q - 2 * q * q + 10 * p * r - 10 * q * r + 12 * r * r;
  mp.u = -signifier(v);
  return mp;
}

namespace {

Integer pow10(int d) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), 10, static_cast<unsigned long>(d));
  return out;
}

std::string decimal_string(const Integer& k, int digits) {
  Integer a = abs(k);
  std::string s = a.get_str();
  if (static_cast<int>(s.size()) <= digits) s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
  std::string ip = s.substr(0, s.size() - static_cast<std::size_t>(digits));
  std::string fp = s.substr(s.size() - static_cast<std::size_t>(digits));
  while (!fp.empty() && fp.back() == '0') fp.pop_back();
  std::string out = (sgn(k) < 0 ? "-" : "") + ip;
  if (!fp.empty()) out += "." + fp;
  return out;
}

}  // namespace

std::string decimal_approx(const QAlpha& v, int digits) {
  if (digits < 0) throw Error(ErrorCode::kInvalidArgument, "digits must be nonnegative");
  const Integer scale = pow10(digits);
  // |v| < N because 0 < alpha0 < 3.
  Rational bound = 1 + abs(v.p) + 3 * abs(v.q) + 9 * abs(v.r);
  Integer n_int = bound.get_num() / bound.get_den() + 1;
  Integer lo = -n_int * scale;  // lo / scale <= v
  Integer hi = n_int * scale;   // hi / scale > v
  // Largest k with k / scale <= v.
  while (hi - lo > 1) {
    Integer mid = lo + (hi - lo) / 2;
    if (compare(QAlpha(make_rational(mid, scale)), v) != std::strong_ordering::greater) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  bool exact = compare(QAlpha(make_rational(lo, scale)), v) == std::strong_ordering::equal;
  std::string l = decimal_string(lo, digits);
  std::string h = exact ? l : decimal_string(lo + 1, digits);
  return "[" + l + ", " + h + "]";
}

std::string to_string(const QAlpha& v) {
  return to_fraction_string(v.p) + " " + to_fraction_string(v.q) + " " + to_fraction_string(v.r);
}

QAlpha parse_qalpha(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> tok;
  for (std::string t; in >> t;) tok.push_back(t);
  if (tok.size() != 3) {
    throw Error(ErrorCode::kParse, "expected three rationals \"p q r\", got: " + std::string(text));
  }
  return {parse_rational(tok[0]), parse_rational(tok[1]), parse_rational(tok[2])};
}

std::string to_display_string(const QAlpha& v) {
  std::string out;
  auto emit = [&](const Rational& c, const char* mono) {
    if (sgn(c) == 0) return;
    std::string cs = to_display_string(ComplexRational(c));
    if (!out.empty()) out += " + ";
    if (!*mono) {
      out += cs;
    } else if (c == 1) {
      out += mono;
    } else if (c == -1) {
      out += std::string("-") + mono;
    } else {
      out += cs + "*" + mono;
    }
  };
  emit(v.p, "");
  emit(v.q, "a");
  emit(v.r, "a^2");
  return out.empty() ? "0" : out;
}

// ---- K ----

namespace {

// alpha1 alpha2 = a^2 + a - 2, alpha1 + alpha2 = -1 - a
const QAlpha& sym_product() {
  static const QAlpha v(-2, 1, 1);
  return v;
}
const QAlpha& sym_sum() {
  static const QAlpha v(-1, -1, 0);
  return v;
}

}  // namespace

KElem KElem::alpha(int j) {
  switch (((j % 3) + 3) % 3) {
    case 0:
      return KElem(QAlpha::alpha());
    case 1:
      return KElem(QAlpha(), QAlpha(1));
    default:
      return KElem(sym_sum(), QAlpha(-1));
  }
}

const Rational& KElem::c(int i, int j) const {
  const QAlpha& part = j == 0 ? a : b;
  switch (i) {
    case 0:
      return part.p;
    case 1:
      return part.q;
    case 2:
      return part.r;
    default:
      throw Error(ErrorCode::kInvalidArgument, "KElem coefficient index out of range");
  }
}

KElem& KElem::operator+=(const KElem& o) {
  a += o.a;
  b += o.b;
  return *this;
}

KElem& KElem::operator-=(const KElem& o) {
  a -= o.a;
  b -= o.b;
  return *this;
}

KElem& KElem::operator*=(const KElem& o) {
  // Y^2 = (alpha1 + alpha2) Y - alpha1 alpha2
  QAlpha bb = b * o.b;
  QAlpha na = a * o.a - bb * sym_product();
  QAlpha nb = a * o.b + b * o.a + bb * sym_sum();
  a = std::move(na);
  b = std::move(nb);
  return *this;
}

KElem operator+(KElem x, const KElem& y) { return x += y; }
KElem operator-(KElem x, const KElem& y) { return x -= y; }
KElem operator-(const KElem& x) { return {-x.a, -x.b}; }
KElem operator*(KElem x, const KElem& y) { return x *= y; }

KElem tau(const KElem& x) { return {x.a + x.b * sym_sum(), -x.b}; }

KElem k_div(const KElem& num, const KElem& den) {
  if (den.is_zero()) throw Error(ErrorCode::kDivisionByZero, "division by zero in K");
  KElem conj_den = tau(den);
  KElem norm = den * conj_den;
  if (!norm.is_real()) throw Error(ErrorCode::kInvalidArgument, "relative norm not in Q(alpha0)");
  KElem out = num * conj_den;
  QAlpha inv = inverse(norm.a);
  return {out.a * inv, out.b * inv};
}

KElem pow(const KElem& x, std::int64_t n) {
  if (n < 0) return pow(k_div(KElem(1), x), -n);
  KElem result(1), base = x;
  while (n > 0) {
    if (n & 1) result *= base;
    base *= base;
    n >>= 1;
  }
  return result;
}

std::string to_string(const KElem& v) {
  std::string out;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 2; ++j) {
      if (!out.empty()) out += ' ';
      out += to_fraction_string(v.c(i, j));
    }
  }
  return out;
}

// ---- polynomials in X, Y, Z ----

Poly3::Poly3(Rational c) {
  if (sgn(c) != 0) terms_[{0, 0, 0}] = std::move(c);
}

Poly3 Poly3::var(int which) {
  Poly3 out;
  Exponent e{0, 0, 0};
  e.at(static_cast<std::size_t>(which)) = 1;
  out.terms_[e] = 1;
  return out;
}

int Poly3::total_degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[0] + e[1] + e[2]);
  return d;
}

void Poly3::add_term(const Exponent& e, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Poly3& Poly3::operator+=(const Poly3& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly3 operator-(Poly3 a, const Poly3& b) {
  for (const auto& [e, c] : b.terms_) a.add_term(e, -c);
  return a;
}

Poly3& Poly3::operator*=(const Poly3& o) {
  Poly3 out;
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      out.add_term({e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]}, c1 * c2);
    }
  }
  *this = std::move(out);
  return *this;
}

KElem reduce_poly(const Poly3& a) {
  if (a.total_degree() > kMaxReduceDegree) {
    throw Error(ErrorCode::kDegreeTooLarge,
                "reduce_poly input exceeds total degree " + std::to_string(kMaxReduceDegree));
  }
  // Rule (i): Z -> -X - Y - 1.
  Poly3 z_sub;
  z_sub.add_term({1, 0, 0}, -1);
  z_sub.add_term({0, 1, 0}, -1);
  z_sub.add_term({0, 0, 0}, -1);
  Poly3 xy;
  for (const auto& [e, c] : a.terms()) {
    Poly3 term;
    term.add_term({e[0], e[1], 0}, c);
    for (int k = 0; k < e[2]; ++k) term *= z_sub;
    xy += term;
  }

  // Key (b, a) for X^a Y^b, processed from the largest down; rewrites only
  // produce strictly smaller keys.
  std::map<std::pair<int, int>, Rational> work;
  for (const auto& [e, c] : xy.terms()) work[{e[1], e[0]}] += c;
  auto add = [&](int b, int x, const Rational& c) {
    if (sgn(c) == 0) return;
    work[{b, x}] += c;
  };
  KElem out;
  while (!work.empty()) {
    auto it = std::prev(work.end());
    auto [b, x] = it->first;
    Rational c = it->second;
    work.erase(it);
    if (sgn(c) == 0) continue;
    if (b >= 2) {
      // Rule (ii): Y^2 -> -XY - Y - X^2 - X + 2.
      add(b - 1, x + 1, -c);
      add(b - 1, x, -c);
      add(b - 2, x + 2, -c);
      add(b - 2, x + 1, -c);
      add(b - 2, x, 2 * c);
    } else if (x >= 3) {
      // Rule (iii): X^3 -> -X^2 + 2X + 4.
      add(b, x - 1, -c);
      add(b, x - 2, 2 * c);
      add(b, x - 3, 4 * c);
    } else {
      QAlpha& part = b == 0 ? out.a : out.b;
      (x == 0 ? part.p : x == 1 ? part.q : part.r) += c;
    }
  }
  return out;
}

}  // namespace grs
