#include "grs/rational.hpp"

#include <limits>

#include "grs/errors.hpp"

namespace grs {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSeedInvalid: return "SeedInvalid";
    case ErrorCode::kNotGolay: return "NotGolay";
    case ErrorCode::kEnergyMismatch: return "EnergyMismatch";
    case ErrorCode::kDegreeTooLarge: return "DegreeTooLarge";
    case ErrorCode::kZeroSequence: return "ZeroSequence";
    case ErrorCode::kZeroLength: return "ZeroLength";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kShiftOutOfRange: return "ShiftOutOfRange";
    case ErrorCode::kLevelTooSmall: return "LevelTooSmall";
    case ErrorCode::kShiftZero: return "ShiftZero";
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kRationalInput: return "RationalInput";
    case ErrorCode::kSeedNotRational: return "SeedNotRational";
    case ErrorCode::kShiftNotEntered: return "ShiftNotEntered";
    case ErrorCode::kOverflow: return "Overflow";
    case ErrorCode::kParse: return "Parse";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message,
             std::optional<std::int64_t> shift)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      shift_(shift) {}

Integer to_integer(std::int64_t v) {
  // mpz_class has no int64 constructor on every platform; go through strings
  // only for the values a long cannot carry.
  if (v >= std::numeric_limits<long>::min() && v <= std::numeric_limits<long>::max()) {
    return Integer(static_cast<long>(v));
  }
  return Integer(std::to_string(v));
}

std::int64_t to_int64(const Integer& v) {
  if (!v.fits_slong_p()) {
    throw Error(ErrorCode::kOverflow, "integer does not fit in 64 bits: " + v.get_str());
  }
  return static_cast<std::int64_t>(v.get_si());
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) {
    throw Error(ErrorCode::kDivisionByZero, "zero denominator");
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational make_rational(std::int64_t num, std::int64_t den) {
  return make_rational(to_integer(num), to_integer(den));
}

std::string to_fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    digits.remove_prefix(1);
  }
  if (digits.empty()) {
    throw Error(ErrorCode::kParse, "expected an integer in '" + std::string(whole) + "'");
  }
  for (char c : digits) {
    if (c < '0' || c > '9') {
      throw Error(ErrorCode::kParse, "bad digit in '" + std::string(whole) + "'");
    }
  }
  std::string s(text);
  if (s.front() == '+') s.erase(0, 1);
  return Integer(s, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text, text));
  }
  Integer num = parse_integer(text.substr(0, slash), text);
  Integer den = parse_integer(text.substr(slash + 1), text);
  if (sgn(den) == 0) {
    throw Error(ErrorCode::kParse, "zero denominator in '" + std::string(text) + "'");
  }
  return make_rational(num, den);
}

ComplexRational& ComplexRational::operator+=(const ComplexRational& o) {
  re += o.re;
  im += o.im;
  return *this;
}

ComplexRational& ComplexRational::operator-=(const ComplexRational& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

ComplexRational& ComplexRational::operator*=(const ComplexRational& o) {
  if (sgn(im) == 0 && sgn(o.im) == 0) {
    re *= o.re;
    return *this;
  }
  Rational r = re * o.re - im * o.im;
  Rational i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

ComplexRational operator+(ComplexRational a, const ComplexRational& b) { return a += b; }
ComplexRational operator-(ComplexRational a, const ComplexRational& b) { return a -= b; }
ComplexRational operator-(const ComplexRational& a) { return {-a.re, -a.im}; }
ComplexRational operator*(ComplexRational a, const ComplexRational& b) { return a *= b; }

std::string to_display_string(const ComplexRational& z) {
  auto part = [](const Rational& q) {
    return q.get_den() == 1 ? q.get_num().get_str() : to_fraction_string(q);
  };
  if (z.is_real()) return part(z.re);
  std::string out = sgn(z.re) == 0 ? std::string() : part(z.re);
  if (!out.empty() && sgn(z.im) > 0) out += "+";
  out += part(z.im) + "i";
  return out;
}

bool exact_sqrt(const Rational& q, Rational& root) {
  if (sgn(q) < 0) return false;
  Integer n = q.get_num();
  Integer d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) {
    return false;
  }
  Integer rn = sqrt(n);
  Integer rd = sqrt(d);
  root = make_rational(rn, rd);
  return true;
}

}  // namespace grs
