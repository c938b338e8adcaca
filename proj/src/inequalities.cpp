#include <algorithm>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "grs/errors.hpp"
#include "grs/shift_bounds.hpp"
#include "grs/spectrum_fast.hpp"

namespace grs {

namespace {

std::string num(std::int64_t v) { return std::to_string(v); }

// r-range inside [0, 2 ell_{n-t}], endpoints in units of ell_{n-t}.
struct Range {
  int lo;
  bool lo_closed;
  int hi;
  bool hi_closed;
};

struct VelmaCase {
  int t;
  std::int64_t q;
  Range r;
  std::int64_t a, b;  // printed a M + b M'
};

const std::vector<VelmaCase>& velma_cases() {
  static const std::vector<VelmaCase> cases = {
      {1, -1, {0, false, 1, true}, 1, 0},    {1, 0, {1, true, 2, false}, 1, 0},
      {3, -1, {0, true, 1, false}, 3, 2},    {3, 1, {1, true, 2, false}, 3, 0},
      {4, -4, {0, false, 2, false}, 1, 10},  {4, -3, {1, true, 2, false}, 3, 0},
      {4, 1, {1, true, 2, false}, 7, 0},     {5, 2, {0, false, 1, true}, 7, 0},
      {5, 4, {0, true, 1, true}, 9, 0},      {5, 5, {1, true, 2, false}, 11, 0},
      {6, -12, {0, true, 1, true}, 7, 0},    {6, -11, {1, true, 2, false}, 9, 0},
      {6, 9, {1, true, 2, false}, 15, 0},    {6, 10, {0, true, 1, true}, 17, 0},
      {7, -23, {1, true, 2, false}, 33, 0},  {7, -22, {0, true, 1, true}, 31, 0},
      {7, 10, {0, false, 1, true}, 27, 0},   {7, 11, {0, true, 2, false}, 21, 14},
      {7, 18, {0, false, 1, true}, 21, 0},   {7, 21, {1, true, 2, false}, 31, 0},
      {8, -46, {0, false, 1, true}, 33, 0},  {8, -43, {1, true, 2, false}, 49, 0},
      {8, 21, {1, true, 2, false}, 29, 0},   {8, 37, {1, true, 2, false}, 45, 0},
      {8, 42, {0, false, 2, false}, 13, 62}, {9, -86, {0, false, 1, true}, 55, 0},
      {9, 42, {0, false, 2, false}, 83, 2},  {9, 74, {0, false, 1, true}, 87, 0},
      {10, -182, {0, false, 2, false}, 109, 66},
      {10, -181, {0, true, 2, false}, 99, 66},
      {10, -171, {1, true, 2, false}, 153, 0},
      {10, 149, {0, false, 2, false}, 117, 6},
  };
  return cases;
}

// Componentwise max of the per-shift bound over the pieces the range covers.
std::pair<std::int64_t, std::int64_t> velma_derive(const AbgdTable& tab, std::int64_t q,
                                                   const Range& r) {
  const auto& e = tab.at(q);
  const std::int64_t ab = std::abs(e.a) + std::abs(e.b);
  std::int64_t a = 0, b = 0;
  auto take = [&](std::int64_t x, std::int64_t y) {
    a = std::max(a, x);
    b = std::max(b, y);
  };
  if (r.lo == 0 && r.hi >= 1) take(ab, std::abs(e.d));  // 0 < r < ell
  const bool has_one = (r.lo < 1 && r.hi > 1) || (r.lo == 1 && r.lo_closed) ||
                       (r.hi == 1 && r.hi_closed);
  if (has_one) take(ab, 0);
  if (r.hi == 2) take(ab, std::abs(e.g));  // ell < r < 2 ell
  return {a, b};
}

struct DestinyCase {
  int n;
  std::vector<std::int64_t> shifts;
  std::int64_t value;
};

const std::vector<DestinyCase>& destiny_cases() {
  static const std::vector<DestinyCase> cases = {
      {0, {0}, 1},
      {1, {-1, 1}, 1},
      {2, {-1, 1}, 3},
      {3, {-3, 1, 3}, 5},
      {4, {-7, -5, 3, 5}, 7},
      {5, {-11, 5, 9, 11}, 13},
      {6, {-23, -21, 11, 19, 21}, 15},
      {7, {-45, -43, 21, 23, 37, 43}, 33},
      {8, {-91, -85, 43, 75, 85}, 49},
      {9, {-181, -171, 85, 149}, 83},
      {10, {-363, -361, -341, 299}, 153},
  };
  return cases;
}

struct GenericCase {
  int n;
  std::vector<std::int64_t> qs;
  std::int64_t first;
  std::optional<std::int64_t> second;
};

const std::vector<GenericCase>& generic_cases() {
  static const std::vector<GenericCase> cases = {
      {0, {}, 1, std::nullopt},
      {1, {}, 1, 2},
      {2, {-1, 0}, 3, 2},
      {3, {-1, 0}, 5, 6},
      {4, {-2, 0, 1}, 9, 10},
      {5, {-3, 1, 2}, 13, 18},
      {6, {-6, 2, 4, 5}, 21, 26},
      {7, {-12, -11, 5, 9, 10}, 35, 42},
      {8, {-23, -22, 10, 18, 21}, 51, 66},
      {9, {-46, -43, 21, 37}, 99, 98},
      {10, {-91, -86, 74}, 153, 198},
  };
  return cases;
}

QAlpha lin(std::int64_t a, std::int64_t b) { return QAlpha(a) * QAlpha::alpha() + QAlpha(b); }

std::string lin_label(std::int64_t a, std::int64_t b) {
  std::string s = num(a) + "*a";
  if (b != 0) s += "+" + num(b);
  return s;
}

BoundVerdict labeled(BoundVerdict v, std::string lhs, std::string rhs) {
  v.lhs = std::move(lhs);
  v.rhs = std::move(rhs);
  return v;
}

QAlpha q_frac(std::int64_t r2, std::int64_t r1, std::int64_t r0, std::int64_t den) {
  const Rational d(den);
  return QAlpha(Rational(r0) / d, Rational(r1) / d, Rational(r2) / d);
}

// Exact value of a plain decimal literal such as "0.654022".
QAlpha dec(const std::string& text) {
  const auto dot = text.find('.');
  if (dot == std::string::npos) return QAlpha(parse_rational(text));
  std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  Integer den = 1;
  for (std::size_t i = dot + 1; i < text.size(); ++i) den *= 10;
  return QAlpha(make_rational(Integer(digits, 10), den));
}

// Real part of a K element that is known to be real.
QAlpha real_part(const KElem& k, const std::string& what) {
  if (!k.is_real()) throw Error(ErrorCode::kInvalidArgument, what + " is not real");
  return k.a;
}

}  // namespace

std::vector<BoundVerdict> inequality_suite() {
  std::vector<BoundVerdict> out;
  const QAlpha a = QAlpha::alpha();

  // Per-shift bound subcases and their final inequalities.
  for (const auto& c : velma_cases()) {
    const AbgdTable tab = abgd(c.t);
    const auto [da, db] = velma_derive(tab, c.q, c.r);
    const std::string id = "velma.t=" + num(c.t) + ".q=" + num(c.q);
    out.push_back(labeled(make_verdict(id + ".coefficients", "=", lin(da, db), lin(c.a, c.b)),
                          lin_label(da, db), lin_label(c.a, c.b)));
    out.push_back(labeled(make_verdict(id, "<=", lin(c.a, c.b), alpha_pow(c.t + 1)),
                          lin_label(c.a, c.b), "a^" + num(c.t + 1)));
  }

  // Small-level peaks against 5 a^{n-3}.
  RsGeoffTable rs;
  for (const auto& c : destiny_cases()) {
    std::int64_t best = 0;
    for (std::int64_t s : c.shifts) {
      std::int64_t v = c.n == 0 ? (s == 0 ? 1 : 0) : rs.value(c.n, s);
      best = std::max(best, std::abs(v));
    }
    const std::string id = "destiny.n=" + num(c.n);
    out.push_back(labeled(make_verdict(id + ".max", "=", QAlpha(best), QAlpha(c.value)),
                          num(best), num(c.value)));
    out.push_back(labeled(make_verdict(id, "<=", QAlpha(c.value), QAlpha(5) * alpha_pow(c.n - 3)),
                          num(c.value), "5*a^" + num(c.n - 3)));
  }

  // Seed-statistic coefficients against 9 a^{n-4} and 18 a^{n-5}.
  for (const auto& c : generic_cases()) {
    std::int64_t first = c.first;
    std::optional<std::int64_t> second = c.second;
    if (c.n >= 2) {
      const AbgdTable tab = abgd(c.n - 1);
      std::int64_t f = 0, s = 0;
      for (std::int64_t q : c.qs) {
        const auto& e = tab.at(q);
        const std::int64_t ab = std::abs(e.a) + std::abs(e.b);
        f = std::max(f, ab + std::abs(e.g) + std::abs(e.d));
        s = std::max(s, 2 * ab);
      }
      first = f;
      second = s;
    } else if (c.n == 1) {
      first = 1;  // pcc0 + 2 psl0
      second = 2;
    }
    const std::string id = "generic_destiny.n=" + num(c.n);
    out.push_back(labeled(make_verdict(id + ".first_coefficient", "=", QAlpha(first),
                                       QAlpha(c.first)),
                          num(first), num(c.first)));
    out.push_back(labeled(
        make_verdict(id + ".first", "<=", QAlpha(c.first), QAlpha(9) * alpha_pow(c.n - 4)),
        num(c.first), "9*a^" + num(c.n - 4)));
    if (c.second) {
      out.push_back(labeled(make_verdict(id + ".second_coefficient", "=", QAlpha(*second),
                                         QAlpha(*c.second)),
                            num(*second), num(*c.second)));
      out.push_back(labeled(make_verdict(id + ".second", "<=", QAlpha(*c.second),
                                         QAlpha(18) * alpha_pow(c.n - 5)),
                            num(*c.second), "18*a^" + num(c.n - 5)));
    }
  }

  // G constants of the envelope argument.
  const EConstants& ec = e_constants();
  const QAlpha ratio = real_part(KElem::alpha(1) * KElem::alpha(2), "a1 a2") / alpha_pow(2);
  for (int u = 0; u < 2; ++u) {
    const QAlpha g0 = real_part(ec.g(0, u), "G0");
    const QAlpha g12 = real_part(ec.g(1, u) * ec.g(2, u), "G1 G2");
    const std::string id = "mark.u=" + num(u);
    out.push_back(make_verdict(id + ".g0_positive", ">", g0, QAlpha(0)));
    out.push_back(make_verdict(id + ".g0_below_one", "<", g0, QAlpha(1)));
    const QAlpha gap = QAlpha(1) - g0;
    out.push_back(labeled(make_verdict(id + ".decay", "<=", pow(ratio, 9),
                                       gap * gap / (QAlpha(4) * g12)),
                          "(a1 a2 / a^2)^9", "(1-G0)^2/(4 G1 G2)"));
  }

  out.push_back(labeled(make_verdict("trivial.a_le_a", "<=", a, a), "a", "a"));
  return out;
}

std::vector<BoundVerdict> identity_suite() {
  std::vector<BoundVerdict> out;
  const EConstants& ec = e_constants();
  const QAlpha a = QAlpha::alpha();

  auto eq = [&](const std::string& id, const QAlpha& lhs, const QAlpha& rhs) {
    out.push_back(make_verdict(id, "=", lhs, rhs));
  };
  auto between = [&](const std::string& id, const QAlpha& v, const QAlpha& lo, const QAlpha& hi) {
    out.push_back(make_verdict(id + ".lower", ">", v, lo));
    out.push_back(make_verdict(id + ".upper", "<", v, hi));
  };
  // x <= v < x + 10^-6: x is v cut off after six places.
  auto truncates_to = [&](const std::string& id, const QAlpha& v, const std::string& x) {
    const QAlpha ulp(make_rational(1, 1000000));
    out.push_back(make_verdict(id + ".lower", ">=", v, dec(x)));
    out.push_back(make_verdict(id + ".upper", "<", v, dec(x) + ulp));
  };

  const QAlpha e00 = real_part(ec.e[0][0], "E00");
  const QAlpha e01 = real_part(ec.e[0][1], "E01");
  const QAlpha e0 = real_part(ec.total(0), "E0");
  const QAlpha e1e2 = real_part(ec.total(1) * ec.total(2), "E1 E2");
  eq("e.e00", e00, q_frac(1, 7, 40, 118));
  eq("e.e01", e01, q_frac(17, 1, -28, 118));
  eq("e.e0", e0, q_frac(9, 4, 6, 59));
  eq("e.e1e2", e1e2, q_frac(-4, 2, 14, 59));
  eq("e.four_e10_e20", real_part(KElem(4) * ec.e[1][0] * ec.e[2][0], "E10 E20"),
     q_frac(0, -4, 24, 59));
  eq("e.four_e11_e21", real_part(KElem(4) * ec.e[1][1] * ec.e[2][1], "E11 E21"),
     q_frac(-2, 10, 12, 59));
  eq("e.e0_over_a", e0 / a, q_frac(3, 21, 2, 118));
  const QAlpha a12 = real_part(KElem::alpha(1) * KElem::alpha(2), "a1 a2");
  eq("e.four_e1e2_over_a1a2", QAlpha(4) * e1e2 / a12, q_frac(6, 6, -16, 59));

  // |a1 / a0|^2.
  const QAlpha c = reduce_poly(Poly3::var(1) * Poly3::var(2)).a / alpha_pow(2);
  eq("gilda", c, q_frac(1, 0, -1, 2));
  eq("gilda.alt", a12, q_frac(1, 1, -2, 1));

  truncates_to("approx.e0", e0, "0.633990");
  const QAlpha B = QAlpha(4) * e1e2;
  between("bracket.b", B, dec("0.654022") * dec("0.654022"), dec("0.654023") * dec("0.654023"));
  const QAlpha Bp = QAlpha(4) * e1e2 / a12;
  between("bracket.b_psl", Bp, dec("0.421193") * dec("0.421193"),
          dec("0.421194") * dec("0.421194"));
  between("bracket.c", c, dec("0.935994") * dec("0.935994"), dec("0.935995") * dec("0.935995"));
  truncates_to("approx.e0_over_a", e0 / a, "0.382159");
  const QAlpha D = QAlpha(133991557) / alpha_pow(38);
  truncates_to("approx.d", D, "0.593256");
  truncates_to("approx.d_over_a", D / a, "0.357605");
  between("bracket.five_a_m4", QAlpha(5) * alpha_pow(-4), dec("0.660113"), dec("0.660114"));
  truncates_to("approx.five_a_m3", QAlpha(5) * alpha_pow(-3), "1.095107");
  between("bracket.alpha0", a, dec("1.658967081916"), dec("1.658967081917"));

  // The defining polynomial at a0 and at a1.
  eq("root.a0", pow(a, 3) + a * a - QAlpha(2) * a - QAlpha(4), QAlpha(0));
  const Poly3 y = Poly3::var(1);
  const KElem m_a1 = reduce_poly(y * y * y + y * y - Poly3(2) * y - Poly3(4));
  eq("root.a1.real", m_a1.a, QAlpha(0));
  eq("root.a1.imag", m_a1.b, QAlpha(0));
  return out;
}

}  // namespace grs
