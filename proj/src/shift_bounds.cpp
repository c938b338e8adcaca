#include "grs/shift_bounds.hpp"

#include <cstdlib>

#include "grs/errors.hpp"
#include "grs/spectrum_fast.hpp"

namespace grs {

std::int64_t standard_shift(int n, std::int64_t ell0) {
  const std::int64_t ell = level_length(ell0, n);
  const std::int64_t sign = (n % 2 == 0) ? 1 : -1;
  // (-1)^n ell0 - ell_n is divisible by 3 since 2^n = (-1)^n mod 3.
  const std::int64_t num = sign * ell0 - ell;
  if (num % 3 != 0) throw Error(ErrorCode::kInvalidArgument, "standard shift not integral");
  return num / 3;
}

std::int64_t ShiftSeq::term(int n) const {
  if (n < 0) throw Error(ErrorCode::kInvalidArgument, "negative index");
  std::int64_t s = s0_;
  for (int k = 0; k < n; ++k) {
    const std::int64_t ell = level_length(ell0_, k);
    std::int64_t next;
    if (__builtin_sub_overflow(-s, ell, &next)) throw Error(ErrorCode::kOverflow, "shift overflow");
    s = next;
  }
  return s;
}

std::vector<std::int64_t> ShiftSeq::terms(int n_max) const {
  std::vector<std::int64_t> out;
  std::int64_t s = s0_;
  for (int k = 0; k <= n_max; ++k) {
    out.push_back(s);
    if (k < n_max) {
      std::int64_t next;
      if (__builtin_sub_overflow(-s, level_length(ell0_, k), &next)) {
        throw Error(ErrorCode::kOverflow, "shift overflow");
      }
      s = next;
    }
  }
  return out;
}

int entry_index(std::int64_t s0, std::int64_t ell0) {
  if (ell0 <= 0) throw Error(ErrorCode::kInvalidArgument, "ell0 must be positive");
  std::int64_t s = s0;
  for (int m = 0;; ++m) {
    const std::int64_t ell = level_length(ell0, m);
    if (s > -ell && s < ell) return m;
    std::int64_t next;
    if (__builtin_sub_overflow(-s, ell, &next)) throw Error(ErrorCode::kOverflow, "shift overflow");
    s = next;
  }
}

const EConstants& e_constants() {
  static const EConstants cached = [] {
    EConstants ec;
    for (int j = 0; j < 3; ++j) {
      Poly3 a = Poly3::var(j);
      Poly3 b = Poly3::var((j + 1) % 3);
      Poly3 c = Poly3::var((j + 2) % 3);
      KElem den = reduce_poly((a - b) * (a - c));
      KElem num0 = reduce_poly(Poly3(2) + b * c);
      KElem num1 = reduce_poly(Poly3(-1) - b - c);
      ec.e[j][0] = k_div(num0, den);
      ec.e[j][1] = k_div(num1, den);
    }
    return ec;
  }();
  return cached;
}

Rational lily_closed_form(const Rational& f0, const Rational& f1, int k) {
  if (k < 0) throw Error(ErrorCode::kInvalidArgument, "negative exponent");
  const EConstants& ec = e_constants();
  KElem acc;
  for (int j = 0; j < 3; ++j) {
    KElem coef = ec.e[j][0] * KElem(QAlpha(f0)) + ec.e[j][1] * KElem(QAlpha(f1));
    acc += coef * pow(-KElem::alpha(j), k);
  }
  if (!acc.is_real() || !acc.a.is_rational()) {
    throw Error(ErrorCode::kInvalidArgument, "closed form did not land in Q");
  }
  return acc.a.p;
}

Rational lily_predict(const SeedPair& seed, std::int64_t s0, int n) {
  if (!seed.has_rational_coefficients()) {
    throw Error(ErrorCode::kSeedNotRational, "closed form needs a rational seed");
  }
  if (s0 <= -seed.ell0() || s0 >= seed.ell0()) {
    throw Error(ErrorCode::kShiftNotEntered, "need |s0| < ell0", s0);
  }
  if (n < 0) throw Error(ErrorCode::kInvalidArgument, "negative level");
  const Rational c0 = crosscorr(seed.x0(), seed.y0(), s0).re;
  if (n == 0) return c0;
  const GolayPair p1 = grs_pair(seed, 1);
  const std::int64_t s1 = -s0 - seed.ell0();
  const Rational a1 = crosscorr(p1.x, p1.y, s1).re;
  const Rational b1 = crosscorr(p1.x, p1.y, -s1).re;
  Rational out = lily_closed_form(a1, b1, n - 1);
  // Level 0 enters the recursion from n = 2 on, as 2 C_0(s_0) in both slots.
  if (n >= 2) out += lily_closed_form(2 * c0, 2 * c0, n - 2);
  return out;
}

namespace {

bool relation_holds(const std::string& rel, std::strong_ordering o) {
  if (rel == "<=") return o != std::strong_ordering::greater;
  if (rel == "<") return o == std::strong_ordering::less;
  if (rel == "=") return o == std::strong_ordering::equal;
  if (rel == ">=") return o != std::strong_ordering::less;
  if (rel == ">") return o == std::strong_ordering::greater;
  throw Error(ErrorCode::kInvalidArgument, "unknown relation " + rel);
}

}  // namespace

BoundVerdict make_verdict(std::string claim_id, std::string relation, const QAlpha& lhs,
                          const QAlpha& rhs, std::optional<std::string> witness) {
  BoundVerdict v;
  v.claim_id = std::move(claim_id);
  v.relation = std::move(relation);
  v.lhs = to_display_string(lhs);
  v.rhs = to_display_string(rhs);
  v.outcome = compare(lhs, rhs);
  v.holds = relation_holds(v.relation, v.outcome);
  v.witness = std::move(witness);
  return v;
}

BoundVerdict make_equality(std::string claim_id, const ComplexRational& lhs,
                           const ComplexRational& rhs, std::optional<std::string> witness) {
  BoundVerdict v;
  v.claim_id = std::move(claim_id);
  v.relation = "=";
  v.lhs = to_display_string(lhs);
  v.rhs = to_display_string(rhs);
  auto re = compare(QAlpha(lhs.re), QAlpha(rhs.re));
  auto im = compare(QAlpha(lhs.im), QAlpha(rhs.im));
  v.outcome = re != std::strong_ordering::equal ? re : im;
  v.holds = v.outcome == std::strong_ordering::equal;
  v.witness = std::move(witness);
  return v;
}

bool all_hold(const std::vector<BoundVerdict>& v) {
  for (const auto& x : v) {
    if (!x.holds) return false;
  }
  return true;
}

std::vector<BoundVerdict> nestor_cecilia_check(const SeedPair& seed, std::int64_t s0, int n_max) {
  std::vector<Spectrum> levels;
  for (int k = 0; k <= n_max; ++k) {
    GolayPair p = grs_pair(seed, k);
    levels.push_back(spectrum(p.x, p.y));
  }
  const auto s = ShiftSeq(s0, seed.ell0()).terms(n_max);
  auto C = [&](int k, std::int64_t u) -> const ComplexRational& { return levels[static_cast<std::size_t>(k)].at(u); };
  const ComplexRational two(2), four(4);
  std::vector<BoundVerdict> out;
  for (int n = 2; n <= n_max; ++n) {
    const auto un = static_cast<std::size_t>(n);
    if (s[un] >= 0) continue;
    std::string w = "s0=" + std::to_string(s0) + " n=" + std::to_string(n) +
                    " s_n=" + std::to_string(s[un]);
    const auto& sm1 = s[un - 1];
    const auto& sm2 = s[un - 2];
    out.push_back(make_equality("nestor.first.n=" + std::to_string(n), C(n, s[un]),
                                -C(n - 1, -sm1) + two * C(n - 2, sm2), w));
    out.push_back(make_equality("nestor.second.n=" + std::to_string(n), C(n, -s[un]),
                                conj(C(n - 1, -sm1)) + two * conj(C(n - 2, sm2)), w));
    if (n > 2 && sm1 < 0) {
      out.push_back(make_equality(
          "cecilia.n=" + std::to_string(n), C(n, s[un]),
          conj(C(n - 1, sm1)) + two * C(n - 2, sm2) - four * conj(C(n - 3, s[un - 3])), w));
    }
  }
  return out;
}

PeakSeries compute_peak_series(const SeedPair& seed, int n_max, const Budget& budget) {
  PeakSeries out;
  PeakReport p0 = psl(seed.x0());
  p0.level = 0;
  out.psl.push_back(p0);
  for (int n = 0; n <= n_max; ++n) {
    StreamResult r = streaming_peaks(seed, n, std::nullopt, budget);
    out.pcc.push_back(r.pcc);
    if (n < n_max) out.psl.push_back(*r.psl_next);
  }
  return out;
}

namespace {

Rational exact_magnitude(const PeakReport& p) {
  auto m = p.magnitude();
  if (!m) {
    throw Error(ErrorCode::kSeedNotRational, "peak magnitude is not rational at level " +
                                                 std::to_string(p.level));
  }
  return *m;
}

std::string level_tag(int n) { return "n=" + std::to_string(n); }

void relabel(BoundVerdict& v, std::string lhs, std::string rhs) {
  v.lhs = std::move(lhs);
  v.rhs = std::move(rhs);
}

std::string apow(const std::string& coef, std::int64_t e) {
  return coef + "*a^" + std::to_string(e);
}

std::string first_witness(const PeakReport& p) {
  if (p.witnesses.empty()) return level_tag(p.level);
  return level_tag(p.level) + " s=" + std::to_string(p.witnesses.front().shift);
}

}  // namespace

std::vector<BoundVerdict> verify_rs_bounds(const PeakSeries& rs) {
  std::vector<BoundVerdict> out;
  for (std::size_t i = 0; i < rs.pcc.size(); ++i) {
    const int n = static_cast<int>(i);
    Rational pcc = exact_magnitude(rs.pcc[i]);
    auto v = make_verdict("rs.pcc_upper." + level_tag(n), n == 3 ? "=" : "<", QAlpha(pcc),
                          QAlpha(5) * alpha_pow(n - 3), first_witness(rs.pcc[i]));
    relabel(v, pcc.get_str(), apow("5", n - 3));
    out.push_back(std::move(v));
  }
  for (std::size_t i = 0; i < rs.psl.size(); ++i) {
    const int n = static_cast<int>(i);
    Rational p = exact_magnitude(rs.psl[i]);
    auto v = make_verdict("rs.psl_upper." + level_tag(n), n == 4 ? "=" : "<", QAlpha(p),
                          QAlpha(5) * alpha_pow(n - 4), first_witness(rs.psl[i]));
    relabel(v, p.get_str(), apow("5", n - 4));
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<BoundVerdict> verify_rs_bounds(int n_max) {
  return verify_rs_bounds(compute_peak_series(rudin_shapiro_seed(), n_max));
}

namespace {

// (A - x)^2 <= B C^n when x < A; trivially true otherwise.
BoundVerdict envelope(const std::string& id, const QAlpha& x, const QAlpha& a, const QAlpha& b,
                      const QAlpha& c, int n, const std::string& witness) {
  if (compare(x, a) != std::strong_ordering::less) {
    auto v = make_verdict(id, ">=", x, a, witness + " (above centre)");
    return v;
  }
  QAlpha gap = a - x;
  return make_verdict(id, "<=", gap * gap, b * pow(c, n), witness);
}

}  // namespace

std::vector<BoundVerdict> verify_rs_lower_bounds(const PeakSeries& rs) {
  const EConstants& ec = e_constants();
  const QAlpha A = ec.total(0).a;
  const QAlpha B = QAlpha(4) * (ec.total(1) * ec.total(2)).a;
  const QAlpha C = (KElem::alpha(1) * KElem::alpha(2)).a / alpha_pow(2);
  const QAlpha a0 = QAlpha::alpha();
  const QAlpha A_psl = A / a0;
  const QAlpha B_psl = (k_div(KElem(4) * ec.total(1) * ec.total(2),
                              KElem::alpha(1) * KElem::alpha(2))).a;
  const Rational vanessa(133991557);

  std::vector<BoundVerdict> out;
  const SeedPair seed = rudin_shapiro_seed();
  for (std::size_t i = 0; i < rs.pcc.size(); ++i) {
    const int n = static_cast<int>(i);
    Rational pcc = exact_magnitude(rs.pcc[i]);
    auto v = make_verdict("rs.pcc_lower." + level_tag(n), n == 38 ? "=" : ">", QAlpha(pcc),
                          QAlpha(vanessa) * alpha_pow(n - 38), first_witness(rs.pcc[i]));
    relabel(v, pcc.get_str(), apow("133991557", n - 38));
    out.push_back(std::move(v));

    const QAlpha scaled = QAlpha(pcc) / alpha_pow(n);
    out.push_back(envelope("rs.george_pcc." + level_tag(n), scaled, A, B, C, n, level_tag(n)));

    // The envelope around the standard shift itself, C(t_n) / (-a)^n.
    const std::int64_t tn = standard_shift(n, 1);
    ComplexRational ctn = n == 0 ? crosscorr(seed.x0(), seed.y0(), 0)
                                 : (n <= 2 ? [&] {
                                     GolayPair p = rudin_shapiro(n);
                                     return crosscorr(p.x, p.y, tn);
                                   }()
                                           : coeff_by_iteration(seed, n, n / 2, tn));
    QAlpha x = QAlpha(ctn.re) / pow(-a0, n);
    QAlpha gap = x - A;
    out.push_back(make_verdict("rs.george_tn." + level_tag(n), "<=", gap * gap, B * pow(C, n),
                               level_tag(n) + " t_n=" + std::to_string(tn) +
                                   " C=" + to_display_string(ctn)));
  }
  for (std::size_t i = 1; i < rs.psl.size(); ++i) {
    const int n = static_cast<int>(i);
    Rational p = exact_magnitude(rs.psl[i]);
    auto v = make_verdict("rs.psl_lower." + level_tag(n), n == 39 ? "=" : ">", QAlpha(p),
                          QAlpha(vanessa) * alpha_pow(n - 39), first_witness(rs.psl[i]));
    relabel(v, p.get_str(), apow("133991557", n - 39));
    out.push_back(std::move(v));
    out.push_back(envelope("rs.george_psl." + level_tag(n), QAlpha(p) / alpha_pow(n), A_psl,
                           B_psl, C, n, level_tag(n)));
  }

  // Where the computed lower bound and the envelope trade places.
  const QAlpha D = QAlpha(vanessa) / alpha_pow(38);
  const QAlpha gap = A - D;
  out.push_back(make_verdict("rs.vanessa.centre_above_bound", ">", gap, QAlpha(0)));
  out.push_back(make_verdict("rs.vanessa.stronger_through_41", "<", gap * gap, B * pow(C, 41)));
  out.push_back(make_verdict("rs.vanessa.weaker_from_42", ">", gap * gap, B * pow(C, 42)));
  const QAlpha gap_psl = A_psl - D / a0;
  out.push_back(make_verdict("rs.vanessa.psl_stronger_through_42", "<", gap_psl * gap_psl,
                             B_psl * pow(C, 42)));
  out.push_back(make_verdict("rs.vanessa.psl_weaker_from_43", ">", gap_psl * gap_psl,
                             B_psl * pow(C, 43)));
  return out;
}

std::vector<BoundVerdict> verify_rs_lower_bounds(int n_max) {
  return verify_rs_lower_bounds(compute_peak_series(rudin_shapiro_seed(), n_max));
}

QAlpha generic_prefactor(const Rational& pcc0, const Rational& psl0) {
  return QAlpha(9) * alpha_pow(-4) * QAlpha(pcc0) + QAlpha(18) * alpha_pow(-5) * QAlpha(psl0);
}

std::vector<BoundVerdict> verify_generic_bound(const SeedPair& seed, const PeakSeries& series) {
  if (series.pcc.empty()) return {};
  const Rational pcc0 = exact_magnitude(series.pcc[0]);
  const Rational psl0 = exact_magnitude(series.psl[0]);
  const QAlpha K = generic_prefactor(pcc0, psl0);
  const std::string seed_tag = "ell0=" + std::to_string(seed.ell0());
  std::vector<BoundVerdict> out;
  for (std::size_t i = 0; i < series.pcc.size(); ++i) {
    const int n = static_cast<int>(i);
    Rational pcc = exact_magnitude(series.pcc[i]);
    auto v = make_verdict("generic.pcc_upper." + level_tag(n), "<=", QAlpha(pcc),
                          K * alpha_pow(n), seed_tag + " " + first_witness(series.pcc[i]));
    relabel(v, pcc.get_str(), "K*a^" + std::to_string(n));
    out.push_back(std::move(v));
  }
  for (std::size_t i = 1; i < series.psl.size(); ++i) {
    const int n = static_cast<int>(i);
    Rational p = exact_magnitude(series.psl[i]);
    auto v = make_verdict("generic.psl_upper." + level_tag(n), "<=", QAlpha(p),
                          K * alpha_pow(n - 1), seed_tag + " " + first_witness(series.psl[i]));
    relabel(v, p.get_str(), "K*a^" + std::to_string(n - 1));
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<BoundVerdict> verify_generic_bound(const SeedPair& seed, int n_max) {
  return verify_generic_bound(seed, compute_peak_series(seed, n_max));
}

}  // namespace grs
