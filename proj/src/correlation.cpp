#include "grs/correlation.hpp"

#include <algorithm>
#include <bit>
#include <type_traits>

#include "parallel.hpp"

namespace grs {

namespace {

__extension__ typedef __int128 i128;
__extension__ typedef unsigned __int128 u128;

std::uint64_t window(const std::vector<std::uint64_t>& bits, std::int64_t pos) {
  const auto w = static_cast<std::size_t>(pos / 64);
  const int off = static_cast<int>(pos % 64);
  std::uint64_t lo = bits[w] >> off;
  if (off != 0 && w + 1 < bits.size()) lo |= bits[w + 1] << (64 - off);
  return lo;
}

template <class T>
PeakReport peak_impl(const BasicSpectrum<T>& sp, bool positive_only) {
  PeakReport rep;
  rep.norm_sq = 0;
  const std::int64_t L = sp.support_bound();
  for (std::int64_t s = positive_only ? 1 : -L + 1; s < L; ++s) {
    const T& v = sp.at(s);
    if (v == T{}) continue;
    Rational nsq;
    if constexpr (std::is_same_v<T, std::int64_t>) {
      Integer iv = to_integer(v);
      nsq = Rational(iv * iv);
    } else {
      nsq = v.norm();
    }
    int c = cmp(nsq, rep.norm_sq);
    if (c > 0) {
      rep.norm_sq = nsq;
      rep.witnesses.clear();
    }
    if (c >= 0) rep.witnesses.push_back({s, ComplexRational(v)});
  }
  return rep;
}

// Coefficients times a common denominator, as Gaussian integers in int64.
struct ScaledInts {
  Integer den = 1;
  std::vector<std::int64_t> re, im;
  std::int64_t max_abs = 0;
};

std::optional<ScaledInts> scale_to_ints(const std::vector<ComplexRational>& c) {
  ScaledInts out;
  for (const auto& z : c) {
    mpz_lcm(out.den.get_mpz_t(), out.den.get_mpz_t(), z.re.get_den_mpz_t());
    mpz_lcm(out.den.get_mpz_t(), out.den.get_mpz_t(), z.im.get_den_mpz_t());
  }
  const Integer limit = Integer(1) << 62;
  for (const auto& z : c) {
    const Rational r = z.re * out.den, i = z.im * out.den;
    const Integer& rn = r.get_num();
    const Integer& in = i.get_num();
    if (abs(rn) >= limit || abs(in) >= limit) return std::nullopt;
    out.re.push_back(to_int64(rn));
    out.im.push_back(to_int64(in));
    out.max_abs = std::max({out.max_abs, std::abs(out.re.back()), std::abs(out.im.back())});
  }
  return out;
}

Integer from_int128(i128 v) {
  const bool neg = v < 0;
  u128 m = neg ? -static_cast<u128>(v) : static_cast<u128>(v);
  Integer hi(static_cast<unsigned long>(static_cast<std::uint64_t>(m >> 64)));
  Integer lo(static_cast<unsigned long>(static_cast<std::uint64_t>(m)));
  Integer out = (hi << 64) + lo;
  return neg ? Integer(-out) : out;
}

}  // namespace

Spectrum to_spectrum(const IntSpectrum& s) {
  Spectrum out(s.support_bound());
  for (std::int64_t k = -s.support_bound() + 1; k < s.support_bound(); ++k) {
    if (s.at(k) != 0) out.set(k, ComplexRational(s.at(k)));
  }
  return out;
}

std::int64_t crosscorr_binary(const Sequence& f, const Sequence& g, std::int64_t s) {
  const std::int64_t j0 = std::max<std::int64_t>(0, -s);
  const std::int64_t j1 = std::min<std::int64_t>(g.length(), f.length() - s);
  if (j1 <= j0) return 0;
  const std::int64_t m = j1 - j0;
  const auto& fb = f.packed_bits();
  const auto& gb = g.packed_bits();
  std::int64_t pop = 0;
  for (std::int64_t k = 0; k < m; k += 64) {
    std::uint64_t x = window(fb, j0 + s + k) ^ window(gb, j0 + k);
    if (m - k < 64) x &= (std::uint64_t{1} << (m - k)) - 1;
    pop += std::popcount(x);
  }
  return m - 2 * pop;
}

ComplexRational crosscorr(const Sequence& f, const Sequence& g, std::int64_t s) {
  if (f.is_binary() && g.is_binary()) return ComplexRational(crosscorr_binary(f, g, s));
  const std::int64_t j0 = std::max<std::int64_t>(0, -s);
  const std::int64_t j1 = std::min<std::int64_t>(g.length(), f.length() - s);
  ComplexRational acc;
  for (std::int64_t j = j0; j < j1; ++j) acc += f.coeff(j + s) * conj(g.coeff(j));
  return acc;
}

IntSpectrum int_spectrum(const Sequence& f, const Sequence& g, const Budget& budget) {
  if (!f.is_binary() || !g.is_binary()) {
    throw Error(ErrorCode::kInvalidArgument, "int_spectrum needs binary sequences");
  }
  const std::int64_t L = std::max(f.length(), g.length());
  budget.require(2 * L, "correlation spectrum");
  IntSpectrum out(L);
  if (L == 0) return out;
  const std::int64_t chunks = (L < 256) ? 1 : 4 * static_cast<std::int64_t>(detail::worker_count());
  detail::parallel_chunks(-L + 1, L, chunks, [&](std::int64_t, std::int64_t lo, std::int64_t hi) {
    for (std::int64_t s = lo; s < hi; ++s) out.ref(s) = crosscorr_binary(f, g, s);
  });
  return out;
}

Spectrum spectrum(const Sequence& f, const Sequence& g, const Budget& budget) {
  if (f.is_binary() && g.is_binary()) return to_spectrum(int_spectrum(f, g, budget));
  const std::int64_t L = std::max(f.length(), g.length());
  budget.require(2 * L, "correlation spectrum");
  Spectrum out(L);
  const auto fc = f.coefficients();
  const auto gc = g.coefficients();

  auto fs = scale_to_ints(fc);
  auto gs = scale_to_ints(gc);
  // Each shift sums at most 2 min(len) products; keep that inside int128.
  const long double bound = static_cast<long double>(fs ? fs->max_abs : 0) *
                            static_cast<long double>(gs ? gs->max_abs : 0) * 2.0L *
                            static_cast<long double>(std::max<std::int64_t>(1, L));
  if (fs && gs && bound < 1e37L) {
    const Integer den = fs->den * gs->den;
    const std::int64_t nf = f.length(), ng = g.length();
    const std::int64_t chunks = (L < 256) ? 1 : 4 * static_cast<std::int64_t>(detail::worker_count());
    detail::parallel_chunks(-L + 1, L, chunks, [&](std::int64_t, std::int64_t lo, std::int64_t hi) {
      for (std::int64_t sft = lo; sft < hi; ++sft) {
        const std::int64_t j0 = std::max<std::int64_t>(0, -sft);
        const std::int64_t j1 = std::min<std::int64_t>(ng, nf - sft);
        i128 re = 0, im = 0;
        for (std::int64_t j = j0; j < j1; ++j) {
          const auto a = static_cast<std::size_t>(j + sft), b = static_cast<std::size_t>(j);
          const i128 ar = fs->re[a], ai = fs->im[a], br = gs->re[b], bi = gs->im[b];
          re += ar * br + ai * bi;
          im += ai * br - ar * bi;
        }
        if (re == 0 && im == 0) continue;
        out.ref(sft) = ComplexRational(make_rational(from_int128(re), den),
                                       make_rational(from_int128(im), den));
      }
    });
    return out;
  }

  std::vector<ComplexRational> gconj;
  gconj.reserve(gc.size());
  for (const auto& c : gc) gconj.push_back(conj(c));
  for (std::int64_t i = 0; i < f.length(); ++i) {
    const auto& a = fc[static_cast<std::size_t>(i)];
    if (a.is_zero()) continue;
    for (std::int64_t j = 0; j < g.length(); ++j) {
      const auto& b = gconj[static_cast<std::size_t>(j)];
      if (b.is_zero()) continue;
      out.ref(i - j) += a * b;
    }
  }
  return out;
}

std::optional<Rational> PeakReport::magnitude() const {
  Rational root;
  if (exact_sqrt(norm_sq, root)) return root;
  return std::nullopt;
}

PeakReport peak_of(const Spectrum& sp, bool positive_only) { return peak_impl(sp, positive_only); }
PeakReport peak_of(const IntSpectrum& sp, bool positive_only) {
  return peak_impl(sp, positive_only);
}

PeakReport pcc(const Sequence& f, const Sequence& g) {
  if (f.is_binary() && g.is_binary()) return peak_of(int_spectrum(f, g));
  return peak_of(spectrum(f, g));
}

PeakReport psl(const Sequence& f) {
  if (f.empty()) throw Error(ErrorCode::kZeroLength, "PSL of an empty sequence");
  if (f.is_binary()) return peak_of(int_spectrum(f, f), true);
  return peak_of(spectrum(f, f), true);
}

ComplexRational periodic_corr(const Sequence& f, const Sequence& g, std::int64_t k,
                              std::int64_t s) {
  if (f.length() > k || g.length() > k) {
    throw Error(ErrorCode::kInvalidArgument, "period shorter than a sequence");
  }
  if (s < 0 || s >= k) throw Error(ErrorCode::kShiftOutOfRange, "shift must lie in [0, k)", s);
  return crosscorr(f, g, s) + crosscorr(f, g, s - k);
}

namespace {

Rational sum_norms(const Spectrum& sp, bool skip_zero) {
  Rational acc = 0;
  for (const auto& [s, v] : sp.entries()) {
    if (skip_zero && s == 0) continue;
    acc += v.norm();
  }
  return acc;
}

}  // namespace

Rational demerit_auto(const Sequence& f) {
  Spectrum sp = spectrum(f, f);
  Rational c0 = sp.at(0).re;
  if (sgn(c0) == 0) throw Error(ErrorCode::kZeroSequence, "demerit of the zero sequence");
  return sum_norms(sp, true) / (c0 * c0);
}

Rational demerit_cross(const Sequence& f, const Sequence& g) {
  Rational cf = crosscorr(f, f, 0).re;
  Rational cg = crosscorr(g, g, 0).re;
  if (sgn(cf) == 0 || sgn(cg) == 0) {
    throw Error(ErrorCode::kZeroSequence, "demerit of the zero sequence");
  }
  return sum_norms(spectrum(f, g), false) / (cf * cg);
}

}  // namespace grs
