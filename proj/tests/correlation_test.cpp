#include <gtest/gtest.h>

#include <random>

#include "grs/correlation.hpp"
#include "grs/errors.hpp"
#include "test_support.hpp"

namespace grs {
namespace {

using testing::corpus;
using testing::cr;
using testing::seq;

std::vector<std::int64_t> shifts_of(const PeakReport& p) {
  std::vector<std::int64_t> out;
  for (const auto& w : p.witnesses) out.push_back(w.shift);
  return out;
}

TEST(Crosscorr, TableValues) {
  EXPECT_EQ(crosscorr(seq({1}), seq({1}), 0), ComplexRational(1));
  GolayPair p1 = rudin_shapiro(1);
  EXPECT_EQ(crosscorr(p1.x, p1.y, -1), ComplexRational(-1));
  EXPECT_TRUE(crosscorr(p1.x, p1.y, 4).is_zero());
  GolayPair p2 = rudin_shapiro(2);
  Spectrum sp = spectrum(p2.x, p2.y);
  EXPECT_EQ(sp.at(-3), ComplexRational(1));
  EXPECT_EQ(sp.at(-1), ComplexRational(1));
  EXPECT_EQ(sp.at(1), ComplexRational(3));
  EXPECT_EQ(sp.at(3), ComplexRational(-1));
}

TEST(Crosscorr, MonomialSpectrum) {
  Sequence f = Sequence::monomial(cr(3, 4), 5);
  Spectrum sp = spectrum(f, f);
  auto e = sp.entries();
  ASSERT_EQ(e.size(), 1u);
  EXPECT_EQ(e[0].first, 0);
  EXPECT_EQ(e[0].second, ComplexRational(25));
}

TEST(Crosscorr, BinaryPathMatchesNaiveOnRandomSigns) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    std::uniform_int_distribution<int> len(1, 300);
    std::vector<int> a(static_cast<std::size_t>(len(rng))), b(static_cast<std::size_t>(len(rng)));
    for (auto& v : a) v = (rng() & 1) ? 1 : -1;
    for (auto& v : b) v = (rng() & 1) ? 1 : -1;
    Sequence f = Sequence::from_signs(a), g = Sequence::from_signs(b);
    auto fc = f.coefficients(), gc = g.coefficients();
    for (std::int64_t s = -static_cast<std::int64_t>(b.size()) - 2;
         s <= static_cast<std::int64_t>(a.size()) + 2; ++s) {
      ASSERT_EQ(crosscorr(f, g, s), testing::naive_corr(fc, gc, s)) << "s=" << s;
    }
  }
}

TEST(Crosscorr, SpectrumMatchesNaiveAcrossCorpus) {
  for (const auto& c : corpus()) {
    for (int n = 0; n <= 5; ++n) {
      GolayPair p = grs_pair(c.seed, n);
      auto naive = testing::naive_pair(c.seed, n);
      Spectrum sp = spectrum(p.x, p.y);
      for (std::int64_t s = -p.ell() - 1; s <= p.ell() + 1; ++s) {
        ASSERT_EQ(sp.at(s), testing::naive_corr(naive.x, naive.y, s)) << c.name << " s=" << s;
      }
    }
  }
}

TEST(Crosscorr, HugeCoefficientsUseTheGeneralPath) {
  const Rational big = Rational(Integer(1) << 70) / 3;
  std::vector<ComplexRational> a{ComplexRational(big, 1), 2, ComplexRational(-big)};
  std::vector<ComplexRational> b{1, ComplexRational(0, big)};
  Spectrum sp = spectrum(Sequence::from_coefficients(a), Sequence::from_coefficients(b));
  for (std::int64_t s = -3; s <= 3; ++s) EXPECT_EQ(sp.at(s), testing::naive_corr(a, b, s));
}

TEST(Peaks, Examples) {
  GolayPair p1 = rudin_shapiro(1);
  PeakReport a = pcc(p1.x, p1.y);
  EXPECT_EQ(a.magnitude(), Rational(1));
  EXPECT_EQ(shifts_of(a), (std::vector<std::int64_t>{-1, 1}));

  GolayPair p10 = rudin_shapiro(10);
  PeakReport b = pcc(p10.x, p10.y);
  EXPECT_EQ(b.magnitude(), Rational(153));
  EXPECT_EQ(shifts_of(b), (std::vector<std::int64_t>{-341}));

  PeakReport c = pcc(seq({1}), seq({1}));
  EXPECT_EQ(shifts_of(c), (std::vector<std::int64_t>{0}));

  PeakReport d = psl(rudin_shapiro(2).x);
  EXPECT_EQ(d.magnitude(), Rational(1));
  ASSERT_EQ(d.witnesses.size(), 2u);
  EXPECT_EQ(d.witnesses[1].shift, 3);
  EXPECT_EQ(d.witnesses[1].value, ComplexRational(-1));

  PeakReport e = psl(rudin_shapiro(4).x);
  EXPECT_EQ(e.magnitude(), Rational(5));
  ASSERT_EQ(e.witnesses.size(), 1u);
  EXPECT_EQ(e.witnesses[0].shift, 11);
  EXPECT_EQ(e.witnesses[0].value, ComplexRational(-5));

  PeakReport f = psl(seq({1}));
  EXPECT_EQ(f.norm_sq, 0);
  EXPECT_TRUE(f.witnesses.empty());
  EXPECT_THROW(psl(Sequence{}), Error);
}

TEST(Peaks, ComplexMagnitudeStaysSquared) {
  PeakReport p = pcc(seq({cr(1, 1)}), seq({1}));
  EXPECT_EQ(p.norm_sq, 2);
  EXPECT_FALSE(p.magnitude());
}

TEST(Periodic, Examples) {
  Sequence f = seq({1, 2, 3});
  EXPECT_EQ(periodic_corr(f, f, 3, 0), crosscorr(f, f, 0));
  GolayPair p1 = rudin_shapiro(1);
  EXPECT_TRUE(periodic_corr(p1.x, p1.y, 2, 1).is_zero());
  GolayPair p2 = rudin_shapiro(2);
  EXPECT_EQ(periodic_corr(p2.x, p2.y, 4, 1), ComplexRational(4));
  try {
    periodic_corr(p2.x, p2.y, 4, 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kShiftOutOfRange);
  }
}

TEST(Demerit, Examples) {
  EXPECT_EQ(demerit_auto(rudin_shapiro(2).x), make_rational(1, 4));
  GolayPair p1 = rudin_shapiro(1);
  EXPECT_EQ(demerit_cross(p1.x, p1.y), make_rational(1, 2));
  EXPECT_EQ(demerit_auto(seq({-1})), 0);
}

TEST(Demerit, TrendAtLevelFourteen) {
  GolayPair p = rudin_shapiro(14);
  const Rational da = demerit_auto(p.x), dc = demerit_cross(p.x, p.y);
  const Rational third = make_rational(1, 3), two_thirds = make_rational(2, 3);
  EXPECT_LE(abs(da - third), third * make_rational(5, 100));
  EXPECT_LE(abs(dc - two_thirds), two_thirds * make_rational(5, 100));
}

// Symmetries, the PSL/PCC link and the seed-pair bound across the corpus.
TEST(CorrelationProperty, SymmetriesAndLinks) {
  for (const auto& c : corpus()) {
    const int n_max = c.seed.is_binary() ? 12 : 7;
    for (int n = 0; n <= n_max; ++n) {
      GolayPair p = grs_pair(c.seed, n);
      Spectrum xy = spectrum(p.x, p.y), yx = spectrum(p.y, p.x);
      for (std::int64_t s = -p.ell() + 1; s < p.ell(); ++s) {
        ASSERT_EQ(yx.at(s), conj(xy.at(-s))) << c.name << " n=" << n << " s=" << s;
      }
      PeakReport a = pcc(p.x, p.y), b = pcc(p.y, p.x);
      EXPECT_EQ(a.norm_sq, b.norm_sq);
      EXPECT_EQ(psl(p.x).norm_sq, psl(p.y).norm_sq) << c.name << " n=" << n;
      if (n >= 1) {
        GolayPair q = grs_pair(c.seed, n - 1);
        EXPECT_EQ(psl(p.x).norm_sq, pcc(q.x, q.y).norm_sq) << c.name << " n=" << n;
      }
    }
    GolayPair p1 = grs_pair(c.seed, 1);
    // Every corpus seed has rational peak magnitudes.
    auto m1 = pcc(p1.x, p1.y).magnitude();
    auto s0 = psl(c.seed.x0()).magnitude();
    auto c0 = pcc(c.seed.x0(), c.seed.y0()).magnitude();
    ASSERT_TRUE(m1 && s0 && c0) << c.name;
    EXPECT_LE(*m1, 2 * *s0 + *c0) << c.name;
  }
}

TEST(CorrelationProperty, EvenShiftsVanishForRudinShapiro) {
  for (int n = 1; n <= 12; ++n) {
    GolayPair p = rudin_shapiro(n);
    IntSpectrum xy = int_spectrum(p.x, p.y), xx = int_spectrum(p.x, p.x);
    for (std::int64_t s = -p.ell() + 2; s < p.ell(); s += 2) {
      ASSERT_EQ(xy.at(s), 0) << "n=" << n << " s=" << s;
      if (s != 0) ASSERT_EQ(xx.at(s), 0) << "n=" << n << " s=" << s;
    }
  }
}

}  // namespace
}  // namespace grs
