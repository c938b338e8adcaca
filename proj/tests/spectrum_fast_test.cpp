#include <gtest/gtest.h>

#include "grs/correlation.hpp"
#include "grs/errors.hpp"
#include "grs/spectrum_fast.hpp"
#include "paper_tables.hpp"
#include "test_support.hpp"

namespace grs {
namespace {

using testing::corpus;

TEST(Abgd, PaperRows) {
  for (const auto& r : testing::table2()) {
    const AbgdTable tab = abgd(r.t);
    const auto& e = tab.at(r.j);
    EXPECT_EQ(e, (AbgdTable::Entry{r.a, r.b, r.g, r.d})) << "t=" << r.t << " j=" << r.j;
  }
}

TEST(Abgd, SupportAndParity) {
  for (int t = 1; t <= 12; ++t) {
    const AbgdTable tab = abgd(t);
    EXPECT_EQ(tab.lo(), -(std::int64_t{1} << (t - 1)));
    EXPECT_EQ(tab.at(tab.hi()), AbgdTable::Entry{});
    EXPECT_EQ(tab.at(tab.lo() - 1), AbgdTable::Entry{});
    if (t < 2) continue;
    for (std::int64_t j = tab.lo(); j < tab.hi(); ++j) {
      if (j % 2 != 0) EXPECT_EQ(tab.at(j).g, 0) << "t=" << t << " j=" << j;
      if (j % 2 == 0) EXPECT_EQ(tab.at(j).d, 0) << "t=" << t << " j=" << j;
    }
  }
}

TEST(Geoff, PaperRows) {
  RsGeoffTable rs;
  for (int n = 0; n < static_cast<int>(testing::table1().size()); ++n) {
    for (const auto& sv : testing::table1()[static_cast<std::size_t>(n)]) {
      EXPECT_EQ(rs.value(n, sv.shift), sv.value) << "n=" << n << " s=" << sv.shift;
    }
  }
}

TEST(Geoff, MatchesOracleAcrossCorpus) {
  for (const auto& c : corpus()) {
    const int n_max = c.seed.is_binary() ? 10 : 6;
    std::vector<Spectrum> levels;
    for (int k = 0; k <= n_max; ++k) {
      GolayPair p = grs_pair(c.seed, k);
      levels.push_back(spectrum(p.x, p.y));
    }
    LevelLookup lookup = [&](int k, std::int64_t u) {
      return levels[static_cast<std::size_t>(k)].at(u);
    };
    for (int n = 2; n <= n_max; ++n) {
      const std::int64_t ell = level_length(c.seed.ell0(), n);
      for (std::int64_t s = -ell + 1; s < ell; ++s) {
        if (s == 0) continue;
        ASSERT_EQ(coeff_by_geoff(n, s, c.seed.ell0(), lookup),
                  levels[static_cast<std::size_t>(n)].at(s))
            << c.name << " n=" << n << " s=" << s;
      }
    }
  }
}

TEST(Geoff, Preconditions) {
  LevelLookup zero = [](int, std::int64_t) { return ComplexRational{}; };
  EXPECT_THROW(coeff_by_geoff(3, 0, 1, zero), Error);
  EXPECT_THROW(coeff_by_geoff(1, 1, 1, zero), Error);
}

TEST(Iteration, Examples) {
  const SeedPair rs = rudin_shapiro_seed();
  EXPECT_EQ(coeff_by_iteration(rs, 4, 2, -11), ComplexRational(5));
  EXPECT_EQ(coeff_by_iteration(rs, 10, 5, -341), ComplexRational(153));
  // r = 0: s a multiple of ell_{n-t+1}.
  EXPECT_TRUE(coeff_by_iteration(rs, 8, 3, 64).is_zero());
  try {
    coeff_by_iteration(rs, 3, 3, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kLevelTooSmall);
  }
}

// The exact evaluator on every corpus seed; the int evaluator is covered at
// full scale by the acceptance run.
TEST(Iteration, ExactPathMatchesOracle) {
  for (const auto& c : corpus()) {
    const int n_max = c.seed.is_binary() ? 9 : 7;
    for (int n = 2; n <= n_max; ++n) {
      GolayPair p = grs_pair(c.seed, n);
      Spectrum sp = spectrum(p.x, p.y);
      for (int t = 1; t < n; ++t) {
        auto ev = make_exact_evaluator(c.seed, n, t);
        for (std::int64_t s = -p.ell() + 1; s < p.ell(); ++s) {
          ASSERT_EQ(ev(s), sp.at(s)) << c.name << " n=" << n << " t=" << t << " s=" << s;
        }
      }
    }
  }
}

TEST(Iteration, IntPathMatchesOracle) {
  for (const auto& c : testing::binary_corpus()) {
    for (int n = 2; n <= 11; ++n) {
      GolayPair p = grs_pair(c.seed, n);
      IntSpectrum sp = int_spectrum(p.x, p.y);
      for (int t = 1; t < n; ++t) {
        auto ev = make_int_evaluator(c.seed, n, t);
        for (std::int64_t s = -p.ell() + 1; s < p.ell(); ++s) {
          ASSERT_EQ(ev(s), sp.at(s)) << c.name << " n=" << n << " t=" << t << " s=" << s;
        }
      }
    }
  }
}

TEST(Streaming, PaperRowsThroughTwenty) {
  const SeedPair rs = rudin_shapiro_seed();
  for (int n = 0; n <= 20; ++n) {
    StreamResult r = streaming_peaks(rs, n);
    const auto& want = testing::table3()[static_cast<std::size_t>(n)];
    ASSERT_EQ(r.pcc.witnesses.size(), want.size()) << "n=" << n;
    for (std::size_t i = 0; i < want.size(); ++i) {
      EXPECT_EQ(r.pcc.witnesses[i].shift, want[i].shift) << "n=" << n;
      EXPECT_EQ(r.pcc.witnesses[i].value, ComplexRational(want[i].value)) << "n=" << n;
    }
    const auto& want4 = testing::table4()[static_cast<std::size_t>(n + 1)];
    ASSERT_EQ(r.psl_next->witnesses.size(), want4.size()) << "n=" << n + 1;
    for (std::size_t i = 0; i < want4.size(); ++i) {
      EXPECT_EQ(r.psl_next->witnesses[i].shift, want4[i].shift);
      EXPECT_EQ(r.psl_next->witnesses[i].value, ComplexRational(want4[i].value));
    }
  }
}

TEST(Streaming, SplitIndependenceAcrossCorpus) {
  for (const auto& c : corpus()) {
    const int n_max = c.seed.is_binary() ? 12 : 7;
    for (int n = 2; n <= n_max; ++n) {
      GolayPair p = grs_pair(c.seed, n);
      PeakReport oracle = pcc(p.x, p.y);
      oracle.level = n;
      for (int t = 1; t < n; ++t) {
        StreamResult r = streaming_peaks(c.seed, n, t);
        EXPECT_EQ(r.pcc, oracle) << c.name << " n=" << n << " t=" << t;
      }
    }
  }
}

TEST(Streaming, PslNextMatchesOracle) {
  for (const auto& c : corpus()) {
    const int n_max = c.seed.is_binary() ? 11 : 6;
    for (int n = 0; n <= n_max; ++n) {
      StreamResult r = streaming_peaks(c.seed, n);
      GolayPair p = grs_pair(c.seed, n + 1);
      PeakReport want = psl(p.x);
      want.level = n + 1;
      EXPECT_EQ(*r.psl_next, want) << c.name << " n=" << n;
    }
  }
}

TEST(Streaming, BudgetAndSplitChecks) {
  Budget tiny;
  tiny.max_coefficients = 64;
  EXPECT_THROW(streaming_peaks(rudin_shapiro_seed(), 16, std::nullopt, tiny), Error);
  EXPECT_THROW(streaming_peaks(rudin_shapiro_seed(), 6, 6), Error);
  EXPECT_THROW(streaming_peaks(rudin_shapiro_seed(), 6, 0), Error);
}

TEST(Bounds, NellieExamples) {
  const AbgdTable t1 = abgd(1), t3 = abgd(3);
  EXPECT_EQ(nellie_bound(t3, -2, 0, 4, 7, 5), 0);
  EXPECT_EQ(nellie_bound(t1, 0, 8, 8, 11, 13), 11);
  EXPECT_EQ(nellie_bound(t3, -2, 1, 4, 7, 5), 35);
}

TEST(Bounds, DerrelExamples) {
  const AbgdTable t1 = abgd(1), t2 = abgd(2);
  EXPECT_EQ(derrel_bound(&t1, 2, 0, 1, 0), 3);
  EXPECT_EQ(derrel_bound(&t2, 3, -1, 1, 0), 5);
  EXPECT_EQ(derrel_bound(nullptr, 1, 0, 1, 1), 3);
}

// Both bounds dominate every coefficient they cover.
TEST(Bounds, Dominance) {
  for (const auto& c : testing::binary_corpus()) {
    const int n_max = c.seed.ell0() == 1 ? 14 : 11;
    std::vector<IntSpectrum> levels;
    std::vector<Rational> peaks;
    for (int k = 0; k <= n_max; ++k) {
      GolayPair p = grs_pair(c.seed, k);
      levels.push_back(int_spectrum(p.x, p.y));
      peaks.push_back(*pcc(p.x, p.y).magnitude());
    }
    const Rational pcc0 = peaks[0];
    const Rational psl0 = *psl(c.seed.x0()).magnitude();
    for (int n = 1; n <= n_max; ++n) {
      const auto& sp = levels[static_cast<std::size_t>(n)];
      const std::int64_t ell = level_length(c.seed.ell0(), n);
      const std::int64_t ell2 = level_length(c.seed.ell0(), 2);
      std::optional<AbgdTable> dt;
      if (n >= 2) dt = abgd(n - 1);
      for (std::int64_t s = -ell + 1; s < ell; ++s) {
        const Rational v(std::abs(sp.at(s)));
        ASSERT_LE(v, derrel_bound(dt ? &*dt : nullptr, n, floor_div(s, ell2), pcc0, psl0))
            << c.name << " n=" << n << " s=" << s;
      }
      for (int t = 1; t < n; ++t) {
        const AbgdTable tab = abgd(t);
        const std::int64_t ell_nt = level_length(c.seed.ell0(), n - t);
        const std::int64_t block = 2 * ell_nt;
        for (std::int64_t s = -ell + 1; s < ell; ++s) {
          const std::int64_t q = floor_div(s, block);
          const std::int64_t r = s - q * block;
          const Rational v(std::abs(sp.at(s)));
          ASSERT_LE(v, nellie_bound(tab, q, r, ell_nt, peaks[static_cast<std::size_t>(n - t)],
                                    peaks[static_cast<std::size_t>(n - t - 1)]))
              << c.name << " n=" << n << " t=" << t << " s=" << s;
        }
      }
    }
  }
}

}  // namespace
}  // namespace grs
