#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "grs/correlation.hpp"
#include "grs/rational.hpp"
#include "grs/sequence.hpp"

namespace grs {

// A_t, B_t, Gamma_t, Delta_t on j in [-2^{t-1}, 2^{t-1}).
class AbgdTable {
 public:
  struct Entry {
    std::int64_t a = 0, b = 0, g = 0, d = 0;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  int t() const { return t_; }
  std::int64_t lo() const { return -half_; }
  std::int64_t hi() const { return half_; }  // exclusive
  // Zero entry outside the support.
  const Entry& at(std::int64_t j) const {
    static const Entry zero{};
    if (j < -half_ || j >= half_) return zero;
    return entries_[static_cast<std::size_t>(j + half_)];
  }

 private:
  friend AbgdTable abgd(int t, const Budget& budget);
  int t_ = 0;
  std::int64_t half_ = 0;
  std::vector<Entry> entries_;
};

AbgdTable abgd(int t, const Budget& budget = {});

// C_{x_k,y_k} over (-ell_k, ell_k). With odd_only, even shifts are known to
// vanish and are not stored.
template <class T>
class LevelSpectrum {
 public:
  LevelSpectrum() = default;
  LevelSpectrum(int level, std::int64_t ell, bool odd_only)
      : level_(level), ell_(ell), odd_only_(odd_only && ell % 2 == 0),
        values_(static_cast<std::size_t>(odd_only_ ? ell : 2 * ell - 1)) {}

  int level() const { return level_; }
  std::int64_t ell() const { return ell_; }
  bool odd_only() const { return odd_only_; }

  const T& at(std::int64_t u) const {
    static const T zero{};
    if (u <= -ell_ || u >= ell_) return zero;
    if (odd_only_) {
      if ((u & 1) == 0) return zero;
      return values_[static_cast<std::size_t>((u + ell_ - 1) / 2)];
    }
    return values_[static_cast<std::size_t>(u + ell_ - 1)];
  }
  void set(std::int64_t u, T v);

 private:
  int level_ = 0;
  std::int64_t ell_ = 0;
  bool odd_only_ = false;
  std::vector<T> values_;
};

using IntLevel = LevelSpectrum<std::int64_t>;
using ExactLevel = LevelSpectrum<ComplexRational>;

// Level spectra by the brute-force oracle.
IntLevel oracle_int_level(const SeedPair& seed, int k, const Budget& budget = {});
ExactLevel oracle_exact_level(const SeedPair& seed, int k, const Budget& budget = {});

// Single coefficients C_{x_n,y_n}(s) from levels n-t and n-t-1:
//   s = q ell_{n-t+1} + r, 0 <= r < ell_{n-t+1},
//   C = A_q C_{n-t}(r - ell_{n-t}) + B_q conj C_{n-t}(ell_{n-t} - r)
//     + G_q C_{n-t-1}(r - 3 ell_{n-t-1}) + D_q conj C_{n-t-1}(ell_{n-t-1} - r).
template <class T>
class IterationEvaluator {
 public:
  IterationEvaluator(AbgdTable table, LevelSpectrum<T> upper, LevelSpectrum<T> lower, int n);

  int n() const { return n_; }
  int t() const { return table_.t(); }
  T operator()(std::int64_t s) const;

 private:
  AbgdTable table_;
  LevelSpectrum<T> upper_;  // level n-t
  LevelSpectrum<T> lower_;  // level n-t-1
  int n_;
  std::int64_t block_;      // ell_{n-t+1}
};

// Level k spectrum built by recursive descent (split floor(k/2)), using the
// oracle at k <= 2.
IntLevel descend_int_level(const SeedPair& seed, int k, const Budget& budget = {});
ExactLevel descend_exact_level(const SeedPair& seed, int k, const Budget& budget = {});

IterationEvaluator<std::int64_t> make_int_evaluator(const SeedPair& seed, int n, int t,
                                                    const Budget& budget = {});
IterationEvaluator<ComplexRational> make_exact_evaluator(const SeedPair& seed, int n, int t,
                                                         const Budget& budget = {});

// Requires 0 < t < n (kLevelTooSmall otherwise).
ComplexRational coeff_by_iteration(const SeedPair& seed, int n, int t, std::int64_t s,
                                   const Budget& budget = {});

// lower(k, u) must return C_{x_k,y_k}(u) for k in {n-1, n-2}.
using LevelLookup = std::function<ComplexRational(int, std::int64_t)>;
ComplexRational coeff_by_geoff(int n, std::int64_t s, std::int64_t ell0, const LevelLookup& lower);

// Rudin-Shapiro C_{x_n,y_n}(s) from the base facts, the zero rules and the
// two-level recursion only; memoized.
class RsGeoffTable {
 public:
  std::int64_t value(int n, std::int64_t s);

 private:
  std::map<std::pair<int, std::int64_t>, std::int64_t> memo_;
};

struct StreamResult {
  PeakReport pcc;                     // of (x_n, y_n)
  std::optional<PeakReport> psl_next; // of x_{n+1}
};

// Scans every shift of (x_n, y_n) without materializing the pair.
// t_split defaults to floor(n/2); n <= 2 uses the oracle.
StreamResult streaming_peaks(const SeedPair& seed, int n, std::optional<int> t_split = {},
                             const Budget& budget = {});

// C_{x_{n+1},x_{n+1}}(s) = conj C_{x_n,y_n}(ell_n - s) for s > 0.
PeakReport psl_from_pcc(const PeakReport& pcc_n, std::int64_t ell_n);

// Upper bound on |C_{n,s}| for s = q ell_{n-t+1} + r given peaks
// M_{n-t}, M_{n-t-1}; ell_nt = ell_{n-t}.
Rational nellie_bound(const AbgdTable& table, std::int64_t q, std::int64_t r,
                      std::int64_t ell_nt, const Rational& m_nt, const Rational& m_nt1);

// Bound on |C_{x_n,y_n}(s)| with q = floor(s / ell_2) from seed statistics.
// table must be abgd(n-1); n = 1 takes the seed-pair bound pcc0 + 2 psl0.
Rational derrel_bound(const AbgdTable* table, int n, std::int64_t q, const Rational& pcc0,
                      const Rational& psl0);

std::int64_t floor_div(std::int64_t a, std::int64_t b);

}  // namespace grs
