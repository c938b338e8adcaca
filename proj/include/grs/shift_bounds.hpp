#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "grs/correlation.hpp"
#include "grs/exactnum.hpp"
#include "grs/sequence.hpp"

namespace grs {

// t_n = ((-1)^n - 2^n) ell0 / 3.
std::int64_t standard_shift(int n, std::int64_t ell0);

// s_0, s_1, ... with s_{n+1} = -s_n - ell_n.
class ShiftSeq {
 public:
  ShiftSeq(std::int64_t s0, std::int64_t ell0) : s0_(s0), ell0_(ell0) {}

  std::int64_t s0() const { return s0_; }
  std::int64_t ell0() const { return ell0_; }
  std::int64_t term(int n) const;  // by iterating the rule
  std::vector<std::int64_t> terms(int n_max) const;

 private:
  std::int64_t s0_;
  std::int64_t ell0_;
};

// Least m with |s_m| < ell_m, found by iteration.
int entry_index(std::int64_t s0, std::int64_t ell0);

// E_{j,v} for j in Z/3Z, v in {0,1}, as exact elements of K.
struct EConstants {
  KElem e[3][2];
  KElem total(int j) const { return e[j][0] + e[j][1]; }           // E_j
  KElem g(int j, int u) const { return u == 0 ? total(j) : e[j][0] - e[j][1]; }
};
const EConstants& e_constants();

// sum_j (E_{j,0} f0 + E_{j,1} f1) (-alpha_j)^k, certified rational.
Rational lily_closed_form(const Rational& f0, const Rational& f1, int k);

// C_{x_n,y_n}(s_n) for s_n = t_n + (-1)^n s0, from the closed form in K.
// Needs a rational seed (kSeedNotRational) and |s0| < ell0 (kShiftNotEntered).
Rational lily_predict(const SeedPair& seed, std::int64_t s0, int n);

struct BoundVerdict {
  std::string claim_id;
  std::string relation;  // "<=", "<", "=", ">=", ">"
  std::string lhs;
  std::string rhs;
  std::strong_ordering outcome = std::strong_ordering::equal;
  bool holds = false;
  std::optional<std::string> witness;
};

// lhs REL rhs, decided by compare().
BoundVerdict make_verdict(std::string claim_id, std::string relation, const QAlpha& lhs,
                          const QAlpha& rhs, std::optional<std::string> witness = {});
// Exact equality of Gaussian rationals, componentwise through compare().
BoundVerdict make_equality(std::string claim_id, const ComplexRational& lhs,
                           const ComplexRational& rhs, std::optional<std::string> witness = {});

std::vector<BoundVerdict> nestor_cecilia_check(const SeedPair& seed, std::int64_t s0, int n_max);

// Peaks for n = 0..n_max: pcc[n] of (x_n, y_n) and psl[n] of x_n.
struct PeakSeries {
  std::vector<PeakReport> pcc;
  std::vector<PeakReport> psl;
};
PeakSeries compute_peak_series(const SeedPair& seed, int n_max, const Budget& budget = {});

std::vector<BoundVerdict> verify_rs_bounds(const PeakSeries& rs);
std::vector<BoundVerdict> verify_rs_bounds(int n_max);
std::vector<BoundVerdict> verify_rs_lower_bounds(const PeakSeries& rs);
std::vector<BoundVerdict> verify_rs_lower_bounds(int n_max);

// K = 9 a^-4 PCC0 + 18 a^-5 PSL0.
QAlpha generic_prefactor(const Rational& pcc0, const Rational& psl0);
std::vector<BoundVerdict> verify_generic_bound(const SeedPair& seed, const PeakSeries& series);
std::vector<BoundVerdict> verify_generic_bound(const SeedPair& seed, int n_max);

// Every alpha0 inequality used inside the upper-bound proofs.
std::vector<BoundVerdict> inequality_suite();
// Closed forms of the generating-function constants and related brackets.
std::vector<BoundVerdict> identity_suite();

bool all_hold(const std::vector<BoundVerdict>& v);

}  // namespace grs
