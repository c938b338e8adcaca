#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "grs/errors.hpp"
#include "grs/rational.hpp"
#include "grs/sequence.hpp"

namespace grs {

// Dense correlation values over the open window (-L, L); zero outside.
template <class T>
class BasicSpectrum {
 public:
  BasicSpectrum() = default;
  explicit BasicSpectrum(std::int64_t bound)
      : bound_(bound), values_(bound > 0 ? static_cast<std::size_t>(2 * bound - 1) : 0) {}

  std::int64_t support_bound() const { return bound_; }

  const T& at(std::int64_t s) const {
    if (s <= -bound_ || s >= bound_) return zero_;
    return values_[static_cast<std::size_t>(s + bound_ - 1)];
  }
  T& ref(std::int64_t s) {
    if (s <= -bound_ || s >= bound_) {
      throw Error(ErrorCode::kShiftOutOfRange, "shift outside spectrum window", s);
    }
    return values_[static_cast<std::size_t>(s + bound_ - 1)];
  }
  void set(std::int64_t s, T v) { ref(s) = std::move(v); }

  // Nonzero entries in ascending shift order.
  std::vector<std::pair<std::int64_t, T>> entries() const {
    std::vector<std::pair<std::int64_t, T>> out;
    for (std::int64_t s = -bound_ + 1; s < bound_; ++s) {
      const T& v = at(s);
      if (!(v == T{})) out.emplace_back(s, v);
    }
    return out;
  }

  friend bool operator==(const BasicSpectrum& a, const BasicSpectrum& b) {
    std::int64_t L = std::max(a.bound_, b.bound_);
    for (std::int64_t s = -L + 1; s < L; ++s) {
      if (!(a.at(s) == b.at(s))) return false;
    }
    return true;
  }

 private:
  inline static const T zero_{};
  std::int64_t bound_ = 0;
  std::vector<T> values_;
};

using Spectrum = BasicSpectrum<ComplexRational>;
using IntSpectrum = BasicSpectrum<std::int64_t>;

Spectrum to_spectrum(const IntSpectrum& s);

// C_{f,g}(s) = sum_j f_{j+s} conj(g_j).
ComplexRational crosscorr(const Sequence& f, const Sequence& g, std::int64_t s);
// Both sequences binary: word-parallel xor/popcount.
std::int64_t crosscorr_binary(const Sequence& f, const Sequence& g, std::int64_t s);

Spectrum spectrum(const Sequence& f, const Sequence& g, const Budget& budget = {});
IntSpectrum int_spectrum(const Sequence& f, const Sequence& g, const Budget& budget = {});

struct Witness {
  std::int64_t shift = 0;
  ComplexRational value;

  friend bool operator==(const Witness& a, const Witness& b) {
    return a.shift == b.shift && a.value == b.value;
  }
};

// Peak |C| with every attaining shift. A zero peak carries no witnesses.
struct PeakReport {
  int level = -1;
  Rational norm_sq;
  std::vector<Witness> witnesses;

  // |C| when norm_sq is a rational square.
  std::optional<Rational> magnitude() const;

  friend bool operator==(const PeakReport& a, const PeakReport& b) {
    return a.level == b.level && a.norm_sq == b.norm_sq && a.witnesses == b.witnesses;
  }
};

PeakReport peak_of(const Spectrum& sp, bool positive_only = false);
PeakReport peak_of(const IntSpectrum& sp, bool positive_only = false);

PeakReport pcc(const Sequence& f, const Sequence& g);
// Positive shifts only; C(-s) is the conjugate.
PeakReport psl(const Sequence& f);

ComplexRational periodic_corr(const Sequence& f, const Sequence& g, std::int64_t k,
                              std::int64_t s);

Rational demerit_auto(const Sequence& f);
Rational demerit_cross(const Sequence& f, const Sequence& g);

}  // namespace grs
