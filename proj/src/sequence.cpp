#include "grs/sequence.hpp"

#include <cstdlib>
#include <limits>

#include "grs/correlation.hpp"
#include "grs/errors.hpp"

namespace grs {

void Budget::require(std::int64_t cells, std::string_view what) const {
  if (cells < 0 || cells > max_coefficients) {
    throw Error(ErrorCode::kBudgetExceeded,
                std::string(what) + " needs " + std::to_string(cells) +
                    " cells, budget is " + std::to_string(max_coefficients) +
                    " (use the streaming peak scan for large levels)");
  }
}

Budget Budget::from_environment() {
  Budget b;
  if (const char* env = std::getenv("GRS_BUDGET_BYTES"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    long long bytes = std::strtoll(env, &end, 10);
    if (end == env || *end != '\0' || bytes <= 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  std::string("GRS_BUDGET_BYTES is not a positive integer: ") + env);
    }
    b.max_coefficients = bytes / 8;
  }
  return b;
}

namespace {

constexpr int kWordBits = 64;

std::int64_t words_for(std::int64_t bits) { return (bits + kWordBits - 1) / kWordBits; }

bool get_bit(const std::vector<std::uint64_t>& bits, std::int64_t j) {
  return (bits[static_cast<std::size_t>(j / kWordBits)] >> (j % kWordBits)) & 1U;
}

void set_bit(std::vector<std::uint64_t>& bits, std::int64_t j) {
  bits[static_cast<std::size_t>(j / kWordBits)] |= std::uint64_t{1} << (j % kWordBits);
}

bool is_unit_sign(const ComplexRational& c, bool& negative) {
  if (!c.is_real()) return false;
  if (c.re == 1) {
    negative = false;
    return true;
  }
  if (c.re == -1) {
    negative = true;
    return true;
  }
  return false;
}

}  // namespace

Sequence Sequence::from_signs(std::span<const int> signs) {
  Sequence s;
  s.length_ = static_cast<std::int64_t>(signs.size());
  s.binary_ = true;
  s.bits_.assign(static_cast<std::size_t>(words_for(s.length_)), 0);
  for (std::int64_t j = 0; j < s.length_; ++j) {
    int v = signs[static_cast<std::size_t>(j)];
    if (v == -1) {
      set_bit(s.bits_, j);
    } else if (v != 1) {
      throw Error(ErrorCode::kInvalidArgument, "binary sequence entries must be +1 or -1");
    }
  }
  return s;
}

Sequence Sequence::from_sign_string(std::string_view signs) {
  std::vector<int> v;
  v.reserve(signs.size());
  for (char c : signs) {
    if (c == '+') {
      v.push_back(1);
    } else if (c == '-') {
      v.push_back(-1);
    } else {
      throw Error(ErrorCode::kParse, std::string("unexpected character in sign string: ") + c);
    }
  }
  return from_signs(v);
}

Sequence Sequence::from_coefficients(std::vector<ComplexRational> coeffs) {
  Sequence s;
  s.length_ = static_cast<std::int64_t>(coeffs.size());
  bool all_signs = !coeffs.empty();
  std::vector<std::uint64_t> bits(static_cast<std::size_t>(words_for(s.length_)), 0);
  for (std::int64_t j = 0; j < s.length_ && all_signs; ++j) {
    bool negative = false;
    all_signs = is_unit_sign(coeffs[static_cast<std::size_t>(j)], negative);
    if (all_signs && negative) set_bit(bits, j);
  }
  if (all_signs) {
    s.binary_ = true;
    s.bits_ = std::move(bits);
  } else {
    s.coeffs_ = std::move(coeffs);
  }
  return s;
}

Sequence Sequence::from_packed(std::vector<std::uint64_t> bits, std::int64_t length) {
  if (static_cast<std::int64_t>(bits.size()) != words_for(length)) {
    throw Error(ErrorCode::kInvalidArgument, "packed word count does not match length");
  }
  Sequence s;
  s.length_ = length;
  s.binary_ = true;
  s.bits_ = std::move(bits);
  return s;
}

Sequence Sequence::monomial(const ComplexRational& c, std::int64_t k) {
  if (k < 0) throw Error(ErrorCode::kInvalidArgument, "monomial degree must be nonnegative");
  std::vector<ComplexRational> v(static_cast<std::size_t>(k + 1));
  v.back() = c;
  return from_coefficients(std::move(v));
}

ComplexRational Sequence::coeff(std::int64_t j) const {
  if (j < 0 || j >= length_) return {};
  if (binary_) return ComplexRational(get_bit(bits_, j) ? -1 : 1);
  return coeffs_[static_cast<std::size_t>(j)];
}

int Sequence::sign_at(std::int64_t j) const { return get_bit(bits_, j) ? -1 : 1; }

std::vector<ComplexRational> Sequence::coefficients() const {
  if (!binary_) return coeffs_;
  std::vector<ComplexRational> v;
  v.reserve(static_cast<std::size_t>(length_));
  for (std::int64_t j = 0; j < length_; ++j) v.emplace_back(sign_at(j));
  return v;
}

bool Sequence::is_zero() const { return !degree().has_value(); }

std::optional<std::int64_t> Sequence::degree() const {
  if (binary_) {
    if (length_ == 0) return std::nullopt;
    return length_ - 1;
  }
  for (std::int64_t j = length_ - 1; j >= 0; --j) {
    if (!coeffs_[static_cast<std::size_t>(j)].is_zero()) return j;
  }
  return std::nullopt;
}

bool Sequence::has_integer_coefficients() const {
  if (binary_) return true;
  for (const auto& c : coeffs_) {
    if (!c.is_real() || c.re.get_den() != 1) return false;
  }
  return true;
}

bool Sequence::has_rational_coefficients() const {
  if (binary_) return true;
  for (const auto& c : coeffs_) {
    if (!c.is_real()) return false;
  }
  return true;
}

std::string Sequence::to_sign_string() const {
  if (!binary_) throw Error(ErrorCode::kInvalidArgument, "sequence is not binary");
  std::string s;
  s.reserve(static_cast<std::size_t>(length_));
  for (std::int64_t j = 0; j < length_; ++j) s.push_back(get_bit(bits_, j) ? '-' : '+');
  return s;
}

Sequence Sequence::padded(std::int64_t length) const {
  if (length <= length_) return *this;
  std::vector<ComplexRational> v = coefficients();
  v.resize(static_cast<std::size_t>(length));
  Sequence s;
  s.length_ = length;
  s.coeffs_ = std::move(v);
  return s;
}

bool operator==(const Sequence& a, const Sequence& b) {
  if (a.binary_ && b.binary_ && a.length_ == b.length_) return a.bits_ == b.bits_;
  std::int64_t n = std::max(a.length_, b.length_);
  for (std::int64_t j = 0; j < n; ++j) {
    if (!(a.coeff(j) == b.coeff(j))) return false;
  }
  return true;
}

bool SeedPair::is_rudin_shapiro() const {
  return ell0_ == 1 && x0_.is_binary() && y0_.is_binary() && x0_.sign_at(0) == 1 &&
         y0_.sign_at(0) == 1;
}

SeedPair validate_seed(const Sequence& x0, const Sequence& y0, std::int64_t ell0) {
  if (ell0 <= 0) throw Error(ErrorCode::kInvalidArgument, "ell0 must be positive");
  if (x0.is_zero() || y0.is_zero()) {
    throw Error(ErrorCode::kZeroSequence, "seed sequences must be nonzero");
  }
  if (*x0.degree() >= ell0 || *y0.degree() >= ell0) {
    throw Error(ErrorCode::kDegreeTooLarge,
                "seed degree must be below ell0 = " + std::to_string(ell0));
  }
  if (x0.length() > ell0 || y0.length() > ell0) {
    throw Error(ErrorCode::kDegreeTooLarge, "declared seed length exceeds ell0");
  }
  Sequence x = x0.padded(ell0);
  Sequence y = y0.padded(ell0);
  if (!(crosscorr(x, x, 0) == crosscorr(y, y, 0))) {
    throw Error(ErrorCode::kEnergyMismatch, "C_{x0,x0}(0) != C_{y0,y0}(0)");
  }
  // C(-s) = conj C(s), so positive shifts decide complementarity.
  for (std::int64_t s = 1; s < ell0; ++s) {
    if (!(crosscorr(x, x, s) + crosscorr(y, y, s)).is_zero()) {
      throw Error(ErrorCode::kNotGolay,
                  "autocorrelations do not cancel at shift " + std::to_string(s), s);
    }
  }
  return SeedPair(std::move(x), std::move(y), ell0);
}

SeedPair rudin_shapiro_seed() {
  Sequence one = Sequence::from_sign_string("+");
  return validate_seed(one, one, 1);
}

std::int64_t level_length(std::int64_t ell0, int n) {
  if (n < 0) throw Error(ErrorCode::kInvalidArgument, "level must be nonnegative");
  if (n >= 62 || ell0 > (std::numeric_limits<std::int64_t>::max() >> (n + 1))) {
    throw Error(ErrorCode::kOverflow, "ell_n = 2^n ell0 leaves the 63-bit shift range");
  }
  return ell0 << n;
}

GolayPair seed_as_pair(const SeedPair& seed) {
  return GolayPair{seed.x0(), seed.y0(), 0, seed.ell0()};
}

namespace {

// dst[offset + j] = src[j] (optionally negated) for j < src_len; dst zeroed beyond.
void copy_bits(std::vector<std::uint64_t>& dst, std::int64_t offset,
               const std::vector<std::uint64_t>& src, std::int64_t src_len, bool invert) {
  if (offset % kWordBits == 0) {
    std::int64_t base = offset / kWordBits;
    std::int64_t nwords = words_for(src_len);
    for (std::int64_t w = 0; w < nwords; ++w) {
      std::uint64_t v = src[static_cast<std::size_t>(w)];
      if (invert) v = ~v;
      std::int64_t valid = std::min<std::int64_t>(kWordBits, src_len - w * kWordBits);
      if (valid < kWordBits) v &= (std::uint64_t{1} << valid) - 1;
      dst[static_cast<std::size_t>(base + w)] |= v;
    }
    return;
  }
  for (std::int64_t j = 0; j < src_len; ++j) {
    if (get_bit(src, j) != invert) set_bit(dst, offset + j);
  }
}

}  // namespace

GolayPair grs_step(const GolayPair& pair) {
  const std::int64_t ell = pair.ell();
  const std::int64_t next = level_length(pair.ell0, pair.level + 1);
  GolayPair out;
  out.level = pair.level + 1;
  out.ell0 = pair.ell0;
  if (pair.x.is_binary() && pair.y.is_binary() && pair.x.length() == ell &&
      pair.y.length() == ell) {
    std::vector<std::uint64_t> xb(static_cast<std::size_t>(words_for(next)), 0);
    std::vector<std::uint64_t> yb = xb;
    copy_bits(xb, 0, pair.x.packed_bits(), ell, false);
    copy_bits(xb, ell, pair.y.packed_bits(), ell, false);
    copy_bits(yb, 0, pair.x.packed_bits(), ell, false);
    copy_bits(yb, ell, pair.y.packed_bits(), ell, true);
    out.x = Sequence::from_packed(std::move(xb), next);
    out.y = Sequence::from_packed(std::move(yb), next);
    return out;
  }
  std::vector<ComplexRational> xs(static_cast<std::size_t>(next));
  std::vector<ComplexRational> ys(static_cast<std::size_t>(next));
  for (std::int64_t j = 0; j < ell; ++j) {
    ComplexRational a = pair.x.coeff(j);
    ComplexRational b = pair.y.coeff(j);
    xs[static_cast<std::size_t>(j)] = a;
    ys[static_cast<std::size_t>(j)] = a;
    xs[static_cast<std::size_t>(ell + j)] = b;
    ys[static_cast<std::size_t>(ell + j)] = -b;
  }
  out.x = Sequence::from_coefficients(std::move(xs));
  out.y = Sequence::from_coefficients(std::move(ys));
  return out;
}

GolayPair grs_pair(const SeedPair& seed, int n, const Budget& budget) {
  if (n < 0) throw Error(ErrorCode::kInvalidArgument, "level must be nonnegative");
  budget.require(2 * level_length(seed.ell0(), n), "materializing the level-" + std::to_string(n) + " pair");
  GolayPair p = seed_as_pair(seed);
  for (int k = 0; k < n; ++k) p = grs_step(p);
  return p;
}

GolayPair rudin_shapiro(int n, const Budget& budget) {
  return grs_pair(rudin_shapiro_seed(), n, budget);
}

}  // namespace grs
