#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "grs/rational.hpp"

namespace grs {

// Cap on the number of coefficients (or correlation cells) any single
// operation may materialize.
struct Budget {
  std::int64_t max_coefficients = std::int64_t{1} << 31;

  // Reads GRS_BUDGET_BYTES (one 8-byte cell per coefficient); falls back to
  // the default cap when unset.
  static Budget from_environment();
  void require(std::int64_t cells, std::string_view what) const;
};

// A finitely supported sequence f_0..f_{len-1}, identified with the
// polynomial sum f_j z^j. Sequences whose coefficients are all +1/-1 are
// stored as packed sign bits (bit j set <=> f_j = -1).
class Sequence {
 public:
  Sequence() = default;

  static Sequence from_signs(std::span<const int> signs);
  static Sequence from_sign_string(std::string_view signs);  // "+-+-"
  // Packs automatically when every coefficient is +1 or -1.
  static Sequence from_coefficients(std::vector<ComplexRational> coeffs);
  static Sequence monomial(const ComplexRational& c, std::int64_t k);
  // bits[j/64] bit j%64 set <=> f_j = -1; bits past length must be clear.
  static Sequence from_packed(std::vector<std::uint64_t> bits, std::int64_t length);

  std::int64_t length() const { return length_; }
  bool is_binary() const { return binary_; }
  bool empty() const { return length_ == 0; }

  // Coefficient f_j; zero outside [0, length).
  ComplexRational coeff(std::int64_t j) const;
  int sign_at(std::int64_t j) const;  // binary sequences only
  std::vector<ComplexRational> coefficients() const;
  const std::vector<std::uint64_t>& packed_bits() const { return bits_; }

  bool is_zero() const;
  std::optional<std::int64_t> degree() const;
  bool has_integer_coefficients() const;
  bool has_rational_coefficients() const;
  std::string to_sign_string() const;

  // Same polynomial with a longer declared length.
  Sequence padded(std::int64_t length) const;

  // Polynomial equality: declared lengths are ignored.
  friend bool operator==(const Sequence& a, const Sequence& b);

 private:
  std::int64_t length_ = 0;
  bool binary_ = false;
  std::vector<std::uint64_t> bits_;
  std::vector<ComplexRational> coeffs_;
};

class SeedPair;
SeedPair validate_seed(const Sequence& x0, const Sequence& y0, std::int64_t ell0);

// A Golay complementary seed (x0, y0) with C_{x0,x0}(0) = C_{y0,y0}(0) and
// both degrees below ell0. Only validate_seed() constructs one.
class SeedPair {
 public:
  const Sequence& x0() const { return x0_; }
  const Sequence& y0() const { return y0_; }
  std::int64_t ell0() const { return ell0_; }

  bool is_binary() const { return x0_.is_binary() && y0_.is_binary(); }
  bool has_integer_coefficients() const {
    return x0_.has_integer_coefficients() && y0_.has_integer_coefficients();
  }
  bool has_rational_coefficients() const {
    return x0_.has_rational_coefficients() && y0_.has_rational_coefficients();
  }
  bool is_rudin_shapiro() const;

 private:
  friend SeedPair validate_seed(const Sequence&, const Sequence&, std::int64_t);
  SeedPair(Sequence x0, Sequence y0, std::int64_t ell0)
      : x0_(std::move(x0)), y0_(std::move(y0)), ell0_(ell0) {}

  Sequence x0_;
  Sequence y0_;
  std::int64_t ell0_;
};

SeedPair rudin_shapiro_seed();

// The level-n pair; both sequences carry declared length ell_n = 2^n ell0.
struct GolayPair {
  Sequence x;
  Sequence y;
  int level = 0;
  std::int64_t ell0 = 1;

  std::int64_t ell() const { return ell0 << level; }
};

// ell_n = 2^n ell0, throwing kOverflow when it leaves int64.
std::int64_t level_length(std::int64_t ell0, int n);

GolayPair seed_as_pair(const SeedPair& seed);
// x_n = x_{n-1} + z^{ell_{n-1}} y_{n-1}, y_n = x_{n-1} - z^{ell_{n-1}} y_{n-1}.
GolayPair grs_step(const GolayPair& pair);
GolayPair grs_pair(const SeedPair& seed, int n, const Budget& budget = {});
GolayPair rudin_shapiro(int n, const Budget& budget = {});

}  // namespace grs
