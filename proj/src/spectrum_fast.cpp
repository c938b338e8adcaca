#include "grs/spectrum_fast.hpp"

#include <algorithm>
#include <cstdlib>

#include "parallel.hpp"

namespace grs {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw Error(ErrorCode::kOverflow, "int64 overflow");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw Error(ErrorCode::kOverflow, "int64 overflow");
  return out;
}

}  // namespace

AbgdTable abgd(int t, const Budget& budget) {
  if (t < 1) throw Error(ErrorCode::kInvalidArgument, "abgd needs t >= 1");
  if (t > 40) throw Error(ErrorCode::kOverflow, "abgd table too large");
  budget.require(std::int64_t{4} << t, "coefficient table A,B,G,D");

  AbgdTable cur;
  cur.t_ = 1;
  cur.half_ = 1;
  cur.entries_.resize(2);
  cur.entries_[0] = {-1, 0, 2, 0};  // j = -1
  cur.entries_[1] = {0, 1, 0, 2};   // j = 0

  while (cur.t_ < t) {
    AbgdTable next;
    next.t_ = cur.t_ + 1;
    next.half_ = cur.half_ * 2;
    next.entries_.resize(static_cast<std::size_t>(2 * next.half_));
    for (std::int64_t j = -next.half_; j < next.half_; ++j) {
      auto& e = next.entries_[static_cast<std::size_t>(j + next.half_)];
      if (j % 2 == 0) {
        const auto& p = cur.at(j / 2);
        e.a = checked_add(-p.a, p.b);
        e.b = p.d;
        e.g = checked_mul(2, checked_add(p.a, p.b));
        e.d = 0;
      } else {
        const auto& p = cur.at(floor_div(j - 1, 2));
        e.a = p.g;
        e.b = checked_add(p.a, -p.b);
        e.g = 0;
        e.d = checked_mul(2, checked_add(p.a, p.b));
      }
    }
    cur = std::move(next);
  }
  return cur;
}

template <class T>
void LevelSpectrum<T>::set(std::int64_t u, T v) {
  if (u <= -ell_ || u >= ell_) throw Error(ErrorCode::kShiftOutOfRange, "level shift", u);
  if (odd_only_) {
    if ((u & 1) == 0) {
      if (!(v == T{})) {
        throw Error(ErrorCode::kInvalidArgument, "nonzero value at an even shift", u);
      }
      return;
    }
    values_[static_cast<std::size_t>((u + ell_ - 1) / 2)] = std::move(v);
  } else {
    values_[static_cast<std::size_t>(u + ell_ - 1)] = std::move(v);
  }
}

template class LevelSpectrum<std::int64_t>;
template class LevelSpectrum<ComplexRational>;

namespace {

bool odd_only_level(const SeedPair& seed, int k) { return seed.is_rudin_shapiro() && k >= 1; }

}  // namespace

IntLevel oracle_int_level(const SeedPair& seed, int k, const Budget& budget) {
  GolayPair p = grs_pair(seed, k, budget);
  IntSpectrum sp = int_spectrum(p.x, p.y, budget);
  IntLevel lv(k, p.ell(), odd_only_level(seed, k));
  for (std::int64_t u = -p.ell() + 1; u < p.ell(); ++u) lv.set(u, sp.at(u));
  return lv;
}

ExactLevel oracle_exact_level(const SeedPair& seed, int k, const Budget& budget) {
  GolayPair p = grs_pair(seed, k, budget);
  Spectrum sp = spectrum(p.x, p.y, budget);
  ExactLevel lv(k, p.ell(), odd_only_level(seed, k));
  for (std::int64_t u = -p.ell() + 1; u < p.ell(); ++u) lv.set(u, sp.at(u));
  return lv;
}

template <class T>
IterationEvaluator<T>::IterationEvaluator(AbgdTable table, LevelSpectrum<T> upper,
                                          LevelSpectrum<T> lower, int n)
    : table_(std::move(table)), upper_(std::move(upper)), lower_(std::move(lower)), n_(n) {
  if (upper_.level() != n - table_.t() || lower_.level() != n - table_.t() - 1 ||
      upper_.ell() != 2 * lower_.ell()) {
    throw Error(ErrorCode::kInvalidArgument, "level spectra do not match n - t and n - t - 1");
  }
  block_ = 2 * upper_.ell();
}

namespace {

inline void add_term(std::int64_t& acc, std::int64_t c, std::int64_t v) {
  if (c != 0 && v != 0) acc = checked_add(acc, checked_mul(c, v));
}

inline void add_term(ComplexRational& acc, std::int64_t c, const ComplexRational& v) {
  if (c != 0 && !v.is_zero()) acc += ComplexRational(c) * v;
}

}  // namespace

template <class T>
T IterationEvaluator<T>::operator()(std::int64_t s) const {
  const std::int64_t q = floor_div(s, block_);
  const std::int64_t r = s - q * block_;
  T acc{};
  if (r == 0) return acc;
  const auto& e = table_.at(q);
  const std::int64_t lh = upper_.ell();
  const std::int64_t ll = lower_.ell();
  add_term(acc, e.a, upper_.at(r - lh));
  add_term(acc, e.b, conj(upper_.at(lh - r)));
  add_term(acc, e.g, lower_.at(r - 3 * ll));
  add_term(acc, e.d, conj(lower_.at(ll - r)));
  return acc;
}

template class IterationEvaluator<std::int64_t>;
template class IterationEvaluator<ComplexRational>;

namespace {

void check_split(int n, int t) {
  if (t < 1 || t >= n) {
    throw Error(ErrorCode::kLevelTooSmall,
                "need 0 < t < n, got n=" + std::to_string(n) + " t=" + std::to_string(t));
  }
}

template <class T, class Oracle>
LevelSpectrum<T> descend(const SeedPair& seed, int k, const Budget& budget, Oracle oracle) {
  if (k <= 2) return oracle(seed, k, budget);
  const int t = k / 2;
  IterationEvaluator<T> ev(abgd(t, budget), descend<T>(seed, k - t, budget, oracle),
                           descend<T>(seed, k - t - 1, budget, oracle), k);
  const std::int64_t ell = level_length(seed.ell0(), k);
  budget.require(2 * ell, "level spectrum");
  LevelSpectrum<T> out(k, ell, odd_only_level(seed, k));
  const std::int64_t step = out.odd_only() ? 2 : 1;
  for (std::int64_t u = out.odd_only() ? -ell + 1 : -ell + 1; u < ell; u += step) {
    out.set(u, ev(u));
  }
  return out;
}

}  // namespace

IntLevel descend_int_level(const SeedPair& seed, int k, const Budget& budget) {
  if (!seed.is_binary()) throw Error(ErrorCode::kInvalidArgument, "integer path needs a binary seed");
  return descend<std::int64_t>(seed, k, budget, &oracle_int_level);
}

ExactLevel descend_exact_level(const SeedPair& seed, int k, const Budget& budget) {
  return descend<ComplexRational>(seed, k, budget, &oracle_exact_level);
}

IterationEvaluator<std::int64_t> make_int_evaluator(const SeedPair& seed, int n, int t,
                                                    const Budget& budget) {
  check_split(n, t);
  if (!seed.is_binary()) throw Error(ErrorCode::kInvalidArgument, "integer path needs a binary seed");
  // |C_n(s)| <= ell_n; headroom for the A..D multiples of level values.
  level_length(seed.ell0(), n + 4);
  return {abgd(t, budget), descend_int_level(seed, n - t, budget),
          descend_int_level(seed, n - t - 1, budget), n};
}

IterationEvaluator<ComplexRational> make_exact_evaluator(const SeedPair& seed, int n, int t,
                                                         const Budget& budget) {
  check_split(n, t);
  return {abgd(t, budget), descend_exact_level(seed, n - t, budget),
          descend_exact_level(seed, n - t - 1, budget), n};
}

ComplexRational coeff_by_iteration(const SeedPair& seed, int n, int t, std::int64_t s,
                                   const Budget& budget) {
  check_split(n, t);
  if (seed.is_binary()) return ComplexRational(make_int_evaluator(seed, n, t, budget)(s));
  return make_exact_evaluator(seed, n, t, budget)(s);
}

ComplexRational coeff_by_geoff(int n, std::int64_t s, std::int64_t ell0, const LevelLookup& lower) {
  if (n < 2) throw Error(ErrorCode::kLevelTooSmall, "two-level recursion needs n >= 2");
  if (s == 0) throw Error(ErrorCode::kShiftZero, "two-level recursion does not cover s = 0", s);
  const std::int64_t l1 = level_length(ell0, n - 1);
  const std::int64_t l2 = level_length(ell0, n - 2);
  if (s > 0) return conj(lower(n - 1, l1 - s)) + ComplexRational(2) * conj(lower(n - 2, l2 - s));
  return -lower(n - 1, l1 + s) + ComplexRational(2) * lower(n - 2, l2 + s);
}

std::int64_t RsGeoffTable::value(int n, std::int64_t s) {
  if (n < 0) throw Error(ErrorCode::kInvalidArgument, "negative level");
  const std::int64_t ell = level_length(1, n);
  if (s <= -ell || s >= ell) return 0;
  if (n == 0) return s == 0 ? 1 : 0;
  if (s % 2 == 0) return 0;
  if (n == 1) return s;  // C_1(-1) = -1, C_1(1) = 1
  auto key = std::make_pair(n, s);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  const std::int64_t l1 = ell / 2;
  const std::int64_t l2 = ell / 4;
  std::int64_t v = s > 0 ? value(n - 1, l1 - s) + 2 * value(n - 2, l2 - s)
                         : -value(n - 1, l1 + s) + 2 * value(n - 2, l2 + s);
  memo_.emplace(key, v);
  return v;
}

PeakReport psl_from_pcc(const PeakReport& pcc_n, std::int64_t ell_n) {
  PeakReport out;
  out.level = pcc_n.level + 1;
  out.norm_sq = pcc_n.norm_sq;
  for (auto it = pcc_n.witnesses.rbegin(); it != pcc_n.witnesses.rend(); ++it) {
    out.witnesses.push_back({ell_n - it->shift, conj(it->value)});
  }
  return out;
}

namespace {

struct IntChunk {
  std::int64_t best = 0;
  std::vector<std::pair<std::int64_t, std::int64_t>> wit;
};

struct ExactChunk {
  Rational best = 0;
  std::vector<Witness> wit;
};

PeakReport scan_int(const IterationEvaluator<std::int64_t>& ev, std::int64_t ell, std::int64_t step) {
  const std::int64_t first = -ell + 1;
  // Index space covers the shifts first, first+step, ... < ell.
  const std::int64_t count = (ell - 1 - first) / step + 1;
  const std::int64_t chunks = count < 4096 ? 1 : 16 * static_cast<std::int64_t>(detail::worker_count());
  std::vector<IntChunk> parts(static_cast<std::size_t>(std::max<std::int64_t>(chunks, 1)));
  detail::parallel_chunks(0, count, chunks, [&](std::int64_t c, std::int64_t lo, std::int64_t hi) {
    IntChunk& part = parts[static_cast<std::size_t>(c)];
    for (std::int64_t i = lo; i < hi; ++i) {
      const std::int64_t s = first + i * step;
      const std::int64_t v = ev(s);
      const std::int64_t a = v < 0 ? -v : v;
      if (a == 0 || a < part.best) continue;
      if (a > part.best) {
        part.best = a;
        part.wit.clear();
      }
      part.wit.emplace_back(s, v);
    }
  });
  std::int64_t best = 0;
  for (const auto& p : parts) best = std::max(best, p.best);
  PeakReport rep;
  rep.level = ev.n();
  Integer b = to_integer(best);
  rep.norm_sq = Rational(b * b);
  if (best == 0) return rep;
  for (const auto& p : parts) {
    if (p.best != best) continue;
    for (const auto& [s, v] : p.wit) rep.witnesses.push_back({s, ComplexRational(v)});
  }
  return rep;
}

PeakReport scan_exact(const IterationEvaluator<ComplexRational>& ev, std::int64_t ell,
                      std::int64_t step) {
  const std::int64_t first = -ell + 1;
  const std::int64_t count = (ell - 1 - first) / step + 1;
  const std::int64_t chunks = count < 1024 ? 1 : 16 * static_cast<std::int64_t>(detail::worker_count());
  std::vector<ExactChunk> parts(static_cast<std::size_t>(std::max<std::int64_t>(chunks, 1)));
  detail::parallel_chunks(0, count, chunks, [&](std::int64_t c, std::int64_t lo, std::int64_t hi) {
    ExactChunk& part = parts[static_cast<std::size_t>(c)];
    for (std::int64_t i = lo; i < hi; ++i) {
      const std::int64_t s = first + i * step;
      ComplexRational v = ev(s);
      if (v.is_zero()) continue;
      Rational nsq = v.norm();
      int cmpv = cmp(nsq, part.best);
      if (cmpv < 0) continue;
      if (cmpv > 0) {
        part.best = nsq;
        part.wit.clear();
      }
      part.wit.push_back({s, std::move(v)});
    }
  });
  PeakReport rep;
  rep.level = ev.n();
  rep.norm_sq = 0;
  for (const auto& p : parts) {
    if (p.best > rep.norm_sq) rep.norm_sq = p.best;
  }
  if (sgn(rep.norm_sq) == 0) return rep;
  for (const auto& p : parts) {
    if (p.best != rep.norm_sq) continue;
    rep.witnesses.insert(rep.witnesses.end(), p.wit.begin(), p.wit.end());
  }
  return rep;
}

}  // namespace

StreamResult streaming_peaks(const SeedPair& seed, int n, std::optional<int> t_split,
                             const Budget& budget) {
  if (n < 0) throw Error(ErrorCode::kInvalidArgument, "negative level");
  const std::int64_t ell = level_length(seed.ell0(), n);
  StreamResult out;
  if (n <= 2 && !t_split) {
    GolayPair p = grs_pair(seed, n, budget);
    out.pcc = pcc(p.x, p.y);
    out.pcc.level = n;
  } else {
    const int t = t_split.value_or(n / 2);
    check_split(n, t);
    budget.require(2 * level_length(seed.ell0(), n - t) + (std::int64_t{4} << t),
                   "streaming scan caches");
    const std::int64_t step = (seed.is_rudin_shapiro() && n >= 1) ? 2 : 1;
    if (seed.is_binary()) {
      out.pcc = scan_int(make_int_evaluator(seed, n, t, budget), ell, step);
    } else {
      out.pcc = scan_exact(make_exact_evaluator(seed, n, t, budget), ell, step);
    }
  }
  out.psl_next = psl_from_pcc(out.pcc, ell);
  return out;
}

Rational nellie_bound(const AbgdTable& table, std::int64_t q, std::int64_t r, std::int64_t ell_nt,
                      const Rational& m_nt, const Rational& m_nt1) {
  if (r < 0 || r >= 2 * ell_nt) throw Error(ErrorCode::kShiftOutOfRange, "need 0 <= r < ell_{n-t+1}", r);
  if (r == 0) return 0;
  const auto& e = table.at(q);
  Rational ab(std::abs(e.a) + std::abs(e.b));
  Rational bound = ab * m_nt;
  if (r < ell_nt) bound += Rational(std::abs(e.d)) * m_nt1;
  if (r > ell_nt) bound += Rational(std::abs(e.g)) * m_nt1;
  return bound;
}

Rational derrel_bound(const AbgdTable* table, int n, std::int64_t q, const Rational& pcc0,
                      const Rational& psl0) {
  if (n < 1) throw Error(ErrorCode::kLevelTooSmall, "seed bound needs n >= 1");
  if (n == 1) return pcc0 + 2 * psl0;
  if (table == nullptr || table->t() != n - 1) {
    throw Error(ErrorCode::kInvalidArgument, "derrel_bound needs abgd(n-1)");
  }
  const auto& e = table->at(q);
  Rational ab(std::abs(e.a) + std::abs(e.b));
  Rational all = ab + Rational(std::abs(e.g) + std::abs(e.d));
  return all * pcc0 + ab * 2 * psl0;
}

}  // namespace grs
