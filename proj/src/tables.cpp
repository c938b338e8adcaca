#include "grs/tables.hpp"

#include <map>
#include <sstream>

#include "grs/errors.hpp"
#include "grs/spectrum_fast.hpp"

namespace grs {

const std::vector<std::int64_t>& table1_shifts(int n) {
  static const std::vector<std::vector<std::int64_t>> shifts = {
      {0},
      {-1, 1},
      {-3, -1, 1, 3},
      {-5, -3, -1, 1, 3, 5},
      {-11, -7, -5, -3, 3, 5, 7, 11},
      {-21, -13, -11, -9, -5, 5, 9, 11, 13, 21},
      {-43, -41, -27, -23, -21, -11, 11, 19, 21, 27, 41, 43},
      {-85, -53, -45, -43, -23, -21, 21, 23, 37, 43, 53, 85},
      {-107, -105, -91, -85, -43, 43, 75, 85, 105, 107, 171},
      {-181, -171, 85, 149, 151, 171, 213},
      {-363, -361, -341, 299},
  };
  if (n < 0 || n >= static_cast<int>(shifts.size())) {
    throw Error(ErrorCode::kInvalidArgument, "coefficient table covers n = 0..10");
  }
  return shifts[static_cast<std::size_t>(n)];
}

const std::vector<std::int64_t>& table2_indices(int t) {
  static const std::vector<std::vector<std::int64_t>> idx = {
      {-1, 0},
      {-1, 0},
      {-2, -1, 0, 1},
      {-4, -3, 1, 2},
      {-6, 2, 4, 5},
      {-12, -11, 5, 9, 10},
      {-23, -22, 10, 11, 18, 21},
      {-46, -43, 21, 37, 42},
      {-91, -86, 42, 74},
      {-182, -181, -171, 149},
  };
  if (t < 1 || t > static_cast<int>(idx.size())) {
    throw Error(ErrorCode::kInvalidArgument, "A/B/G/D table covers t = 1..10");
  }
  return idx[static_cast<std::size_t>(t - 1)];
}

std::vector<CoeffRow> table1_rows(int n_max) {
  RsGeoffTable rs;
  std::vector<CoeffRow> out;
  for (int n = 0; n <= n_max; ++n) {
    for (std::int64_t s : table1_shifts(n)) out.push_back({n, s, rs.value(n, s)});
  }
  return out;
}

std::vector<AbgdRow> table2_rows(int t_max) {
  std::vector<AbgdRow> out;
  for (int t = 1; t <= t_max; ++t) {
    const AbgdTable tab = abgd(t);
    for (std::int64_t j : table2_indices(t)) {
      const auto& e = tab.at(j);
      out.push_back({t, j, e.a, e.b, e.g, e.d});
    }
  }
  return out;
}

std::vector<PeakRow> peak_rows(const std::vector<PeakReport>& peaks) {
  std::vector<PeakRow> out;
  for (const auto& p : peaks) {
    if (p.witnesses.empty()) {
      out.push_back({p.level, std::nullopt, ComplexRational{}});
      continue;
    }
    for (const auto& w : p.witnesses) out.push_back({p.level, w.shift, w.value});
  }
  return out;
}

std::vector<PeakReport> table3_peaks(int n_max, const Budget& budget) {
  const SeedPair rs = rudin_shapiro_seed();
  std::vector<PeakReport> out;
  for (int n = 0; n <= n_max; ++n) out.push_back(streaming_peaks(rs, n, std::nullopt, budget).pcc);
  return out;
}

std::vector<PeakReport> table4_peaks(int n_max, const Budget& budget) {
  const SeedPair rs = rudin_shapiro_seed();
  std::vector<PeakReport> out;
  PeakReport p0 = psl(rs.x0());
  p0.level = 0;
  out.push_back(p0);
  for (int n = 1; n <= n_max; ++n) {
    out.push_back(*streaming_peaks(rs, n - 1, std::nullopt, budget).psl_next);
  }
  return out;
}

std::string table1_csv(const std::vector<CoeffRow>& rows) {
  std::ostringstream os;
  os << "n,shift,value\n";
  for (const auto& r : rows) os << r.n << ',' << r.shift << ',' << r.value << '\n';
  return os.str();
}

std::string table2_csv(const std::vector<AbgdRow>& rows) {
  std::ostringstream os;
  os << "t,j,A,B,G,D\n";
  for (const auto& r : rows) {
    os << r.t << ',' << r.j << ',' << r.a << ',' << r.b << ',' << r.g << ',' << r.d << '\n';
  }
  return os.str();
}

std::string peak_csv(const std::vector<PeakRow>& rows) {
  std::ostringstream os;
  os << "n,shift,value\n";
  for (const auto& r : rows) {
    os << r.n << ',';
    if (r.shift) os << *r.shift;
    os << ',' << to_display_string(r.value) << '\n';
  }
  return os.str();
}

}  // namespace grs
