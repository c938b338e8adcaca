#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "grs/correlation.hpp"
#include "grs/sequence.hpp"

namespace grs {

// Shifts listed for Rudin-Shapiro level n (n <= 10) in the coefficient table.
const std::vector<std::int64_t>& table1_shifts(int n);
// j values listed for t (1 <= t <= 10) in the A/B/Gamma/Delta table.
const std::vector<std::int64_t>& table2_indices(int t);

struct CoeffRow {
  int n;
  std::int64_t shift;
  std::int64_t value;
};
struct AbgdRow {
  int t;
  std::int64_t j, a, b, g, d;
};

std::vector<CoeffRow> table1_rows(int n_max = 10);
std::vector<AbgdRow> table2_rows(int t_max = 10);

// One row per witness; a zero peak becomes a single row with no shift.
struct PeakRow {
  int n;
  std::optional<std::int64_t> shift;
  ComplexRational value;
};
std::vector<PeakRow> peak_rows(const std::vector<PeakReport>& peaks);

// Streaming PCC peaks of the Rudin-Shapiro pair for n = 0..n_max.
std::vector<PeakReport> table3_peaks(int n_max, const Budget& budget = {});
// PSL peaks of Rudin-Shapiro x_n for n = 0..n_max.
std::vector<PeakReport> table4_peaks(int n_max, const Budget& budget = {});

std::string table1_csv(const std::vector<CoeffRow>& rows);  // n,shift,value
std::string table2_csv(const std::vector<AbgdRow>& rows);   // t,j,A,B,G,D
std::string peak_csv(const std::vector<PeakRow>& rows);     // n,shift,value

}  // namespace grs
