#pragma once

#include <string>
#include <vector>

#include "grs/correlation.hpp"
#include "grs/shift_bounds.hpp"

namespace grs {

// JSON array of {claim_id, relation, lhs, rhs, holds, witness}.
std::string verdicts_json(const std::vector<BoundVerdict>& v);
std::string verdicts_csv(const std::vector<BoundVerdict>& v);

// {"n", "pcc", "witnesses":[{"shift","value"}]} per report; integers as strings.
// The magnitude key is "pcc" or "psl".
std::string peaks_json(const std::vector<PeakReport>& peaks, const std::string& key);

// Rows shift,re_num,re_den,im_num,im_den over the nonzero entries.
std::string spectrum_csv(const Spectrum& sp);
std::string spectrum_json(const Spectrum& sp);

}  // namespace grs
