#include "grs/report.hpp"

#include <sstream>

#include "json.hpp"

namespace grs {

using nlohmann::ordered_json;

namespace {

std::string magnitude_string(const PeakReport& p) {
  if (auto m = p.magnitude()) return to_display_string(ComplexRational(*m));
  return "sqrt(" + to_display_string(ComplexRational(p.norm_sq)) + ")";
}

std::string csv_field(std::string s) {
  for (char& c : s) {
    if (c == ',') c = ';';
  }
  return s;
}

}  // namespace

std::string verdicts_json(const std::vector<BoundVerdict>& v) {
  ordered_json arr = ordered_json::array();
  for (const auto& x : v) {
    ordered_json o;
    o["claim_id"] = x.claim_id;
    o["relation"] = x.relation;
    o["lhs"] = x.lhs;
    o["rhs"] = x.rhs;
    o["holds"] = x.holds;
    o["witness"] = x.witness ? ordered_json(*x.witness) : ordered_json(nullptr);
    arr.push_back(std::move(o));
  }
  return arr.dump(2) + "\n";
}

std::string verdicts_csv(const std::vector<BoundVerdict>& v) {
  std::ostringstream os;
  os << "claim_id,relation,lhs,rhs,holds,witness\n";
  for (const auto& x : v) {
    os << x.claim_id << ',' << x.relation << ',' << csv_field(x.lhs) << ',' << csv_field(x.rhs)
       << ',' << (x.holds ? "true" : "false") << ',' << csv_field(x.witness.value_or(""))
       << '\n';
  }
  return os.str();
}

std::string peaks_json(const std::vector<PeakReport>& peaks, const std::string& key) {
  ordered_json arr = ordered_json::array();
  for (const auto& p : peaks) {
    ordered_json o;
    o["n"] = std::to_string(p.level);
    o[key] = magnitude_string(p);
    ordered_json ws = ordered_json::array();
    for (const auto& w : p.witnesses) {
      ws.push_back({{"shift", std::to_string(w.shift)}, {"value", to_display_string(w.value)}});
    }
    o["witnesses"] = std::move(ws);
    arr.push_back(std::move(o));
  }
  return arr.dump(2) + "\n";
}

std::string spectrum_csv(const Spectrum& sp) {
  std::ostringstream os;
  os << "shift,re_num,re_den,im_num,im_den\n";
  for (const auto& [s, v] : sp.entries()) {
    os << s << ',' << v.re.get_num().get_str() << ',' << v.re.get_den().get_str() << ','
       << v.im.get_num().get_str() << ',' << v.im.get_den().get_str() << '\n';
  }
  return os.str();
}

std::string spectrum_json(const Spectrum& sp) {
  ordered_json arr = ordered_json::array();
  for (const auto& [s, v] : sp.entries()) {
    arr.push_back({{"shift", std::to_string(s)},
                   {"re_num", v.re.get_num().get_str()},
                   {"re_den", v.re.get_den().get_str()},
                   {"im_num", v.im.get_num().get_str()},
                   {"im_den", v.im.get_den().get_str()}});
  }
  return arr.dump(2) + "\n";
}

}  // namespace grs
