#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "grs/correlation.hpp"
#include "grs/errors.hpp"
#include "grs/exactnum.hpp"
#include "grs/report.hpp"
#include "grs/sequence.hpp"
#include "grs/sequence_io.hpp"
#include "grs/shift_bounds.hpp"
#include "grs/spectrum_fast.hpp"
#include "grs/tables.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct Common {
  std::string format = "json";
  std::string output;
};

struct SeedOpts {
  bool rs = false;
  std::string seed_path;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  cmd->add_option("--output,-o", c.output, "Write to this file instead of stdout");
}

void add_seed(CLI::App* cmd, SeedOpts& s) {
  auto* rs = cmd->add_flag("--rs", s.rs, "Rudin-Shapiro seed (the default)");
  cmd->add_option("--seed", s.seed_path, "Seed file with two sequence records")
      ->check(CLI::ExistingFile)
      ->excludes(rs);
}

grs::SeedPair load_seed(const SeedOpts& s) {
  if (!s.seed_path.empty()) return grs::read_seed_file(s.seed_path);
  return grs::rudin_shapiro_seed();
}

void emit(const Common& c, const std::string& text) {
  if (c.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(c.output, std::ios::binary);
  if (!out) throw grs::Error(grs::ErrorCode::kInvalidArgument, "cannot write " + c.output);
  out << text;
}

std::string one_peak_csv(const grs::PeakReport& p, const std::string& label) {
  std::ostringstream os;
  for (const auto& r : grs::peak_rows({p})) {
    os << label << ',' << r.n << ',';
    if (r.shift) os << *r.shift;
    os << ',' << grs::to_display_string(r.value) << '\n';
  }
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Golay-Rudin-Shapiro correlation tools"};
  app.require_subcommand(1);

  Common common;
  SeedOpts seed_opts;
  int n = 0;
  int n_max = -1;
  std::int64_t shift = 0;
  std::optional<int> t_split;
  int which = 3;
  int digits = 12;
  std::string suite = "rs";
  std::string expr;

  auto* gen = app.add_subcommand("gen", "Write the level-n pair (x_n, y_n)");
  add_seed(gen, seed_opts);
  gen->add_option("--n", n, "Level")->required()->check(CLI::NonNegativeNumber);
  gen->add_option("--output,-o", common.output, "Write to this file instead of stdout");

  auto* corr = app.add_subcommand("corr", "One crosscorrelation value C_{x_n,y_n}(s)");
  add_seed(corr, seed_opts);
  corr->add_option("--n", n, "Level")->required()->check(CLI::NonNegativeNumber);
  corr->add_option("--shift", shift, "Shift s")->required();
  add_common(corr, common);

  auto* spec = app.add_subcommand("spectrum", "Full crosscorrelation spectrum of (x_n, y_n)");
  add_seed(spec, seed_opts);
  spec->add_option("--n", n, "Level")->required()->check(CLI::NonNegativeNumber);
  add_common(spec, common);

  auto* peaks = app.add_subcommand("peaks", "PCC of (x_n, y_n) and PSL of x_{n+1} by streaming");
  add_seed(peaks, seed_opts);
  peaks->add_option("--n", n, "Level")->required()->check(CLI::NonNegativeNumber);
  peaks->add_option("--t-split", t_split, "Split depth t, 0 < t < n");
  add_common(peaks, common);

  auto* tables = app.add_subcommand("tables", "Regenerate the coefficient and peak tables");
  tables->add_option("--which", which, "Table number")->required()->check(CLI::Range(1, 4));
  tables->add_option("--max", n_max, "Largest n (or t); defaults 10, 10, 26, 27");
  add_common(tables, common);

  auto* verify = app.add_subcommand("verify", "Exact bound and identity verdicts");
  verify->add_option("--suite", suite, "Claim family")
      ->check(CLI::IsMember({"rs", "generic", "inequalities", "identities"}))
      ->capture_default_str();
  verify->add_option("--n-max", n_max, "Largest level for rs (default 20) and generic (12)");
  add_seed(verify, seed_opts);
  add_common(verify, common);

  auto* approx = app.add_subcommand("approx", "Decimal interval for p + q*a + r*a^2");
  approx->add_option("--expr", expr, "\"p q r\" as fractions")->required();
  approx->add_option("--digits", digits, "Decimal places")
      ->check(CLI::Range(0, 1000))
      ->capture_default_str();
  add_common(approx, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  const grs::Budget budget = grs::Budget::from_environment();
  try {
    if (gen->parsed()) {
      const grs::GolayPair p = grs::grs_pair(load_seed(seed_opts), n, budget);
      std::ostringstream os;
      grs::write_pair(os, p.x, p.y);
      emit(common, os.str());
    } else if (corr->parsed()) {
      const grs::GolayPair p = grs::grs_pair(load_seed(seed_opts), n, budget);
      const grs::ComplexRational v = grs::crosscorr(p.x, p.y, shift);
      if (common.format == "csv") {
        emit(common, "n,shift,value\n" + std::to_string(n) + "," + std::to_string(shift) + "," +
                         grs::to_display_string(v) + "\n");
      } else {
        ordered_json o{{"n", std::to_string(n)},
                       {"shift", std::to_string(shift)},
                       {"value", grs::to_display_string(v)}};
        emit(common, o.dump(2) + "\n");
      }
    } else if (spec->parsed()) {
      const grs::GolayPair p = grs::grs_pair(load_seed(seed_opts), n, budget);
      const grs::Spectrum sp = grs::spectrum(p.x, p.y, budget);
      emit(common, common.format == "csv" ? grs::spectrum_csv(sp) : grs::spectrum_json(sp));
    } else if (peaks->parsed()) {
      const grs::StreamResult r = grs::streaming_peaks(load_seed(seed_opts), n, t_split, budget);
      if (common.format == "csv") {
        emit(common, "kind,n,shift,value\n" + one_peak_csv(r.pcc, "pcc") +
                         one_peak_csv(*r.psl_next, "psl"));
      } else {
        ordered_json o;
        o["pcc"] = ordered_json::parse(grs::peaks_json({r.pcc}, "pcc"))[0];
        o["psl_next"] = ordered_json::parse(grs::peaks_json({*r.psl_next}, "psl"))[0];
        emit(common, o.dump(2) + "\n");
      }
    } else if (tables->parsed()) {
      const bool csv = common.format == "csv";
      if (which == 1 || which == 2) {
        const int m = n_max < 0 ? 10 : n_max;
        if (which == 1) {
          auto rows = grs::table1_rows(m);
          if (csv) {
            emit(common, grs::table1_csv(rows));
          } else {
            ordered_json arr = ordered_json::array();
            for (const auto& r : rows) {
              arr.push_back({{"n", std::to_string(r.n)},
                             {"shift", std::to_string(r.shift)},
                             {"value", std::to_string(r.value)}});
            }
            emit(common, arr.dump(2) + "\n");
          }
        } else {
          auto rows = grs::table2_rows(m);
          if (csv) {
            emit(common, grs::table2_csv(rows));
          } else {
            ordered_json arr = ordered_json::array();
            for (const auto& r : rows) {
              arr.push_back({{"t", std::to_string(r.t)},
                             {"j", std::to_string(r.j)},
                             {"A", std::to_string(r.a)},
                             {"B", std::to_string(r.b)},
                             {"G", std::to_string(r.g)},
                             {"D", std::to_string(r.d)}});
            }
            emit(common, arr.dump(2) + "\n");
          }
        }
      } else {
        const int m = n_max < 0 ? (which == 3 ? 26 : 27) : n_max;
        auto pk = which == 3 ? grs::table3_peaks(m, budget) : grs::table4_peaks(m, budget);
        emit(common, csv ? grs::peak_csv(grs::peak_rows(pk))
                         : grs::peaks_json(pk, which == 3 ? "pcc" : "psl"));
      }
    } else if (verify->parsed()) {
      std::vector<grs::BoundVerdict> v;
      if (suite == "rs") {
        const grs::PeakSeries series =
            grs::compute_peak_series(grs::rudin_shapiro_seed(), n_max < 0 ? 20 : n_max, budget);
        v = grs::verify_rs_bounds(series);
        auto lower = grs::verify_rs_lower_bounds(series);
        v.insert(v.end(), lower.begin(), lower.end());
      } else if (suite == "generic") {
        const grs::SeedPair seed = load_seed(seed_opts);
        v = grs::verify_generic_bound(
            seed, grs::compute_peak_series(seed, n_max < 0 ? 12 : n_max, budget));
      } else if (suite == "inequalities") {
        v = grs::inequality_suite();
      } else {
        v = grs::identity_suite();
      }
      emit(common, common.format == "csv" ? grs::verdicts_csv(v) : grs::verdicts_json(v));
      return grs::all_hold(v) ? kExitOk : kExitVerifyFailed;
    } else if (approx->parsed()) {
      const grs::QAlpha q = grs::parse_qalpha(expr);
      const std::string interval = grs::decimal_approx(q, digits);
      if (common.format == "csv") {
        // "[lo, hi]" -> lo,hi
        const auto comma = interval.find(',');
        const std::string lo = interval.substr(1, comma - 1);
        const std::string hi = interval.substr(comma + 2, interval.size() - comma - 3);
        emit(common, "expr,digits,lo,hi\n" + grs::to_string(q) + "," + std::to_string(digits) +
                         "," + lo + "," + hi + "\n");
      } else {
        ordered_json o{{"expr", grs::to_string(q)},
                       {"digits", std::to_string(digits)},
                       {"interval", interval}};
        emit(common, o.dump(2) + "\n");
      }
    }
  } catch (const grs::Error& e) {
    std::cerr << "error [" << grs::to_string(e.code()) << "]: " << e.what();
    if (e.shift()) std::cerr << " (shift " << *e.shift() << ")";
    std::cerr << "\n";
    return kExitUsage;
  }
  return kExitOk;
}
