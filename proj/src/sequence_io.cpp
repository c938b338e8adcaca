#include "grs/sequence_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "grs/errors.hpp"

namespace grs {

namespace {

bool next_line(std::istream& is, std::string& line) {
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) return true;
  }
  return false;
}

std::int64_t parse_len(const std::string& tok) {
  if (tok.rfind("len=", 0) != 0) throw Error(ErrorCode::kParse, "expected len=<n>, got " + tok);
  const std::string digits = tok.substr(4);
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
    throw Error(ErrorCode::kParse, "bad length " + digits);
  }
  try {
    return std::stoll(digits);
  } catch (const std::out_of_range&) {
    throw Error(ErrorCode::kParse, "length too large");
  }
}

}  // namespace

void write_sequence(std::ostream& os, const Sequence& s) {
  if (s.is_binary()) {
    os << "len=" << s.length() << " kind=binary\n" << s.to_sign_string() << "\n";
    return;
  }
  os << "len=" << s.length() << " kind=rational\n";
  for (std::int64_t j = 0; j < s.length(); ++j) {
    const ComplexRational c = s.coeff(j);
    os << to_fraction_string(c.re) << ' ' << to_fraction_string(c.im) << '\n';
  }
}

Sequence read_sequence(std::istream& is) {
  std::string line;
  if (!next_line(is, line)) throw Error(ErrorCode::kParse, "missing sequence header");
  std::istringstream hs(line);
  std::string len_tok, kind_tok, extra;
  hs >> len_tok >> kind_tok;
  if (hs >> extra) throw Error(ErrorCode::kParse, "trailing header text: " + extra);
  const std::int64_t len = parse_len(len_tok);
  if (kind_tok == "kind=binary") {
    std::string signs;
    if (len > 0 && !next_line(is, signs)) throw Error(ErrorCode::kParse, "missing sign line");
    if (static_cast<std::int64_t>(signs.size()) != len) {
      throw Error(ErrorCode::kParse, "sign line length does not match len");
    }
    return Sequence::from_sign_string(signs);
  }
  if (kind_tok != "kind=rational") throw Error(ErrorCode::kParse, "unknown kind " + kind_tok);
  std::vector<ComplexRational> coeffs;
  coeffs.reserve(static_cast<std::size_t>(len));
  for (std::int64_t j = 0; j < len; ++j) {
    if (!next_line(is, line)) throw Error(ErrorCode::kParse, "missing coefficient line");
    std::istringstream ls(line);
    std::string re, im;
    if (!(ls >> re >> im) || (ls >> extra)) {
      throw Error(ErrorCode::kParse, "coefficient line needs two fields: " + line);
    }
    coeffs.emplace_back(parse_rational(re), parse_rational(im));
  }
  return Sequence::from_coefficients(std::move(coeffs));
}

std::string sequence_to_string(const Sequence& s) {
  std::ostringstream os;
  write_sequence(os, s);
  return os.str();
}

Sequence sequence_from_string(const std::string& text) {
  std::istringstream is(text);
  return read_sequence(is);
}

SeedPair read_seed_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParse, "cannot open " + path.string());
  Sequence x = read_sequence(in);
  Sequence y = read_sequence(in);
  if (x.length() != y.length()) {
    throw Error(ErrorCode::kParse, "seed records must share one declared length");
  }
  return validate_seed(x, y, x.length());
}

void write_pair(std::ostream& os, const Sequence& x, const Sequence& y) {
  write_sequence(os, x);
  write_sequence(os, y);
}

}  // namespace grs
