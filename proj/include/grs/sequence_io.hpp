#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "grs/sequence.hpp"

namespace grs {

// Record layout:
//   len=<n> kind=binary      followed by one line of n '+'/'-' characters
//   len=<n> kind=rational    followed by n lines "re_num/re_den im_num/im_den"
void write_sequence(std::ostream& os, const Sequence& s);
Sequence read_sequence(std::istream& is);  // kParse on malformed input

std::string sequence_to_string(const Sequence& s);
Sequence sequence_from_string(const std::string& text);

// A seed file is two records, x0 then y0; ell0 is their common declared length.
SeedPair read_seed_file(const std::filesystem::path& path);
void write_pair(std::ostream& os, const Sequence& x, const Sequence& y);

}  // namespace grs
