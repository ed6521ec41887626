#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "tourn/tournament.hpp"

namespace tourn {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// tourn-v1:
//   tourn-v1
//   n=<N>
//   bits=<N(N-1)/2 characters of '0'/'1' in pair-index order>
// with an optional trailing newline.

std::string to_text(const Tournament& t);
Tournament parse_text(std::string_view text);

Tournament read_tournament_file(const std::string& path);
void write_tournament_file(const std::string& path, const Tournament& t);

}  // namespace tourn
