#include "tourn/text_format.hpp"

#include <fstream>
#include <sstream>

namespace tourn {
namespace {

constexpr std::string_view kMagic = "tourn-v1";

int parse_count(std::string_view digits) {
  if (digits.empty() || digits.size() > 6) throw ParseError("malformed vertex count");
  if (digits.size() > 1 && digits.front() == '0') throw ParseError("vertex count has a leading zero");
  int value = 0;
  for (char c : digits) {
    if (c < '0' || c > '9') throw ParseError("malformed vertex count");
    value = value * 10 + (c - '0');
  }
  return value;
}

}  // namespace

std::string to_text(const Tournament& t) {
  return std::string(kMagic) + "\nn=" + std::to_string(t.size()) + "\nbits=" + t.bit_string() + "\n";
}

Tournament parse_text(std::string_view text) {
  if (!text.empty() && text.back() == '\n') text.remove_suffix(1);
  std::vector<std::string_view> lines;
  for (std::size_t start = 0;;) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  if (lines.size() != 3) throw ParseError("expected exactly 3 lines, got " + std::to_string(lines.size()));
  if (lines[0] != kMagic) throw ParseError("missing tourn-v1 header");
  if (!lines[1].starts_with("n=")) throw ParseError("second line must be n=<N>");
  if (!lines[2].starts_with("bits=")) throw ParseError("third line must be bits=<...>");

  const int n = parse_count(lines[1].substr(2));
  if (n < 1 || n > kMaxVertices) throw ParseError("vertex count out of range: " + std::to_string(n));
  std::string_view bits = lines[2].substr(5);
  if (static_cast<int>(bits.size()) != pair_count(n))
    throw ParseError("bits has length " + std::to_string(bits.size()) + ", expected " +
                     std::to_string(pair_count(n)));
  std::vector<bool> orientation;
  orientation.reserve(bits.size());
  for (char c : bits) {
    if (c != '0' && c != '1') throw ParseError("bits may only contain '0' and '1'");
    orientation.push_back(c == '1');
  }
  return Tournament(n, orientation);
}

Tournament read_tournament_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_text(buf.str());
}

void write_tournament_file(const std::string& path, const Tournament& t) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << to_text(t);
}

}  // namespace tourn
