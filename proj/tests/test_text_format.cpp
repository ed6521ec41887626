#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "support/generators.hpp"
#include "tourn/text_format.hpp"

using namespace tourn;

TEST_CASE("serialization") {
  CHECK(to_text(transitive(3)) == "tourn-v1\nn=3\nbits=111\n");
  CHECK(to_text(cycle3()) == "tourn-v1\nn=3\nbits=101\n");
  CHECK(to_text(transitive(1)) == "tourn-v1\nn=1\nbits=\n");
}

TEST_CASE("parsing accepts both newline forms") {
  CHECK(parse_text("tourn-v1\nn=3\nbits=101\n") == cycle3());
  CHECK(parse_text("tourn-v1\nn=3\nbits=101") == cycle3());
  CHECK(parse_text("tourn-v1\nn=1\nbits=") == transitive(1));
}

TEST_CASE("parsing rejects malformed input") {
  const char* bad[] = {
      "",
      "tourn-v2\nn=3\nbits=101\n",
      "tourn-v1\nn=3\nbits=10\n",
      "tourn-v1\nn=3\nbits=1011\n",
      "tourn-v1\nn=3\nbits=1x1\n",
      "tourn-v1\nn=03\nbits=101\n",
      "tourn-v1\nn=0\nbits=\n",
      "tourn-v1\nn=-3\nbits=101\n",
      "tourn-v1\nn=3\nbits=101\n\n",
      "tourn-v1\nn=3\nbits=101\nextra\n",
      "tourn-v1\r\nn=3\r\nbits=101\r\n",
      "tourn-v1\nN=3\nbits=101\n",
      "tourn-v1\nn=3 \nbits=101\n",
      "tourn-v1\nn=99999999999999999999\nbits=\n",
  };
  for (const char* text : bad) {
    CAPTURE(text);
    CHECK_THROWS_AS(parse_text(text), ParseError);
  }
}

TEST_CASE("text round trip") {
  tourn::Rng rng(2);
  for (int rep = 0; rep < 100; ++rep) {
    const int n = 1 + static_cast<int>(rng.below(20));
    const Tournament t = gen::uniform(n, rng);
    CHECK(parse_text(to_text(t)) == t);
  }
}

TEST_CASE("file round trip") {
  const auto path = (std::filesystem::temp_directory_path() / "tourn_text_format_test.txt").string();
  const Tournament t = random_tournament(7, 5);
  write_tournament_file(path, t);
  CHECK(read_tournament_file(path) == t);
  std::remove(path.c_str());
  CHECK_THROWS_AS(read_tournament_file(path), ParseError);
}
