#pragma once

#include <string>
#include <utility>
#include <vector>

#include "liftcat/algebra/pcm_table.hpp"

namespace liftcat {

struct NumberedLine {
  std::size_t number;
  std::string text;
};

// Splits text into lines with comments removed and whitespace trimmed; blank
// lines are dropped.
std::vector<NumberedLine> clean_lines(const std::string& text);

// `pcm v1` body (header already consumed). Sum lines `a + b = c`; the
// optional `a * b = c` lines give a multiplication (unlisted products are 0).
PcmTable parse_pcm_body(const std::vector<NumberedLine>& lines);
PcmTable parse_pcm(const std::string& text);
std::string serialize_pcm(const PcmTable& t);

std::vector<std::string> split_ws(const std::string& s);
std::string trim(const std::string& s);

}  // namespace liftcat
