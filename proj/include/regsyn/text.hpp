#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace regsyn {

// one non-empty, non-comment line split on whitespace
struct Line {
  int number;
  std::vector<std::string> tok;
};

std::vector<Line> tokenize(std::string_view text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace regsyn
