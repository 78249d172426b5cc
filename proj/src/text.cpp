#include "regsyn/text.hpp"

#include <fstream>
#include <sstream>

#include "regsyn/error.hpp"

namespace regsyn {

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  int no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view raw = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++no;
    if (auto h = raw.find('#'); h != std::string_view::npos) raw = raw.substr(0, h);
    std::istringstream in{std::string(raw)};
    Line l{no, {}};
    for (std::string t; in >> t;) l.tok.push_back(t);
    if (!l.tok.empty()) out.push_back(std::move(l));
    if (nl == text.size()) break;
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path);
  out << text;
}

}  // namespace regsyn
