#include "schreier/bfile.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace schreier {

BFile BFile::from_sequence(const CountSequence& seq, std::uint64_t first) {
  BFile out;
  for (std::uint64_t n = first; n <= seq.n_max(); ++n) out.lines.push_back({n, seq[n]});
  return out;
}

void BFile::write(std::ostream& os) const {
  for (const auto& c : comments) os << "# " << c << '\n';
  for (const auto& l : lines) os << l.index << ' ' << l.value << '\n';
}

std::string BFile::str() const {
  std::ostringstream os;
  write(os);
  return os.str();
}

BFile BFile::parse(std::istream& is) {
  BFile out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.front() == '#') {
      std::string text = line.substr(1);
      if (!text.empty() && text.front() == ' ') text.erase(0, 1);
      out.comments.push_back(std::move(text));
      continue;
    }
    const auto space = line.find(' ');
    auto bad = [&](const std::string& why) {
      return std::invalid_argument("b-file line " + std::to_string(lineno) + ": " + why);
    };
    if (space == std::string::npos) throw bad("expected \"index value\"");
    std::uint64_t index = 0;
    const auto [ptr, ec] = std::from_chars(line.data(), line.data() + space, index);
    if (ec != std::errc{} || ptr != line.data() + space) throw bad("bad index");
    Count value;
    try {
      value = Count::from_decimal(std::string_view(line).substr(space + 1));
    } catch (const std::invalid_argument&) {
      throw bad("bad value");
    }
    if (!out.lines.empty() && index != out.lines.back().index + 1) {
      throw bad("indices must increase by one");
    }
    out.lines.push_back({index, std::move(value)});
  }
  return out;
}

BFile BFile::parse(const std::string& text) {
  std::istringstream is(text);
  return parse(is);
}

std::string to_csv(const CountSequence& seq, std::uint64_t first) {
  std::string out;
  for (std::uint64_t n = first; n <= seq.n_max(); ++n) {
    if (n != first) out += ',';
    out += seq[n].str();
  }
  return out;
}

}  // namespace schreier
