#include "schreier/count.hpp"

#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace schreier {

Count::Count(Integer v) : value_(std::move(v)) {
  if (value_ < 0) throw std::invalid_argument("Count: negative value " + value_.str());
}

Count Count::from_decimal(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("Count: empty decimal string");
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw std::invalid_argument("Count: not a decimal number: " + std::string(text));
    }
  }
  return Count(Integer(std::string(text)));
}

std::string Count::str() const { return value_.str(); }

std::ostream& operator<<(std::ostream& os, const Count& c) { return os << c.str(); }

std::string digest(const Count& c) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : c.str()) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace schreier
