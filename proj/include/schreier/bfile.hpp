#pragma once

// OEIS b-file and CSV rendering of count sequences.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "schreier/count.hpp"
#include "schreier/counting.hpp"

namespace schreier {

struct BFileLine {
  std::uint64_t index;
  Count value;
  friend bool operator==(const BFileLine&, const BFileLine&) = default;
};

struct BFile {
  std::vector<std::string> comments;  // emitted as "# <text>"
  std::vector<BFileLine> lines;

  // values[first..n_max] with indices first, first+1, ...
  static BFile from_sequence(const CountSequence& seq, std::uint64_t first);

  void write(std::ostream& os) const;
  std::string str() const;

  // Throws std::invalid_argument on malformed lines or indices that do not
  // increase by exactly one.
  static BFile parse(std::istream& is);
  static BFile parse(const std::string& text);
};

// "v_first,...,v_nmax"
std::string to_csv(const CountSequence& seq, std::uint64_t first);

}  // namespace schreier
