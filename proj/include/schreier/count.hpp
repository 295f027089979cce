#pragma once

// Exact nonnegative counts. Sequence values grow exponentially, so every
// count in the library is an arbitrary-precision integer.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace schreier {

class Count {
 public:
  using Integer = boost::multiprecision::cpp_int;

  Count() = default;
  Count(std::uint64_t v) : value_(v) {}  // NOLINT: implicit by intent
  // Throws std::invalid_argument when v is negative.
  explicit Count(Integer v);

  // Parses a plain decimal string (digits only).
  static Count from_decimal(std::string_view text);

  const Integer& value() const { return value_; }
  std::string str() const;
  std::size_t digits() const { return str().size(); }

  Count& operator+=(const Count& rhs) {
    value_ += rhs.value_;
    return *this;
  }
  friend Count operator+(Count lhs, const Count& rhs) { return lhs += rhs; }
  friend Count operator*(const Count& lhs, const Count& rhs) {
    return Count(Integer(lhs.value_ * rhs.value_));
  }

  friend bool operator==(const Count& a, const Count& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Count& a, const Count& b) {
    const int c = a.value_.compare(b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  Integer value_{0};
};

std::ostream& operator<<(std::ostream& os, const Count& c);

// 64-bit FNV-1a of the decimal representation, rendered as 16 hex digits.
std::string digest(const Count& c);

}  // namespace schreier
