#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace schreier {

using Element = std::uint64_t;

// A nonempty finite set of positive integers, stored as a strictly
// increasing sequence.
class FiniteSet {
 public:
  // Accepts elements in any order. Throws std::invalid_argument on an empty
  // input, a zero element, or a repeated element.
  explicit FiniteSet(std::vector<Element> elements);
  FiniteSet(std::initializer_list<Element> elements)
      : FiniteSet(std::vector<Element>(elements)) {}

  // {lo, lo+1, ..., hi}
  static FiniteSet interval(Element lo, Element hi);

  Element min() const { return elements_.front(); }
  Element max() const { return elements_.back(); }
  std::size_t size() const { return elements_.size(); }
  std::span<const Element> elements() const { return elements_; }
  bool contains(Element x) const;

  std::string str() const;  // "{2,3}"

  friend bool operator==(const FiniteSet&, const FiniteSet&) = default;
  // Lexicographic on the increasing element sequence.
  friend auto operator<=>(const FiniteSet& a, const FiniteSet& b) {
    return a.elements_ <=> b.elements_;
  }

 private:
  std::vector<Element> elements_;
};

// The parameter pair of the condition q * min F >= p * |F|. Never reduced.
struct Ratio {
  std::uint64_t p;
  std::uint64_t q;

  // Throws std::invalid_argument unless p >= 1 and q >= 1.
  Ratio(std::uint64_t p_, std::uint64_t q_);

  Ratio scaled(std::uint64_t k) const { return Ratio(k * p, k * q); }
  std::string str() const;  // "p/q"

  friend bool operator==(const Ratio&, const Ratio&) = default;
};

bool is_generalized_schreier(const FiniteSet& f, const Ratio& r);
bool is_in_spq_family(const FiniteSet& f, const Ratio& r, std::uint64_t n);
bool is_interval(const FiniteSet& f);

}  // namespace schreier
