#include "schreier/finite_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace schreier {

namespace {
__extension__ typedef unsigned __int128 Wide;
}

FiniteSet::FiniteSet(std::vector<Element> elements) : elements_(std::move(elements)) {
  if (elements_.empty()) throw std::invalid_argument("FiniteSet: empty set");
  std::sort(elements_.begin(), elements_.end());
  if (elements_.front() == 0) throw std::invalid_argument("FiniteSet: elements must be >= 1");
  if (std::adjacent_find(elements_.begin(), elements_.end()) != elements_.end()) {
    throw std::invalid_argument("FiniteSet: repeated element");
  }
}

FiniteSet FiniteSet::interval(Element lo, Element hi) {
  if (lo == 0 || hi < lo) throw std::invalid_argument("FiniteSet::interval: need 1 <= lo <= hi");
  std::vector<Element> v(hi - lo + 1);
  for (Element i = 0; i < v.size(); ++i) v[i] = lo + i;
  return FiniteSet(std::move(v));
}

bool FiniteSet::contains(Element x) const {
  return std::binary_search(elements_.begin(), elements_.end(), x);
}

std::string FiniteSet::str() const {
  std::string s = "{";
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(elements_[i]);
  }
  return s + '}';
}

Ratio::Ratio(std::uint64_t p_, std::uint64_t q_) : p(p_), q(q_) {
  if (p == 0 || q == 0) throw std::invalid_argument("Ratio: p and q must be >= 1");
}

std::string Ratio::str() const { return std::to_string(p) + '/' + std::to_string(q); }

bool is_generalized_schreier(const FiniteSet& f, const Ratio& r) {
  return Wide(r.q) * f.min() >= Wide(r.p) * f.size();
}

bool is_in_spq_family(const FiniteSet& f, const Ratio& r, std::uint64_t n) {
  return f.max() == n && is_generalized_schreier(f, r);
}

bool is_interval(const FiniteSet& f) { return f.size() == f.max() - f.min() + 1; }

}  // namespace schreier
