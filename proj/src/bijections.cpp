#include "schreier/bijections.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "schreier/enumeration.hpp"
#include "schreier/errors.hpp"

namespace schreier {

namespace {

void require_lemma_range(std::uint64_t n, const Ratio& r, const char* what) {
  if (n < r.p + r.q) {
    throw DomainError(std::string(what) + ": requires n >= p+q, got n = " + std::to_string(n) +
                      " for " + r.str());
  }
}

void require_member(const FiniteSet& f, const Ratio& r, std::uint64_t n, const char* what) {
  if (!is_in_spq_family(f, r, n)) {
    throw DomainError(std::string(what) + ": " + f.str() + " is not in S^" + r.str() + "_" +
                      std::to_string(n));
  }
}

// Members of S_n; empty for n = 0 (no set has maximum 0).
std::vector<FiniteSet> family(std::uint64_t n, const Ratio& r) {
  if (n == 0) return {};
  return enumerate_spq(n, r).members;
}

bool contains_window(const FiniteSet& f, std::uint64_t n, const Ratio& r) {
  for (Element x = n - r.q; x < n; ++x) {
    if (!f.contains(x)) return false;
  }
  return true;
}

bool disjoint(const FiniteSet& f, const GapSet& g) {
  return std::none_of(g.members().begin(), g.members().end(),
                      [&](Element x) { return f.contains(x); });
}

using SetMap = std::function<FiniteSet(const FiniteSet&)>;

BijectionCheck check_bijection(std::vector<FiniteSet> domain, std::vector<FiniteSet> codomain,
                               const SetMap& forward, const SetMap& inverse) {
  BijectionCheck out;
  out.domain_size = domain.size();
  out.codomain_size = codomain.size();
  std::sort(domain.begin(), domain.end());
  std::sort(codomain.begin(), codomain.end());
  auto in = [](const std::vector<FiniteSet>& v, const FiniteSet& x) {
    return std::binary_search(v.begin(), v.end(), x);
  };
  auto fail = [&out](std::string why) {
    out.bijective = false;
    out.detail = std::move(why);
    return out;
  };

  std::vector<FiniteSet> images;
  images.reserve(domain.size());
  try {
    for (const auto& f : domain) {
      FiniteSet h = forward(f);
      if (!in(codomain, h)) return fail("image " + h.str() + " of " + f.str() + " not in codomain");
      if (inverse(h) != f) return fail("inverse does not undo the map at " + f.str());
      images.push_back(std::move(h));
    }
    for (const auto& h : codomain) {
      FiniteSet f = inverse(h);
      if (!in(domain, f)) return fail("preimage " + f.str() + " of " + h.str() + " not in domain");
      if (forward(f) != h) return fail("map does not undo the inverse at " + h.str());
    }
  } catch (const std::exception& e) {
    return fail(e.what());
  }
  std::sort(images.begin(), images.end());
  if (std::adjacent_find(images.begin(), images.end()) != images.end()) {
    return fail("map is not injective");
  }
  if (images != codomain) return fail("map is not surjective");
  out.bijective = true;
  return out;
}

}  // namespace

GapSet::GapSet(std::uint64_t n, const Ratio& r, std::vector<Element> members)
    : n_(n), ratio_(r), members_(std::move(members)) {
  if (n_ < r.q + 1) throw std::invalid_argument("GapSet: requires n >= q+1");
  if (members_.empty()) throw std::invalid_argument("GapSet: G must be nonempty");
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
    throw std::invalid_argument("GapSet: repeated element");
  }
  if (members_.front() < n_ - r.q || members_.back() > n_ - 1) {
    throw std::invalid_argument("GapSet: members must lie in {n-q, ..., n-1}");
  }
}

bool GapSet::contains(Element x) const {
  return std::binary_search(members_.begin(), members_.end(), x);
}

std::string GapSet::str() const { return FiniteSet(members_).str(); }

std::vector<GapSet> gap_sets_of_size(std::uint64_t n, const Ratio& r, std::size_t size) {
  if (n < r.q + 1) throw std::invalid_argument("gap_sets_of_size: requires n >= q+1");
  std::vector<GapSet> out;
  if (size == 0 || size > r.q) return out;
  // Lexicographic walk over increasing size-subsets of the window.
  const Element lo = n - r.q;
  std::vector<Element> pick(size);
  for (std::size_t i = 0; i < size; ++i) pick[i] = lo + i;
  while (true) {
    out.emplace_back(n, r, pick);
    std::size_t i = size;
    while (i > 0 && pick[i - 1] == n - 1 - (size - i)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

std::vector<GapSet> all_gap_sets(std::uint64_t n, const Ratio& r) {
  std::vector<GapSet> out;
  for (std::size_t s = 1; s <= r.q; ++s) {
    auto layer = gap_sets_of_size(n, r, s);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

Element psi(Element i, const GapSet& g) {
  if (i == 0 || i > g.n() || g.contains(i)) {
    throw DomainError("psi: " + std::to_string(i) + " is not in {1..n} \\ G");
  }
  const auto below = std::lower_bound(g.members().begin(), g.members().end(), i);
  return i - static_cast<Element>(below - g.members().begin());
}

Element psi_inverse(Element j, const GapSet& g) {
  if (j == 0 || j > g.n() - g.size()) {
    throw DomainError("psi_inverse: " + std::to_string(j) + " is not in {1..n-|G|}");
  }
  Element i = j;
  for (Element gap : g.members()) {
    if (gap <= i) ++i;
  }
  return i;
}

Relabeling psi_map(const GapSet& g) {
  Relabeling out;
  out.pairs.reserve(g.n() - g.size());
  for (Element i = 1; i <= g.n(); ++i) {
    if (!g.contains(i)) out.pairs.emplace_back(i, psi(i, g));
  }
  return out;
}

FiniteSet phi_G(const FiniteSet& f, const GapSet& g) {
  const Ratio& r = g.ratio();
  require_lemma_range(g.n(), r, "phi_G");
  require_member(f, r, g.n(), "phi_G");
  if (!disjoint(f, g)) throw DomainError("phi_G: " + f.str() + " meets G = " + g.str());
  std::vector<Element> image;
  image.reserve(f.size());
  for (Element i : f.elements()) image.push_back(psi(i, g));
  FiniteSet h(std::move(image));
  if (!is_in_spq_family(h, r, g.n() - g.size())) {
    throw std::logic_error("phi_G: image " + h.str() + " left the target family");
  }
  return h;
}

FiniteSet phi_G_inverse(const FiniteSet& h, const GapSet& g) {
  const Ratio& r = g.ratio();
  require_lemma_range(g.n(), r, "phi_G_inverse");
  require_member(h, r, g.n() - g.size(), "phi_G_inverse");
  std::vector<Element> pre;
  pre.reserve(h.size());
  for (Element j : h.elements()) pre.push_back(psi_inverse(j, g));
  FiniteSet f(std::move(pre));
  if (!is_in_spq_family(f, r, g.n()) || !disjoint(f, g)) {
    throw std::logic_error("phi_G_inverse: preimage " + f.str() + " is not in A_G");
  }
  return f;
}

FiniteSet phi_A(const FiniteSet& f, const Ratio& r, std::uint64_t n) {
  require_lemma_range(n, r, "phi_A");
  require_member(f, r, n, "phi_A");
  if (!contains_window(f, n, r)) {
    throw DomainError("phi_A: " + f.str() + " does not contain {n-q, ..., n-1}");
  }
  std::vector<Element> image;
  for (Element x : f.elements()) {
    if (x > n - r.q) break;
    if (x <= r.p) throw std::logic_error("phi_A: translation left the positive integers");
    image.push_back(x - r.p);
  }
  FiniteSet h(std::move(image));
  if (!is_in_spq_family(h, r, n - (r.p + r.q))) {
    throw std::logic_error("phi_A: image " + h.str() + " left the target family");
  }
  return h;
}

FiniteSet phi_A_inverse(const FiniteSet& h, const Ratio& r, std::uint64_t n) {
  require_lemma_range(n, r, "phi_A_inverse");
  require_member(h, r, n - (r.p + r.q), "phi_A_inverse");
  std::vector<Element> pre;
  pre.reserve(h.size() + r.q);
  for (Element x : h.elements()) pre.push_back(x + r.p);
  for (Element x = n - r.q + 1; x <= n; ++x) pre.push_back(x);
  FiniteSet f(std::move(pre));
  if (!is_in_spq_family(f, r, n) || !contains_window(f, n, r)) {
    throw std::logic_error("phi_A_inverse: preimage " + f.str() + " is not in A");
  }
  return f;
}

IEDecomposition inclusion_exclusion_decomposition(std::uint64_t n, const Ratio& r) {
  if (n < r.p + r.q) {
    throw std::invalid_argument("inclusion_exclusion_decomposition: requires n >= p+q");
  }
  const auto members = enumerate_spq(n, r).members;
  IEDecomposition out{n, r, 0, {}, 0};
  std::uint64_t a = 0;
  for (const auto& f : members) {
    if (contains_window(f, n, r)) ++a;
  }
  out.a_count = a;

  Count::Integer assembled = a;
  for (std::size_t i = 1; i <= r.q; ++i) {
    std::uint64_t layer = 0;
    for (const auto& g : gap_sets_of_size(n, r, i)) {
      layer += static_cast<std::uint64_t>(
          std::count_if(members.begin(), members.end(), [&](const FiniteSet& f) { return disjoint(f, g); }));
    }
    out.layer_sums.emplace_back(layer);
    if (i % 2 == 1) {
      assembled += layer;
    } else {
      assembled -= layer;
    }
  }
  out.assembled = Count(std::move(assembled));
  return out;
}

BijectionCheck check_phi_G_bijection(const GapSet& g) {
  const std::uint64_t n = g.n();
  const Ratio& r = g.ratio();
  if (n < r.p + r.q) {
    BijectionCheck out;
    out.detail = "lemma needs n >= p+q";
    return out;
  }
  std::vector<FiniteSet> domain;
  for (auto& f : family(n, r)) {
    if (disjoint(f, g)) domain.push_back(std::move(f));
  }
  return check_bijection(
      std::move(domain), family(n - g.size(), r),
      [&g](const FiniteSet& f) { return phi_G(f, g); },
      [&g](const FiniteSet& h) { return phi_G_inverse(h, g); });
}

BijectionCheck check_phi_A_bijection(std::uint64_t n, const Ratio& r) {
  if (n < r.p + r.q) {
    BijectionCheck out;
    out.detail = "proof map needs n >= p+q";
    return out;
  }
  std::vector<FiniteSet> domain;
  for (auto& f : family(n, r)) {
    if (contains_window(f, n, r)) domain.push_back(std::move(f));
  }
  return check_bijection(
      std::move(domain), family(n - (r.p + r.q), r),
      [&](const FiniteSet& f) { return phi_A(f, r, n); },
      [&](const FiniteSet& h) { return phi_A_inverse(h, r, n); });
}

}  // namespace schreier
