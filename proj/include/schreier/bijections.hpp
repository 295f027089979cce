#pragma once

// Executable forms of the maps behind the recurrence:
//
//   psi_G   the increasing relabeling {1..n} \ G -> {1..n-|G|}
//   phi_G   A_G = {F in S_n : F disjoint from G} -> S_{n-|G|},  F -> psi_G(F)
//   phi_A   A = {F in S_n : {n-q..n-1} subset of F} -> S_{n-(p+q)},
//           F -> (F \ {n-q+1..n}) - p
//
// together with the inclusion-exclusion count that assembles |S_n| from
// |A| and the |A_G|. Each map raises DomainError outside its domain.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "schreier/count.hpp"
#include "schreier/finite_set.hpp"

namespace schreier {

// A nonempty G inside the window {n-q, ..., n-1}.
class GapSet {
 public:
  // Throws std::invalid_argument if n < q+1, members is empty, or a member
  // falls outside the window.
  GapSet(std::uint64_t n, const Ratio& r, std::vector<Element> members);

  std::uint64_t n() const { return n_; }
  const Ratio& ratio() const { return ratio_; }
  const std::vector<Element>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(Element x) const;
  std::string str() const;

 private:
  std::uint64_t n_;
  Ratio ratio_;
  std::vector<Element> members_;  // increasing
};

// All G of the given size (1 <= size <= q), in lexicographic order.
std::vector<GapSet> gap_sets_of_size(std::uint64_t n, const Ratio& r, std::size_t size);
// All nonempty G, ordered by size then lexicographically.
std::vector<GapSet> all_gap_sets(std::uint64_t n, const Ratio& r);

struct Relabeling {
  std::vector<std::pair<Element, Element>> pairs;  // (i, psi(i)), i increasing
};

Relabeling psi_map(const GapSet& g);
// Throws DomainError for i in G or outside {1..n}.
Element psi(Element i, const GapSet& g);
// Throws DomainError for j outside {1..n-|G|}.
Element psi_inverse(Element j, const GapSet& g);

FiniteSet phi_G(const FiniteSet& f, const GapSet& g);
FiniteSet phi_G_inverse(const FiniteSet& h, const GapSet& g);
FiniteSet phi_A(const FiniteSet& f, const Ratio& r, std::uint64_t n);
FiniteSet phi_A_inverse(const FiniteSet& h, const Ratio& r, std::uint64_t n);

struct IEDecomposition {
  std::uint64_t n;
  Ratio ratio;
  Count a_count;                 // |A|
  std::vector<Count> layer_sums; // layer_sums[i-1] = sum over |G| = i of |A_G|
  Count assembled;               // |A| + sum_i (-1)^{i+1} layer_sums[i-1]
};

// Counts A and every A_G by filtering the oracle listing of S_n; nothing is
// taken from the lemma being checked. Requires n >= p+q and n within the
// oracle guard.
IEDecomposition inclusion_exclusion_decomposition(std::uint64_t n, const Ratio& r);

// Outcome of checking that a map is a bijection between two oracle listings.
struct BijectionCheck {
  std::size_t domain_size = 0;
  std::size_t codomain_size = 0;
  bool bijective = false;
  std::string detail;  // first problem found; empty on success
};

// phi_G : A_G -> S_{n-|G|} with phi_G_inverse as two-sided inverse.
BijectionCheck check_phi_G_bijection(const GapSet& g);
// phi_A : A -> S_{n-(p+q)} with phi_A_inverse as two-sided inverse. An empty
// A against an empty target passes.
BijectionCheck check_phi_A_bijection(std::uint64_t n, const Ratio& r);

}  // namespace schreier
