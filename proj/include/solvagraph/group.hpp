#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "solvagraph/bitset.hpp"
#include "solvagraph/element.hpp"

namespace solvagraph {

// Default closure cap. A7 (2520) fits comfortably; the cap exists to stop
// accidental closure explosions, not as a hard design limit.
inline constexpr int kDefaultOrderCap = 10080;

// Orders up to this get a full multiplication table (uint16 entries,
// column-major). Above it, products fall back to compose+lookup.
inline constexpr int kMultTableMaxOrder = 5040;

class FiniteGroup;

// A subset of one parent group's elements, as a bitset over indices.
struct ElementSet {
  const FiniteGroup* group = nullptr;
  Bitset bits;

  ElementSet() = default;
  explicit ElementSet(const FiniteGroup& g);
  ElementSet(const FiniteGroup& g, Bitset b) : group(&g), bits(std::move(b)) {}

  std::size_t count() const { return bits.count(); }
  bool contains(int i) const { return bits.test(i); }
  void add(int i) { bits.set(i); }
  bool operator==(const ElementSet& o) const { return bits == o.bits; }
};

struct ConjugacyTable {
  std::vector<int> class_of;          // element index -> class id
  std::vector<int> representatives;   // class id -> least element index in class
  std::vector<int> class_sizes;
  std::vector<long long> centralizer_orders;
  std::vector<int> conjugator_to_rep;  // c with element = c * rep * c^-1

  int count() const { return static_cast<int>(representatives.size()); }
};

// Fully enumerated finite group. Index 0 is the identity; the remaining
// elements are sorted by canonical encoding, so construction from any
// generating set of the same group yields the identical object. Immutable
// after construction and safe to share across threads.
class FiniteGroup {
 public:
  FiniteGroup() = default;  // empty shell; meaningful groups come from the factories

  int order() const { return static_cast<int>(elements_.size()); }
  const std::string& label() const { return label_; }
  const GroupElement& element(int i) const { return elements_[i]; }
  const std::vector<int>& generators() const { return generators_; }

  int mult(int i, int j) const {
    if (!table_.empty()) return table_[static_cast<std::size_t>(j) * elements_.size() + i];
    return mult_slow(i, j);
  }
  int inverse(int i) const { return inverse_[i]; }
  int conjugate(int g, int x) const { return mult(mult(g, x), inverse(g)); }
  int commutator(int a, int b) const {
    return mult(mult(inverse(a), inverse(b)), mult(a, b));
  }
  int power(int x, long long e) const;

  int element_order(int i) const { return orders_[i]; }
  const ConjugacyTable& classes() const { return classes_; }

  // -1 when the element is not a member.
  int index_of(const GroupElement& e) const;
  std::string element_label(int i) const { return elements_[i].to_string(); }

  ElementSet full_set() const;
  ElementSet empty_set() const { return ElementSet(*this); }
  ElementSet singleton(int i) const;

  ElementSet centralizer(int i) const;
  ElementSet center() const;
  ElementSet subgroup_generated(std::span<const int> indices) const;
  Bitset closure_bits(std::span<const int> gens) const;

  // Greedy small generating set of an arbitrary subset; the closure of the
  // result contains the set, with equality iff the set is a subgroup.
  std::vector<int> small_generating_set(const Bitset& set) const;
  bool is_subgroup(const ElementSet& s) const;
  bool is_normal(const ElementSet& h) const;

  static FiniteGroup from_mult_table(std::string label, int order,
                                     const std::function<int(int, int)>& mult,
                                     std::vector<int> generators);

  friend FiniteGroup close_generators(std::vector<GroupElement> gens, std::string label, int cap);

 private:
  int mult_slow(int i, int j) const;
  void finish_construction();  // inverses, orders, conjugacy

  std::vector<GroupElement> elements_;
  std::unordered_map<std::string, int> index_;  // element key -> index (non-table kinds)
  std::vector<std::uint16_t> table_;            // column-major: mult(i,j) = table_[j*n+i]
  std::vector<int> inverse_;
  std::vector<int> orders_;
  std::vector<int> generators_;
  ConjugacyTable classes_;
  std::string label_;
};

// Breadth-first closure of the generating set; identity lands at index 0.
FiniteGroup close_generators(std::vector<GroupElement> gens, std::string label = "",
                             int cap = kDefaultOrderCap);

// Subgroup with a tracked generating set, for series computations.
struct GeneratedSubgroup {
  Bitset set;
  std::vector<int> gens;
};

// Smallest subgroup of the ambient containing the seeds and closed under
// conjugation by the ambient. The ambient must be a subgroup given with a
// generating set; seeds must lie inside it.
GeneratedSubgroup normal_closure_in(const FiniteGroup& g, std::span<const int> ambient_gens,
                                    std::span<const int> seeds);
ElementSet normal_closure(const ElementSet& seeds);

std::vector<ElementSet> derived_series(const ElementSet& h);
std::vector<ElementSet> lower_central_series(const ElementSet& h);
bool is_solvable(const ElementSet& h);
bool is_nilpotent(const ElementSet& h);

// Series predicates on a subgroup already given with generators; skips the
// subgroup re-check, which is what the pair sweep needs.
bool generated_subgroup_is_solvable(const FiniteGroup& g, const Bitset& set,
                                    std::span<const int> gens);
bool generated_subgroup_is_nilpotent(const FiniteGroup& g, const Bitset& set,
                                     std::span<const int> gens);

struct QuotientGroup {
  FiniteGroup group;
  std::vector<int> projection;  // parent element index -> quotient index
};
QuotientGroup quotient_group(const FiniteGroup& g, const ElementSet& n, std::string label = "");

}  // namespace solvagraph
