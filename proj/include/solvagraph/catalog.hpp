#pragma once

#include <string>
#include <variant>
#include <vector>

#include "solvagraph/group.hpp"

namespace solvagraph {

// Parsed form of the textual group grammar:
//   spec    := atom (" x " atom)*
//   atom    := catalog | "perm:" cycles (";" cycles)* | "mat p=<p> n=<n>:" matrix (";" matrix)*
//   catalog := C<n> | D<n> | S<n> | A<n> | SL2(<p>) | PSL2(<p>)
// Cycle notation is 1-based in text and 0-based internally.
struct GroupSpec {
  struct Catalog {
    std::string name;
    int param = 0;
    bool operator==(const Catalog&) const = default;
  };
  struct Perms {
    int degree = 0;
    // generator -> cycles -> 0-based points
    std::vector<std::vector<std::vector<int>>> cycles;
    bool operator==(const Perms&) const = default;
  };
  struct Mats {
    int p = 0;
    int n = 0;
    std::vector<std::vector<int>> matrices;  // row-major entries
    bool operator==(const Mats&) const = default;
  };
  using Atom = std::variant<Catalog, Perms, Mats>;

  std::vector<Atom> factors;
  bool operator==(const GroupSpec&) const = default;
};

GroupSpec parse_spec(const std::string& text);
std::string format_spec(const GroupSpec& spec);

// Built-in constructors; name in {C, D, S, A, SL2, PSL2}.
FiniteGroup make_catalog_group(const std::string& name, int param, int cap = kDefaultOrderCap);

struct ProductGroup {
  FiniteGroup group;
  std::vector<int> proj_left, proj_right;  // product index -> factor index
  std::vector<int> inj_left, inj_right;    // factor index -> product index
};
ProductGroup direct_product(const FiniteGroup& a, const FiniteGroup& b,
                            int cap = kDefaultOrderCap, std::string label = "");

FiniteGroup build_group(const GroupSpec& spec, int cap = kDefaultOrderCap);
inline FiniteGroup build_group(const std::string& text, int cap = kDefaultOrderCap) {
  return build_group(parse_spec(text), cap);
}

// Parse one element in the group's own notation: cycles for permutation
// groups, [[..],[..]] for matrix groups, #k for table groups. Throws
// ElementNotInGroup when the element is not a member.
int parse_element(const FiniteGroup& g, const std::string& text);

struct CatalogEntry {
  std::string spec;
  long long order;
  bool solvable;
  bool nilpotent;
};
// Shipped manifest of built-ins with expected orders and flags; doubles as a
// self-test and as the population for catalog-wide verification runs.
const std::vector<CatalogEntry>& builtin_catalog();

}  // namespace solvagraph
