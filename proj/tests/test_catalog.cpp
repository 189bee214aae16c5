#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "solvagraph/catalog.hpp"
#include "solvagraph/errors.hpp"
#include "solvagraph/solvabilizer.hpp"

using namespace solvagraph;

TEST_CASE("constructor order formulas") {
  for (int n = 1; n <= 12; ++n) CHECK(make_catalog_group("C", n).order() == n);
  for (int n = 1; n <= 12; ++n) CHECK(make_catalog_group("D", n).order() == 2 * n);
  long long fact = 1;
  for (int n = 1; n <= 6; ++n) {
    fact *= n;
    CHECK(make_catalog_group("S", n).order() == fact);
    CHECK(make_catalog_group("A", n).order() == (n <= 2 ? 1 : fact / 2));
  }
  CHECK(make_catalog_group("S", 7).order() == 5040);
  for (int p : {2, 3, 5, 7}) {
    long long order = static_cast<long long>(p) * (p * p - 1);
    CHECK(make_catalog_group("SL2", p).order() == order);
    CHECK(make_catalog_group("PSL2", p).order() == (p == 2 ? order : order / 2));
  }
}

TEST_CASE("constructor flags and errors") {
  FiniteGroup d4 = make_catalog_group("D", 4);
  CHECK(d4.order() == 8);
  CHECK(is_solvable(d4.full_set()));
  CHECK(is_nilpotent(d4.full_set()));

  FiniteGroup psl7 = make_catalog_group("PSL2", 7);
  CHECK(psl7.order() == 168);
  CHECK_FALSE(is_solvable(psl7.full_set()));
  // Simple: the normal closure of any nontrivial element is everything.
  for (int c = 1; c < psl7.classes().count(); ++c)
    CHECK(normal_closure(psl7.singleton(psl7.classes().representatives[c])).count() == 168);

  CHECK_THROWS_AS(make_catalog_group("S", 8), BadParams);
  CHECK_THROWS_AS(make_catalog_group("SL2", 11), BadParams);
  CHECK_THROWS_AS(make_catalog_group("C", 0), BadParams);
  CHECK_THROWS_AS(make_catalog_group("Q", 8), BadParams);
  CHECK_THROWS_AS(make_catalog_group("A", 7, 100), CapExceeded);
}

TEST_CASE("direct products") {
  ProductGroup p = direct_product(make_catalog_group("A", 5), make_catalog_group("C", 2));
  CHECK(p.group.order() == 120);
  CHECK(p.group.label() == "A5 x C2");
  // Projections invert the injections and respect the operation.
  for (int i = 0; i < 60; ++i) CHECK(p.proj_left[p.inj_left[i]] == i);
  for (int j = 0; j < 2; ++j) CHECK(p.proj_right[p.inj_right[j]] == j);
  for (int k = 0; k < 120; k += 7)
    for (int l = 0; l < 120; l += 11) {
      int m = p.group.mult(k, l);
      CHECK(p.proj_left[m] == make_catalog_group("A", 5).mult(p.proj_left[k], p.proj_left[l]));
    }

  ProductGroup q = direct_product(make_catalog_group("C", 2), make_catalog_group("C", 3));
  CHECK(q.group.order() == 6);
  bool has_order6 = false;
  for (int i = 0; i < 6; ++i) has_order6 = has_order6 || q.group.element_order(i) == 6;
  CHECK(has_order6);  // cyclic of order 6
  CHECK(is_nilpotent(q.group.full_set()));

  ProductGroup r = direct_product(make_catalog_group("A", 5), make_catalog_group("C", 1));
  CHECK(r.group.order() == 60);

  CHECK_THROWS_AS(direct_product(make_catalog_group("S", 5), make_catalog_group("S", 5), 10080),
                  CapExceeded);

  // Non-permutation factors go through the table realization.
  ProductGroup t = direct_product(make_catalog_group("PSL2", 5), make_catalog_group("C", 2));
  CHECK(t.group.order() == 120);
  CHECK(t.group.element(0).kind() == ElementKind::TableIndex);
  for (int k = 0; k < 120; k += 13)
    for (int l = 0; l < 120; l += 17) {
      int m = t.group.mult(k, l);
      CHECK(t.proj_right[m] == (t.proj_right[k] + t.proj_right[l]) % 2);
    }
}

TEST_CASE("spec grammar") {
  GroupSpec a5 = parse_spec("A5");
  REQUIRE(a5.factors.size() == 1);
  CHECK(std::get<GroupSpec::Catalog>(a5.factors[0]) == GroupSpec::Catalog{"A", 5});

  GroupSpec perms = parse_spec("perm: (1,2,3,4,5); (1,2,3)");
  REQUIRE(perms.factors.size() == 1);
  const auto& p = std::get<GroupSpec::Perms>(perms.factors[0]);
  CHECK(p.degree == 5);
  CHECK(p.cycles.size() == 2);
  CHECK(build_group(perms).order() == 60);

  GroupSpec mats = parse_spec("mat p=5 n=2: [[1,1],[0,1]]; [[0,4],[1,0]]");
  CHECK(build_group(mats).order() == 120);

  GroupSpec prod = parse_spec("A5 x C2");
  CHECK(prod.factors.size() == 2);
  CHECK(build_group(prod).order() == 120);

  CHECK(build_group("perm: ()").order() == 1);
  CHECK(parse_spec("SL2(5)").factors.size() == 1);
}

TEST_CASE("spec grammar errors carry positions") {
  CHECK_THROWS_AS(parse_spec("Q5"), ParseError);
  CHECK_THROWS_AS(parse_spec("A"), ParseError);
  CHECK_THROWS_AS(parse_spec("perm: (1,2"), ParseError);
  CHECK_THROWS_AS(parse_spec("perm: (1,1,2)"), ParseError);
  CHECK_THROWS_AS(parse_spec("perm: (0,1)"), OutOfRange);
  CHECK_THROWS_AS(parse_spec("mat p=4 n=2: [[1,0],[0,1]]"), OutOfRange);
  CHECK_THROWS_AS(parse_spec("mat p=5 n=2: [[5,0],[0,1]]"), OutOfRange);
  CHECK_THROWS_AS(parse_spec("A5 x"), ParseError);
  CHECK_THROWS_AS(parse_spec(""), ParseError);
  CHECK_THROWS_AS(parse_spec("perm: (1,70000)"), OutOfRange);   // encoding bound
  CHECK_THROWS_AS(parse_spec("mat p=65537 n=1: [[1]]"), OutOfRange);
  try {
    parse_spec("perm: (1,2");
  } catch (const ParseError& e) {
    CHECK(e.position > 0);
  }
}

TEST_CASE("format and parse round-trip") {
  for (const char* text :
       {"A5", "C12", "D4", "SL2(5)", "PSL2(7)", "A5 x C2", "C2 x C3 x C2",
        "perm: (1,2,3,4,5); (1,2,3)", "perm: (1,2)(3,4)",
        "mat p=5 n=2: [[1,1],[0,1]]; [[0,4],[1,0]]"}) {
    GroupSpec spec = parse_spec(text);
    std::string canon = format_spec(spec);
    CHECK(parse_spec(canon) == spec);
    CHECK(format_spec(parse_spec(canon)) == canon);
  }
  // Non-canonical cycle writing normalizes.
  CHECK(format_spec(parse_spec("perm: (2,3,1)")) == "perm: (1,2,3)");
}

TEST_CASE("element parsing") {
  FiniteGroup a5 = make_catalog_group("A", 5);
  CHECK(parse_element(a5, "()") == 0);
  int c3 = parse_element(a5, "(1,2,3)");
  CHECK(a5.element_order(c3) == 3);
  CHECK(parse_element(a5, "(2,3)(4,5)") == parse_element(a5, "(4,5)(2,3)"));
  CHECK_THROWS_AS(parse_element(a5, "(1,2)"), ElementNotInGroup);  // odd permutation
  CHECK_THROWS_AS(parse_element(a5, "(1,6)"), OutOfRange);

  FiniteGroup sl2 = make_catalog_group("SL2", 5);
  CHECK(parse_element(sl2, "[[1,0],[0,1]]") == 0);
  CHECK(sl2.element_order(parse_element(sl2, "[[1,1],[0,1]]")) == 5);
  CHECK_THROWS_AS(parse_element(sl2, "[[1,1],[1,1]]"), SingularMatrix);

  FiniteGroup psl = make_catalog_group("PSL2", 5);
  CHECK(parse_element(psl, "#0") == 0);
  CHECK(parse_element(psl, "#3") == 3);
  CHECK_THROWS_AS(parse_element(psl, "#60"), ElementNotInGroup);

  // Rendering round-trips through the parser for every element kind.
  for (const char* spec : {"A5", "SL2(3)", "PSL2(5)"}) {
    FiniteGroup g = build_group(spec);
    for (int i = 0; i < g.order(); i += 3)
      CHECK(parse_element(g, g.element_label(i)) == i);
  }
}

TEST_CASE("dimension-three matrix groups") {
  // Invertible 3x3 matrices over F_2, generated by a transvection and the
  // cyclic permutation matrix.
  FiniteGroup gl32 =
      build_group("mat p=2 n=3: [[1,1,0],[0,1,0],[0,0,1]]; [[0,0,1],[1,0,0],[0,1,0]]");
  CHECK(gl32.order() == 168);
  CHECK_FALSE(is_solvable(gl32.full_set()));

  // Same abstract group as the quotient-built PSL2(7): the class profile
  // (element order, class size) must agree between the two constructions.
  FiniteGroup psl27 = make_catalog_group("PSL2", 7);
  auto profile = [](const FiniteGroup& g) {
    std::multiset<std::pair<int, int>> prof;
    for (int c = 0; c < g.classes().count(); ++c)
      prof.emplace(g.element_order(g.classes().representatives[c]), g.classes().class_sizes[c]);
    return prof;
  };
  CHECK(profile(gl32) == profile(psl27));
}

TEST_CASE("manifest self-test") {
  for (const auto& entry : builtin_catalog()) {
    if (entry.order > 720) continue;  // the largest entry has its own suite
    INFO(entry.spec);
    FiniteGroup g = build_group(entry.spec);
    CHECK(g.order() == entry.order);
    CHECK(is_solvable(g.full_set()) == entry.solvable);
    CHECK(is_nilpotent(g.full_set()) == entry.nilpotent);
    CHECK((g.element(0).is_identity() || g.element(0).kind() == ElementKind::TableIndex));
    CHECK(g.mult(0, 0) == 0);
    for (int i = 0; i < g.order(); i += 5) {
      CHECK(g.mult(i, g.inverse(i)) == 0);
      CHECK(g.mult(0, i) == i);
      CHECK(g.mult(i, 0) == i);
    }
    // The closure of the recorded generators is the whole group.
    CHECK(g.subgroup_generated(g.generators()).count() == static_cast<std::size_t>(g.order()));
  }
}
