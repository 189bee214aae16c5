#include "solvagraph/group.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "solvagraph/errors.hpp"

namespace solvagraph {

ElementSet::ElementSet(const FiniteGroup& g) : group(&g), bits(g.order()) {}

ElementSet FiniteGroup::full_set() const {
  ElementSet s(*this);
  s.bits.set_all();
  return s;
}

ElementSet FiniteGroup::singleton(int i) const {
  ElementSet s(*this);
  s.bits.set(i);
  return s;
}

int FiniteGroup::mult_slow(int i, int j) const {
  auto it = index_.find(elements_[i].compose(elements_[j]).key());
  return it->second;
}

int FiniteGroup::power(int x, long long e) const {
  int o = orders_[x];
  e %= o;
  if (e < 0) e += o;
  int r = 0;
  for (long long k = 0; k < e; ++k) r = mult(r, x);
  return r;
}

int FiniteGroup::index_of(const GroupElement& e) const {
  if (!elements_.empty() && elements_[0].kind() == ElementKind::TableIndex) {
    if (e.kind() != ElementKind::TableIndex) return -1;
    int idx = e.table_idx();
    return idx < order() ? idx : -1;
  }
  auto it = index_.find(e.key());
  return it == index_.end() ? -1 : it->second;
}

void FiniteGroup::finish_construction() {
  int n = order();
  inverse_.assign(n, -1);
  if (!table_.empty() && elements_[0].kind() == ElementKind::TableIndex) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (mult(i, j) == 0) {
          inverse_[i] = j;
          break;
        }
  } else {
    for (int i = 0; i < n; ++i) inverse_[i] = index_of(elements_[i].inverse());
  }

  orders_.assign(n, 1);
  if (elements_[0].kind() == ElementKind::Permutation) {
    // lcm of the cycle lengths; no multiplications needed
    for (int i = 0; i < n; ++i) {
      const auto& img = elements_[i].images();
      std::vector<char> done(img.size(), 0);
      long long ord = 1;
      for (std::size_t start = 0; start < img.size(); ++start) {
        if (done[start]) continue;
        long long len = 0;
        std::size_t p = start;
        while (!done[p]) {
          done[p] = 1;
          p = static_cast<std::size_t>(img[p]);
          ++len;
        }
        ord = ord / std::gcd(ord, len) * len;
      }
      orders_[i] = static_cast<int>(ord);
    }
  } else if (table_.empty()) {
    // compose values directly rather than paying a hash lookup per step
    for (int i = 1; i < n; ++i) {
      GroupElement y = elements_[i];
      int k = 1;
      while (!y.is_identity()) {
        y = y.compose(elements_[i]);
        ++k;
      }
      orders_[i] = k;
    }
  } else {
    for (int i = 1; i < n; ++i) {
      int k = 1, y = i;  // y = i^k throughout
      while (y != 0) {
        y = mult(y, i);
        ++k;
      }
      orders_[i] = k;
    }
  }

  // Conjugacy classes: orbit sweep under conjugation by the generators.
  classes_.class_of.assign(n, -1);
  classes_.conjugator_to_rep.assign(n, 0);
  classes_.representatives.clear();
  classes_.class_sizes.clear();
  classes_.centralizer_orders.clear();
  std::vector<int> queue;
  for (int start = 0; start < n; ++start) {
    if (classes_.class_of[start] != -1) continue;
    int cid = classes_.count();
    classes_.representatives.push_back(start);
    classes_.class_of[start] = cid;
    classes_.conjugator_to_rep[start] = 0;
    queue.clear();
    queue.push_back(start);
    std::size_t qi = 0;
    while (qi < queue.size()) {
      int y = queue[qi++];
      for (int g : generators_) {
        int z = conjugate(g, y);
        if (classes_.class_of[z] == -1) {
          classes_.class_of[z] = cid;
          classes_.conjugator_to_rep[z] = mult(g, classes_.conjugator_to_rep[y]);
          queue.push_back(z);
        }
      }
    }
    classes_.class_sizes.push_back(static_cast<int>(queue.size()));
    classes_.centralizer_orders.push_back(static_cast<long long>(n) / queue.size());
  }
}

FiniteGroup close_generators(std::vector<GroupElement> gens, std::string label, int cap) {
  if (gens.empty()) throw BadParams("need at least one generator");
  for (const auto& g : gens) {
    if (g.kind() != gens[0].kind())
      throw IncompatibleElements("generators must all have the same kind");
    if (g.kind() == ElementKind::TableIndex)
      throw IncompatibleElements("table-index elements cannot be closed directly");
    if (g.kind() == ElementKind::Permutation && g.degree() != gens[0].degree())
      throw IncompatibleElements("permutation generators must share a degree");
    if (g.kind() == ElementKind::MatrixModP &&
        (g.modulus() != gens[0].modulus() || g.dim() != gens[0].dim()))
      throw IncompatibleElements("matrix generators must share modulus and dimension");
  }

  GroupElement id = gens[0].kind() == ElementKind::Permutation
                        ? GroupElement::identity_permutation(gens[0].degree())
                        : GroupElement::identity_matrix(gens[0].modulus(), gens[0].dim());

  // Deduplicate generators, keep non-identity ones.
  std::vector<GroupElement> uniq;
  for (auto& g : gens) {
    if (g.is_identity()) continue;
    bool dup = false;
    for (const auto& u : uniq) dup = dup || u == g;
    if (!dup) uniq.push_back(g);
  }

  std::vector<GroupElement> disc;  // discovery order
  std::unordered_map<std::string, int> pos;
  std::vector<int> parent, gen_used;
  disc.push_back(id);
  pos.emplace(id.key(), 0);
  parent.push_back(-1);
  gen_used.push_back(-1);
  for (std::size_t qi = 0; qi < disc.size(); ++qi) {
    for (std::size_t gi = 0; gi < uniq.size(); ++gi) {
      GroupElement prod = disc[qi].compose(uniq[gi]);
      auto [it, inserted] = pos.emplace(prod.key(), static_cast<int>(disc.size()));
      if (!inserted) continue;
      if (static_cast<int>(disc.size()) + 1 > cap)
        throw CapExceeded("closure exceeded the order cap of " + std::to_string(cap));
      disc.push_back(std::move(prod));
      parent.push_back(static_cast<int>(qi));
      gen_used.push_back(static_cast<int>(gi));
    }
  }

  int n = static_cast<int>(disc.size());

  // Canonical order: identity first, the rest sorted by encoding.
  std::vector<int> by_key(n);
  std::iota(by_key.begin(), by_key.end(), 0);
  std::sort(by_key.begin() + 1, by_key.end(),
            [&](int a, int b) { return disc[a].key() < disc[b].key(); });
  std::vector<int> old_to_new(n);
  for (int k = 0; k < n; ++k) old_to_new[by_key[k]] = k;

  FiniteGroup g;
  g.label_ = std::move(label);
  g.elements_.reserve(n);
  for (int k = 0; k < n; ++k) g.elements_.push_back(disc[by_key[k]]);
  for (int k = 0; k < n; ++k) g.index_.emplace(g.elements_[k].key(), k);
  for (const auto& u : uniq) g.generators_.push_back(g.index_.at(u.key()));
  if (g.generators_.empty()) g.generators_.push_back(0);  // trivial group

  if (n <= kMultTableMaxOrder) {
    std::vector<int> gen_new(uniq.size());
    for (std::size_t gi = 0; gi < uniq.size(); ++gi) gen_new[gi] = g.index_.at(uniq[gi].key());
    g.table_.assign(static_cast<std::size_t>(n) * n, 0);
    auto col = [&](int j) { return g.table_.data() + static_cast<std::size_t>(j) * n; };
    for (int i = 0; i < n; ++i) col(0)[i] = static_cast<std::uint16_t>(i);
    // Walk in discovery order so parent columns exist before they are used.
    for (int d = 1; d < n; ++d) {
      int j = old_to_new[d];
      int p_old = parent[d];
      if (p_old == 0) {
        for (int i = 0; i < n; ++i)
          col(j)[i] = static_cast<std::uint16_t>(
              g.index_.at(g.elements_[i].compose(g.elements_[j]).key()));
      } else {
        const std::uint16_t* cp = col(old_to_new[p_old]);
        const std::uint16_t* cg = col(gen_new[gen_used[d]]);
        std::uint16_t* cj = col(j);
        for (int i = 0; i < n; ++i) cj[i] = cg[cp[i]];
      }
    }
    // Spot-check the propagated table against direct composition.
    std::uint64_t s = 0x9e3779b97f4a7c15ull;
    for (int t = 0; t < 64 && n > 1; ++t) {
      s = s * 6364136223846793005ull + 1442695040888963407ull;
      int i = static_cast<int>((s >> 17) % n);
      int j = static_cast<int>((s >> 41) % n);
      int direct = g.index_.at(g.elements_[i].compose(g.elements_[j]).key());
      if (g.mult(i, j) != direct) throw std::logic_error("multiplication table self-check failed");
    }
  }

  g.finish_construction();
  return g;
}

FiniteGroup FiniteGroup::from_mult_table(std::string label, int order,
                                         const std::function<int(int, int)>& mult,
                                         std::vector<int> generators) {
  if (order < 1) throw BadParams("group order must be positive");
  if (order > kMultTableMaxOrder)
    throw CapExceeded("table-backed group exceeds the supported order " +
                      std::to_string(kMultTableMaxOrder));
  FiniteGroup g;
  g.label_ = std::move(label);
  g.elements_.reserve(order);
  for (int i = 0; i < order; ++i) g.elements_.push_back(GroupElement::table_index(i));
  g.table_.assign(static_cast<std::size_t>(order) * order, 0);
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j) {
      int v = mult(i, j);
      if (v < 0 || v >= order) throw BadParams("multiplication table entry out of range");
      g.table_[static_cast<std::size_t>(j) * order + i] = static_cast<std::uint16_t>(v);
    }
  for (int j = 0; j < order; ++j)
    if (g.mult(0, j) != j || g.mult(j, 0) != j)
      throw BadParams("index 0 of a table group must be the identity");
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  std::erase(generators, 0);
  if (generators.empty()) generators.push_back(0);
  g.generators_ = std::move(generators);
  g.finish_construction();
  Bitset closed = g.closure_bits(g.generators_);
  if (closed.count() != static_cast<std::size_t>(order))
    throw BadParams("generators do not generate the table group");
  return g;
}

Bitset FiniteGroup::closure_bits(std::span<const int> gens) const {
  Bitset in(order());
  std::vector<int> members;
  members.reserve(16);
  in.set(0);
  members.push_back(0);
  for (std::size_t qi = 0; qi < members.size(); ++qi) {
    int x = members[qi];
    for (int g : gens) {
      int y = mult(x, g);
      if (!in.test(y)) {
        in.set(y);
        members.push_back(y);
      }
    }
  }
  return in;
}

ElementSet FiniteGroup::subgroup_generated(std::span<const int> indices) const {
  return ElementSet(*this, closure_bits(indices));
}

ElementSet FiniteGroup::centralizer(int i) const {
  ElementSet s(*this);
  for (int j = 0; j < order(); ++j)
    if (mult(i, j) == mult(j, i)) s.add(j);
  return s;
}

ElementSet FiniteGroup::center() const {
  ElementSet s(*this);
  for (int j = 0; j < order(); ++j)
    if (classes_.class_sizes[classes_.class_of[j]] == 1) s.add(j);
  return s;
}

std::vector<int> FiniteGroup::small_generating_set(const Bitset& set) const {
  std::vector<int> gens;
  Bitset cur(order());
  cur.set(0);
  std::vector<int> missing = set.to_indices();
  for (int i : missing) {
    if (cur.test(i)) continue;
    gens.push_back(i);
    cur = closure_bits(gens);
  }
  return gens;
}

bool FiniteGroup::is_subgroup(const ElementSet& s) const {
  if (s.bits.none() || !s.bits.test(0)) return false;
  std::vector<int> gens;
  Bitset cur(order());
  cur.set(0);
  bool dirty = false;
  bool subset = true;
  s.bits.for_each([&](int i) {
    if (!subset) return;
    if (dirty) {
      cur = closure_bits(gens);
      dirty = false;
      if (!cur.is_subset_of(s.bits)) {
        subset = false;
        return;
      }
    }
    if (!cur.test(i)) {
      gens.push_back(i);
      dirty = true;
    }
  });
  if (!subset) return false;
  if (dirty) cur = closure_bits(gens);
  return cur == s.bits;
}

bool FiniteGroup::is_normal(const ElementSet& h) const {
  if (!is_subgroup(h)) throw NotASubgroup("set is not a subgroup");
  bool ok = true;
  h.bits.for_each([&](int x) {
    if (!ok) return;
    for (int g : generators_)
      if (!h.bits.test(conjugate(g, x))) {
        ok = false;
        return;
      }
  });
  return ok;
}

GeneratedSubgroup normal_closure_in(const FiniteGroup& g, std::span<const int> ambient_gens,
                                    std::span<const int> seeds) {
  GeneratedSubgroup n;
  n.gens.reserve(seeds.size());
  for (int s : seeds)
    if (s != 0 && std::find(n.gens.begin(), n.gens.end(), s) == n.gens.end()) n.gens.push_back(s);
  n.set = g.closure_bits(n.gens);
  std::vector<int> queue = n.gens;
  std::size_t qi = 0;
  while (qi < queue.size()) {
    int x = queue[qi++];
    for (int h : ambient_gens) {
      int y = g.conjugate(h, x);
      if (!n.set.test(y)) {
        n.gens.push_back(y);
        queue.push_back(y);
        n.set = g.closure_bits(n.gens);
      }
    }
  }
  return n;
}

ElementSet normal_closure(const ElementSet& seeds) {
  const FiniteGroup& g = *seeds.group;
  auto nc = normal_closure_in(g, g.generators(), seeds.bits.to_indices());
  return ElementSet(g, std::move(nc.set));
}

namespace {

std::vector<int> checked_generators(const ElementSet& h) {
  const FiniteGroup& g = *h.group;
  if (h.bits.none() || !h.bits.test(0)) throw NotASubgroup("set is not a subgroup");
  std::vector<int> gens = g.small_generating_set(h.bits);
  if (g.closure_bits(gens) != h.bits) throw NotASubgroup("set is not closed under the operation");
  return gens;
}

std::vector<int> generator_commutators(const FiniteGroup& g, std::span<const int> a,
                                       std::span<const int> b) {
  std::vector<int> out;
  for (int x : a)
    for (int y : b) {
      int c = g.commutator(x, y);
      if (c != 0 && std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
    }
  return out;
}

}  // namespace

std::vector<ElementSet> derived_series(const ElementSet& h) {
  const FiniteGroup& g = *h.group;
  std::vector<int> gens = checked_generators(h);
  std::vector<ElementSet> terms;
  terms.push_back(h);
  Bitset cur_set = h.bits;
  std::vector<int> cur_gens = gens;
  while (cur_set.count() > 1) {
    auto comms = generator_commutators(g, cur_gens, cur_gens);
    GeneratedSubgroup next = normal_closure_in(g, cur_gens, comms);
    bool stable = next.set == cur_set;
    terms.emplace_back(g, next.set);
    if (stable) break;
    cur_set = std::move(next.set);
    cur_gens = std::move(next.gens);
  }
  return terms;
}

std::vector<ElementSet> lower_central_series(const ElementSet& h) {
  const FiniteGroup& g = *h.group;
  std::vector<int> top_gens = checked_generators(h);
  std::vector<ElementSet> terms;
  terms.push_back(h);
  Bitset cur_set = h.bits;
  std::vector<int> cur_gens = top_gens;
  while (cur_set.count() > 1) {
    auto comms = generator_commutators(g, top_gens, cur_gens);
    GeneratedSubgroup next = normal_closure_in(g, top_gens, comms);
    bool stable = next.set == cur_set;
    terms.emplace_back(g, next.set);
    if (stable) break;
    cur_set = std::move(next.set);
    cur_gens = std::move(next.gens);
  }
  return terms;
}

bool is_solvable(const ElementSet& h) { return derived_series(h).back().count() == 1; }
bool is_nilpotent(const ElementSet& h) { return lower_central_series(h).back().count() == 1; }

namespace {

template <bool Lower>
bool series_reaches_identity(const FiniteGroup& g, const Bitset& set, std::span<const int> gens) {
  Bitset cur_set = set;
  std::vector<int> top_gens(gens.begin(), gens.end());
  std::erase(top_gens, 0);
  std::vector<int> cur_gens = top_gens;
  while (cur_set.count() > 1) {
    auto comms = Lower ? generator_commutators(g, top_gens, cur_gens)
                       : generator_commutators(g, cur_gens, cur_gens);
    GeneratedSubgroup next = Lower ? normal_closure_in(g, top_gens, comms)
                                   : normal_closure_in(g, cur_gens, comms);
    if (next.set == cur_set) return false;
    cur_set = std::move(next.set);
    cur_gens = std::move(next.gens);
  }
  return true;
}

}  // namespace

bool generated_subgroup_is_solvable(const FiniteGroup& g, const Bitset& set,
                                    std::span<const int> gens) {
  return series_reaches_identity<false>(g, set, gens);
}

bool generated_subgroup_is_nilpotent(const FiniteGroup& g, const Bitset& set,
                                     std::span<const int> gens) {
  return series_reaches_identity<true>(g, set, gens);
}

QuotientGroup quotient_group(const FiniteGroup& g, const ElementSet& n, std::string label) {
  if (!g.is_subgroup(n)) throw NotASubgroup("quotient requires a subgroup");
  bool normal = true;
  n.bits.for_each([&](int x) {
    if (!normal) return;
    for (int gen : g.generators())
      if (!n.bits.test(g.conjugate(gen, x))) {
        normal = false;
        return;
      }
  });
  if (!normal) throw NotNormal("subgroup is not normal");

  int order = g.order();
  std::vector<int> coset_of(order, -1);
  std::vector<int> reps;
  std::vector<int> members = n.bits.to_indices();
  for (int i = 0; i < order; ++i) {
    if (coset_of[i] != -1) continue;
    int cid = static_cast<int>(reps.size());
    reps.push_back(i);
    for (int s : members) coset_of[g.mult(i, s)] = cid;
  }
  int m = static_cast<int>(reps.size());
  std::vector<int> qgens;
  for (int gen : g.generators()) qgens.push_back(coset_of[gen]);
  if (label.empty()) label = g.label() + "/N" + std::to_string(members.size());
  QuotientGroup out{
      FiniteGroup::from_mult_table(
          std::move(label), m,
          [&](int a, int b) { return coset_of[g.mult(reps[a], reps[b])]; }, std::move(qgens)),
      std::move(coset_of)};
  return out;
}

}  // namespace solvagraph
