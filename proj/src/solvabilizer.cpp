#include "solvagraph/solvabilizer.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "solvagraph/errors.hpp"
#include "solvagraph/numtheory.hpp"
#include "solvagraph/parallel.hpp"

namespace solvagraph {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::uint64_t rotl64(std::uint64_t v, int s) { return (v << s) | (v >> (64 - s)); }

}  // namespace

std::optional<bool> PairFactCache::lookup(const Key& k, std::uint32_t size,
                                          RelationMode mode) const {
  const Shard& sh = shards_[k.a % kShards];
  std::lock_guard<std::mutex> lock(sh.mu);
  auto it = sh.map.find(k);
  if (it == sh.map.end() || it->second.size != size) return std::nullopt;
  std::int8_t v = mode == RelationMode::Solvable ? it->second.solvable : it->second.nilpotent;
  if (v < 0) return std::nullopt;
  return v != 0;
}

void PairFactCache::store(const Key& k, std::uint32_t size, RelationMode mode, bool value) {
  Shard& sh = shards_[k.a % kShards];
  std::lock_guard<std::mutex> lock(sh.mu);
  Entry& e = sh.map[k];
  if (e.size != size) e = Entry{size, -1, -1};
  (mode == RelationMode::Solvable ? e.solvable : e.nilpotent) = value ? 1 : 0;
}

std::size_t PairFactCache::entry_count() const {
  std::size_t n = 0;
  for (const auto& sh : shards_) {
    std::lock_guard<std::mutex> lock(sh.mu);
    n += sh.map.size();
  }
  return n;
}

SolvabilizerEngine::SolvabilizerEngine(const FiniteGroup& g, int threads)
    : g_(g), threads_(threads < 1 ? 1 : threads) {
  int n = g_.order();
  int nc = g_.classes().count();
  for (auto& st : states_) {
    st.rows.assign(n, Bitset());
    st.class_done.assign(nc, 0);
    st.class_subgroup.assign(nc, -1);
  }
}

bool SolvabilizerEngine::pair_related(int i, int j, RelationMode mode) {
  std::array<int, 2> gens{i, j};
  Bitset inset(g_.order());
  std::vector<int> members;
  members.reserve(32);
  inset.set(0);
  members.push_back(0);
  for (std::size_t qi = 0; qi < members.size(); ++qi) {
    for (int g : gens) {
      int y = g_.mult(members[qi], g);
      if (!inset.test(y)) {
        inset.set(y);
        members.push_back(y);
      }
    }
  }
  PairFactCache::Key key;
  for (int m : members) {
    std::uint64_t u = splitmix64(static_cast<std::uint64_t>(m) + 1);
    key.a += u;
    key.b ^= rotl64(u, (m % 61) + 1);
  }
  auto size = static_cast<std::uint32_t>(members.size());
  if (auto hit = cache_.lookup(key, size, mode)) return *hit;
  bool value = mode == RelationMode::Solvable
                   ? generated_subgroup_is_solvable(g_, inset, gens)
                   : generated_subgroup_is_nilpotent(g_, inset, gens);
  cache_.store(key, size, mode, value);
  return value;
}

void SolvabilizerEngine::sweep_row(int rep, RelationMode mode, Bitset& out) {
  int n = g_.order();
  for (int x = 0; x < n; ++x)
    if (pair_related(x, rep, mode)) out.set(x);
}

Bitset SolvabilizerEngine::row_by_sweep(int x, RelationMode mode) {
  Bitset out(g_.order());
  sweep_row(x, mode, out);
  return out;
}

void SolvabilizerEngine::ensure_class(int class_id, RelationMode mode) {
  ModeState& st = state(mode);
  if (st.class_done[class_id]) return;
  const ConjugacyTable& ct = g_.classes();
  int rep = ct.representatives[class_id];
  Bitset rep_row(g_.order());
  sweep_row(rep, mode, rep_row);
  // Transport to the rest of the class: row(c rep c^-1) = c row(rep) c^-1.
  for (int y = 0; y < g_.order(); ++y) {
    if (ct.class_of[y] != class_id || y == rep) continue;
    int c = ct.conjugator_to_rep[y];
    Bitset& row_y = st.rows[y];
    row_y = Bitset(g_.order());
    rep_row.for_each([&](int s) { row_y.set(g_.conjugate(c, s)); });
  }
  st.rows[rep] = std::move(rep_row);
  st.class_done[class_id] = 1;
}

void SolvabilizerEngine::ensure_all_rows(RelationMode mode) {
  ModeState& st = state(mode);
  if (st.all_done) return;
  int nc = g_.classes().count();
  parallel_for(nc, threads_, [&](int c) { ensure_class(c, mode); });
  st.all_done = true;
}

const Bitset& SolvabilizerEngine::row(int x, RelationMode mode) {
  int c = g_.classes().class_of[x];
  if (!state(mode).class_done[c]) {
    // Standalone query: parallelize the sweep by word blocks, then transport.
    ModeState& st = state(mode);
    int rep = g_.classes().representatives[c];
    Bitset rep_row(g_.order());
    int nwords = static_cast<int>((g_.order() + 63) / 64);
    parallel_for(nwords, threads_, [&](int w) {
      int lo = w * 64;
      int hi = std::min(g_.order(), lo + 64);
      for (int e = lo; e < hi; ++e)
        if (pair_related(e, rep, mode)) rep_row.set(e);
    });
    const ConjugacyTable& ct = g_.classes();
    for (int y = 0; y < g_.order(); ++y) {
      if (ct.class_of[y] != c || y == rep) continue;
      int conj = ct.conjugator_to_rep[y];
      Bitset& row_y = st.rows[y];
      row_y = Bitset(g_.order());
      rep_row.for_each([&](int s) { row_y.set(g_.conjugate(conj, s)); });
    }
    st.rows[rep] = std::move(rep_row);
    st.class_done[c] = 1;
  }
  return state(mode).rows[x];
}

ElementSet SolvabilizerEngine::radical(RelationMode mode) {
  ModeState& st = state(mode);
  if (!st.radical) {
    ensure_all_rows(mode);
    Bitset acc(g_.order());
    acc.set_all();
    for (int x = 0; x < g_.order(); ++x) acc &= st.rows[x];
    st.radical = std::move(acc);
  }
  return ElementSet(g_, *st.radical);
}

bool SolvabilizerEngine::class_row_is_subgroup(int class_id, RelationMode mode) {
  ModeState& st = state(mode);
  if (st.class_subgroup[class_id] < 0) {
    ensure_class(class_id, mode);
    int rep = g_.classes().representatives[class_id];
    st.class_subgroup[class_id] =
        g_.is_subgroup(ElementSet(g_, st.rows[rep])) ? 1 : 0;
  }
  return st.class_subgroup[class_id] != 0;
}

SolvabilizerResult SolvabilizerEngine::sol_of_element(int x, RelationMode mode) {
  const Bitset& r = row(x, mode);
  SolvabilizerResult res;
  res.set = ElementSet(g_, r);
  res.ambient = g_.full_set();
  res.target = g_.singleton(x);
  res.size = r.count();
  res.is_subgroup = class_row_is_subgroup(g_.classes().class_of[x], mode);
  res.mode = mode;
  return res;
}

SolvabilizerResult SolvabilizerEngine::sol_of_set(const ElementSet& a, const ElementSet& b,
                                                  RelationMode mode) {
  SolvabilizerResult res;
  res.ambient = a;
  res.target = b;
  res.mode = mode;
  if (a.bits.none()) {
    res.set = ElementSet(g_);  // Sol over an empty ambient is empty
  } else {
    Bitset acc = a.bits;
    b.bits.for_each([&](int x) { acc &= row(x, mode); });
    res.set = ElementSet(g_, std::move(acc));
  }
  res.size = res.set.count();
  res.is_subgroup = g_.is_subgroup(res.set);
  return res;
}

SGroupReport SolvabilizerEngine::s_group(RelationMode mode) {
  ensure_all_rows(mode);
  SGroupReport report;
  int least_x = -1;
  for (int c = 0; c < g_.classes().count(); ++c) {
    if (class_row_is_subgroup(c, mode)) continue;
    int rep = g_.classes().representatives[c];
    if (least_x < 0 || rep < least_x) least_x = rep;
  }
  if (least_x < 0) return report;
  report.is_s_group = false;
  const Bitset& r = state(mode).rows[least_x];
  SGroupWitness w;
  w.x = least_x;
  std::vector<int> members = r.to_indices();
  for (int a : members) {
    for (int b : members) {
      if (!r.test(g_.mult(a, b))) {
        w.a = a;
        w.b = b;
        report.witness = w;
        return report;
      }
    }
  }
  return report;  // unreachable for a genuine non-subgroup row
}

ElementSet solvable_radical(SolvabilizerEngine& engine, RelationMode mode) {
  return engine.radical(mode);
}

// ---------------------------------------------------------------------------
// Law suite
// ---------------------------------------------------------------------------

namespace {

struct CheckBuilder {
  std::vector<CheckRow> rows;

  void add(std::string name, bool pass, std::string detail = "") {
    rows.push_back(CheckRow{std::move(name), pass, std::move(detail)});
  }
  void vacuous(std::string name, std::string why) {
    rows.push_back(CheckRow{std::move(name), true, "vacuous: " + std::move(why)});
  }
};

Bitset random_subset(std::mt19937_64& rng, int n) {
  Bitset b(n);
  for (int i = 0; i < n; ++i)
    if (rng() & 1) b.set(i);
  return b;
}

Bitset random_subset_of(std::mt19937_64& rng, const Bitset& parent) {
  Bitset b(parent.size());
  parent.for_each([&](int i) {
    if (rng() & 1) b.set(i);
  });
  return b;
}

Bitset conjugated_set(const FiniteGroup& g, const Bitset& s, int c) {
  Bitset out(s.size());
  s.for_each([&](int x) { out.set(g.conjugate(c, x)); });
  return out;
}

Bitset projected_set(const Bitset& s, const std::vector<int>& projection, int m) {
  Bitset out(m);
  s.for_each([&](int x) { out.set(projection[x]); });
  return out;
}

// Normal closures of single nontrivial class representatives, deduplicated.
std::vector<Bitset> class_normal_closures(const FiniteGroup& g) {
  std::vector<Bitset> out;
  for (int c = 1; c < g.classes().count(); ++c) {
    int rep = g.classes().representatives[c];
    std::array<int, 1> seed{rep};
    auto nc = normal_closure_in(g, g.generators(), seed);
    if (std::find(out.begin(), out.end(), nc.set) == out.end()) out.push_back(std::move(nc.set));
  }
  return out;
}

bool group_is_simple(const FiniteGroup& g, const std::vector<Bitset>& closures) {
  if (g.order() == 1) return false;
  for (const auto& n : closures)
    if (n.count() != static_cast<std::size_t>(g.order())) return false;
  return true;
}

std::string elem(const FiniteGroup& g, int i) { return g.element_label(i); }

}  // namespace

std::vector<CheckRow> relation_law_checks(SolvabilizerEngine& engine, const CheckOptions& opts) {
  const FiniteGroup& g = engine.group();
  const ConjugacyTable& ct = g.classes();
  int n = g.order();
  CheckBuilder out;
  std::mt19937_64 rng(opts.seed ^ (splitmix64(n) + ct.count()));

  // Operation sanity on sampled triples; construction guarantees this, the
  // row guards against table or quotient plumbing regressions.
  {
    bool assoc = true;
    std::string detail;
    for (int t = 0; t < 1000 && assoc; ++t) {
      int a = static_cast<int>(rng() % n);
      int b = static_cast<int>(rng() % n);
      int c = static_cast<int>(rng() % n);
      if (g.mult(g.mult(a, b), c) != g.mult(a, g.mult(b, c))) {
        assoc = false;
        detail = "(" + elem(g, a) + ", " + elem(g, b) + ", " + elem(g, c) + ")";
      }
    }
    bool ident = true;
    for (int i = 0; i < n; ++i)
      ident = ident && g.mult(0, i) == i && g.mult(i, 0) == i && g.mult(i, g.inverse(i)) == 0;
    out.add("operation_axioms_spot_check", assoc && ident, detail);
  }

  engine.ensure_all_rows(RelationMode::Solvable);
  engine.ensure_all_rows(RelationMode::Nilpotent);
  ElementSet radical = engine.radical(RelationMode::Solvable);
  ElementSet whole = g.full_set();
  bool g_solvable = is_solvable(whole);
  std::vector<int> radical_members = radical.bits.to_indices();

  // Radical facts: the intersection of solvabilizers must be the largest
  // normal solvable subgroup, checked through independent group ops.
  {
    bool sub = g.is_subgroup(radical);
    bool nor = sub && g.is_normal(radical);
    bool sol = sub && is_solvable(radical);
    std::ostringstream d;
    if (!(sub && nor && sol)) d << "subgroup=" << sub << " normal=" << nor << " solvable=" << sol;
    out.add("radical_is_normal_solvable_subgroup", sub && nor && sol, d.str());
  }
  out.add("radical_full_iff_solvable",
          (radical.count() == static_cast<std::size_t>(n)) == g_solvable);

  std::vector<Bitset> closures = class_normal_closures(g);
  {
    bool pass = true;
    std::string detail;
    for (const auto& nc : closures) {
      ElementSet ns(g, nc);
      if (!is_solvable(ns)) continue;
      if (!nc.is_subset_of(radical.bits)) {
        pass = false;
        detail = "normal solvable subgroup of size " + std::to_string(nc.count()) +
                 " escapes the radical";
        break;
      }
    }
    out.add("radical_contains_normal_solvable_candidates", pass, detail);
  }

  // Sampled: a solvable subgroup extended by a radical element stays solvable.
  {
    bool pass = true;
    std::string detail;
    for (int t = 0; t < opts.sample_count && pass; ++t) {
      int x = static_cast<int>(rng() % n);
      int y = static_cast<int>(rng() % n);
      std::vector<int> hgens{x, y};
      Bitset h = g.closure_bits(hgens);
      if (!generated_subgroup_is_solvable(g, h, hgens)) {
        hgens = {x};
        h = g.closure_bits(hgens);
      }
      int s = radical_members[rng() % radical_members.size()];
      std::vector<int> ext = hgens;
      ext.push_back(s);
      Bitset k = g.closure_bits(ext);
      if (!generated_subgroup_is_solvable(g, k, ext)) {
        pass = false;
        detail = "H=<" + elem(g, hgens[0]) + (hgens.size() > 1 ? "," + elem(g, hgens[1]) : "") +
                 "> s=" + elem(g, s);
      }
    }
    out.add("radical_extension_stays_solvable", pass, detail);
  }

  // Per-class solvabilizer laws.
  {
    bool absorb = true, div_rad = true, div_ord = true, div_cent = true, power_closed = true;
    bool cyc_eq = true;
    std::string d_absorb, d_rad, d_ord, d_cent, d_pow, d_cyc;
    for (int c = 0; c < ct.count(); ++c) {
      int rep = ct.representatives[c];
      const Bitset& row = engine.row(rep, RelationMode::Solvable);
      std::size_t sol_size = row.count();

      if (absorb) {
        bool ok = true;
        for (int s : radical_members) {
          row.for_each([&](int a) {
            if (ok && !row.test(g.mult(s, a))) ok = false;
          });
          if (!ok) break;
        }
        if (!ok) {
          absorb = false;
          d_absorb = "x=" + elem(g, rep);
        }
      }
      if (div_rad && sol_size % radical.count() != 0) {
        div_rad = false;
        d_rad = "x=" + elem(g, rep) + " |sol|=" + std::to_string(sol_size);
      }
      if (div_ord && sol_size % g.element_order(rep) != 0) {
        div_ord = false;
        d_ord = "x=" + elem(g, rep) + " O(x)=" + std::to_string(g.element_order(rep));
      }
      if (div_cent && sol_size % ct.centralizer_orders[c] != 0) {
        div_cent = false;
        d_cent = "x=" + elem(g, rep) + " |C|=" + std::to_string(ct.centralizer_orders[c]);
      }
      if (power_closed) {
        bool ok = true;
        row.for_each([&](int x) {
          if (!ok) return;
          int y = g.mult(x, x);
          while (y != x) {
            if (!row.test(y)) {
              ok = false;
              return;
            }
            y = g.mult(y, x);
          }
        });
        if (!ok) {
          power_closed = false;
          d_pow = "x=" + elem(g, rep);
        }
      }
      if (cyc_eq) {
        int ord = g.element_order(rep);
        for (int k = 2; k < ord && cyc_eq; ++k) {
          if (gcd_ll(k, ord) != 1) continue;
          int y = g.power(rep, k);
          if (engine.row(y, RelationMode::Solvable) != row) {
            cyc_eq = false;
            d_cyc = "x=" + elem(g, rep) + " k=" + std::to_string(k);
          }
        }
      }
    }
    out.add("radical_product_absorption", absorb, d_absorb);
    out.add("radical_size_divides_solvabilizer_size", div_rad, d_rad);
    out.add("element_order_divides_solvabilizer_size", div_ord, d_ord);
    out.add("centralizer_order_divides_solvabilizer_size", div_cent, d_cent);
    out.add("solvabilizer_power_closure", power_closed, d_pow);
    out.add("cyclic_generator_solvabilizer_equality", cyc_eq, d_cyc);
  }

  // Nilpotentizer counterparts of the divisibility laws.
  {
    bool div_cent = true;
    std::string d;
    for (int c = 0; c < ct.count() && div_cent; ++c) {
      int rep = ct.representatives[c];
      std::size_t nil_size = engine.row(rep, RelationMode::Nilpotent).count();
      if (nil_size % ct.centralizer_orders[c] != 0) {
        div_cent = false;
        d = "x=" + elem(g, rep);
      }
    }
    out.add("centralizer_order_divides_nilpotentizer_size", div_cent, d);
  }
  {
    long long sum_sol = 0, sum_nil = 0;
    for (int c = 0; c < ct.count(); ++c) {
      int rep = ct.representatives[c];
      sum_sol += static_cast<long long>(ct.class_sizes[c]) *
                 static_cast<long long>(engine.row(rep, RelationMode::Solvable).count());
      sum_nil += static_cast<long long>(ct.class_sizes[c]) *
                 static_cast<long long>(engine.row(rep, RelationMode::Nilpotent).count());
    }
    out.add("order_divides_solvabilizer_sum", sum_sol % n == 0,
            sum_sol % n == 0 ? "" : "sum=" + std::to_string(sum_sol));
    out.add("order_divides_nilpotentizer_sum", sum_nil % n == 0,
            sum_nil % n == 0 ? "" : "sum=" + std::to_string(sum_nil));
  }

  // Subset laws on sampled subset triples.
  {
    int rounds = std::max(8, opts.sample_count / 10);
    bool mono = true, dbl = true, restrict = true, unions = true, inter_route = true;
    std::string d_mono, d_dbl, d_res, d_uni, d_int;
    for (int t = 0; t < rounds; ++t) {
      Bitset b = random_subset(rng, n);
      Bitset a = random_subset_of(rng, b);
      Bitset cset = random_subset(rng, n);
      ElementSet A(g, a), B(g, b), C(g, cset);

      auto sol_ac = engine.sol_of_set(A, C, RelationMode::Solvable).set.bits;
      auto sol_bc = engine.sol_of_set(B, C, RelationMode::Solvable).set.bits;
      auto sol_cb = engine.sol_of_set(C, B, RelationMode::Solvable).set.bits;
      auto sol_ca = engine.sol_of_set(C, A, RelationMode::Solvable).set.bits;
      if (mono && !(sol_ac.is_subset_of(sol_bc) && sol_cb.is_subset_of(sol_ca))) {
        mono = false;
        d_mono = "round " + std::to_string(t);
      }
      if (restrict) {
        Bitset rhs = sol_bc;
        rhs &= a;
        if (sol_ac != rhs) {
          restrict = false;
          d_res = "round " + std::to_string(t);
        }
      }
      if (dbl) {
        auto sol_ba = engine.sol_of_set(B, A, RelationMode::Solvable).set;
        auto back = engine.sol_of_set(A, sol_ba, RelationMode::Solvable).set.bits;
        if (back != a) {
          dbl = false;
          d_dbl = "round " + std::to_string(t);
        }
      }
      if (unions) {
        Bitset u = a;
        u |= b;
        Bitset i = a;
        i &= b;
        ElementSet U(g, u), I(g, i);
        auto sol_cu = engine.sol_of_set(C, U, RelationMode::Solvable).set.bits;
        Bitset lhs = sol_ca;
        lhs &= sol_cb;
        Bitset uni = sol_ca;
        uni |= sol_cb;
        auto sol_ci = engine.sol_of_set(C, I, RelationMode::Solvable).set.bits;
        if (sol_cu != lhs || !uni.is_subset_of(sol_ci)) {
          unions = false;
          d_uni = "round " + std::to_string(t);
        }
      }
      if (inter_route) {
        // Definition route, pair by pair, against the bitset-intersection route.
        Bitset direct(n);
        a.for_each([&](int x) {
          bool all = true;
          cset.for_each([&](int y) {
            if (all && !engine.pair_related(x, y, RelationMode::Solvable)) all = false;
          });
          if (all) direct.set(x);
        });
        if (direct != sol_ac) {
          inter_route = false;
          d_int = "round " + std::to_string(t);
        }
      }
    }
    out.add("subset_law_monotonicity", mono, d_mono);
    out.add("subset_law_double_solvabilizer", dbl, d_dbl);
    out.add("subset_law_restriction", restrict, d_res);
    out.add("subset_law_union_intersection", unions, d_uni);
    out.add("subset_law_target_intersection", inter_route, d_int);
  }

  // Empty-set conventions.
  {
    ElementSet empty(g);
    Bitset some = random_subset(rng, n);
    ElementSet A(g, some);
    bool c1 = engine.sol_of_set(A, empty, RelationMode::Solvable).set.bits == some;
    bool c2 = engine.sol_of_set(empty, A, RelationMode::Solvable).set.bits.none();
    out.add("empty_set_conventions", c1 && c2);
  }

  // Conjugation equivariance, transported rows against direct conjugation and
  // (order-gated) against a transport-free sweep.
  {
    bool pass = true;
    std::string detail;
    for (int c = 0; c < ct.count() && pass; ++c) {
      int rep = ct.representatives[c];
      const Bitset& base = engine.row(rep, RelationMode::Solvable);
      std::vector<int> gs = g.generators();
      for (int t = 0; t < 3; ++t) gs.push_back(static_cast<int>(rng() % n));
      for (int cj : gs) {
        int y = g.conjugate(cj, rep);
        if (engine.row(y, RelationMode::Solvable) != conjugated_set(g, base, cj)) {
          pass = false;
          detail = "x=" + elem(g, rep) + " g=" + elem(g, cj);
          break;
        }
      }
      if (pass && opts.deep_oracles && n <= 360) {
        int cj = static_cast<int>(rng() % n);
        int y = g.conjugate(cj, rep);
        if (engine.row_by_sweep(y, RelationMode::Solvable) != engine.row(y, RelationMode::Solvable)) {
          pass = false;
          detail = "sweep mismatch at x=" + elem(g, y);
        }
      }
    }
    out.add("conjugation_equivariance", pass, detail);
  }

  // Solvability is closed under extensions: test over the normal subgroups
  // arising as class closures.
  {
    bool pass = true;
    std::string detail;
    for (const auto& nc : closures) {
      std::size_t sz = nc.count();
      if (sz <= 1 || sz >= static_cast<std::size_t>(n)) continue;
      ElementSet nset(g, nc);
      QuotientGroup q = quotient_group(g, nset);
      bool expect = is_solvable(nset) && is_solvable(q.group.full_set());
      if (expect != g_solvable) {
        pass = false;
        detail = "|N|=" + std::to_string(sz);
        break;
      }
    }
    out.add("solvability_respects_extensions", pass, detail);
  }

  // Quotient law over normal solvable candidates.
  {
    std::vector<Bitset> candidates;
    for (const auto& nc : closures) {
      std::size_t sz = nc.count();
      if (sz <= 1 || sz >= static_cast<std::size_t>(n)) continue;
      if (!is_solvable(ElementSet(g, nc))) continue;
      candidates.push_back(nc);
    }
    if (candidates.empty()) {
      out.vacuous("quotient_projection_law", "no proper nontrivial normal solvable subgroup found");
      out.vacuous("sgroup_quotient_invariance", "no candidate normal subgroup");
    } else {
      bool pass = true, sg_pass = true;
      std::string detail;
      SGroupReport own = engine.s_group(RelationMode::Solvable);
      for (const auto& nc : candidates) {
        QuotientGroup q = quotient_group(g, ElementSet(g, nc));
        SolvabilizerEngine qe(q.group, engine.threads());
        for (int c = 0; c < ct.count() && pass; ++c) {
          int rep = ct.representatives[c];
          Bitset lhs = projected_set(engine.row(rep, RelationMode::Solvable), q.projection,
                                     q.group.order());
          if (lhs != qe.row(q.projection[rep], RelationMode::Solvable)) {
            pass = false;
            detail = "x=" + elem(g, rep) + " |N|=" + std::to_string(nc.count());
          }
        }
        if (nc.is_subset_of(radical.bits)) {
          SGroupReport qr = qe.s_group(RelationMode::Solvable);
          if (qr.is_s_group != own.is_s_group) sg_pass = false;
        }
      }
      out.add("quotient_projection_law", pass,
              pass ? std::to_string(candidates.size()) + " candidate(s)" : detail);
      out.add("sgroup_quotient_invariance", sg_pass);
    }
  }

  // Pairs of involutions generate dihedral, hence solvable, subgroups.
  {
    std::vector<int> invs;
    for (int i = 0; i < n; ++i)
      if (g.element_order(i) == 2) invs.push_back(i);
    bool pass = true;
    std::string detail;
    for (std::size_t i = 0; i < invs.size() && pass; ++i)
      for (std::size_t j = i; j < invs.size(); ++j)
        if (!engine.pair_related(invs[i], invs[j], RelationMode::Solvable)) {
          pass = false;
          detail = "x=" + elem(g, invs[i]) + " y=" + elem(g, invs[j]);
          break;
        }
    if (invs.empty())
      out.vacuous("involution_pairs_generate_solvable", "no elements of order 2");
    else
      out.add("involution_pairs_generate_solvable", pass, detail);
  }

  // S-group block.
  {
    SGroupReport rep = engine.s_group(RelationMode::Solvable);
    out.add("sgroup_iff_solvable", rep.is_s_group == g_solvable,
            "s_group=" + std::string(rep.is_s_group ? "yes" : "no"));
    if (rep.witness) {
      const auto& w = *rep.witness;
      std::array<int, 2> ax{w.a, w.x}, bx{w.b, w.x}, abx{g.mult(w.a, w.b), w.x};
      bool ok_a = generated_subgroup_is_solvable(g, g.closure_bits(ax), ax);
      bool ok_b = generated_subgroup_is_solvable(g, g.closure_bits(bx), bx);
      bool bad_ab = !generated_subgroup_is_solvable(g, g.closure_bits(abx), abx);
      out.add("sgroup_witness_verified", ok_a && ok_b && bad_ab,
              "a=" + elem(g, w.a) + " b=" + elem(g, w.b) + " x=" + elem(g, w.x));
    } else {
      out.vacuous("sgroup_witness_verified", "group is an S-group");
    }
    bool simple = group_is_simple(g, closures);
    bool abelian = g.center().count() == static_cast<std::size_t>(n);
    if (simple && !abelian)
      out.add("simple_nonabelian_not_sgroup", !rep.is_s_group);
    else
      out.vacuous("simple_nonabelian_not_sgroup", "group is not simple non-abelian");

    if (rep.is_s_group) {
      bool pass = true;
      int rounds = std::max(4, opts.sample_count / 25);
      for (int t = 0; t < rounds && pass; ++t) {
        int x = static_cast<int>(rng() % n);
        int y = static_cast<int>(rng() % n);
        std::array<int, 2> hg{x, y};
        ElementSet h(g, g.closure_bits(hg));
        ElementSet a(g, random_subset(rng, n));
        if (!engine.sol_of_set(h, a, RelationMode::Solvable).is_subgroup) pass = false;
      }
      out.add("sgroup_subgroup_solvabilizers", pass);
    } else {
      out.vacuous("sgroup_subgroup_solvabilizers", "group is not an S-group");
    }
  }

  return out.rows;
}

}  // namespace solvagraph
