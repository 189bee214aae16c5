#pragma once

#include <array>
#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "solvagraph/group.hpp"

namespace solvagraph {

enum class RelationMode { Solvable, Nilpotent };
inline const char* mode_name(RelationMode m) {
  return m == RelationMode::Solvable ? "solvable" : "nilpotent";
}

struct SolvabilizerResult {
  ElementSet set;
  ElementSet ambient;  // A
  ElementSet target;   // B
  std::size_t size = 0;
  bool is_subgroup = false;
  RelationMode mode = RelationMode::Solvable;
};

struct SGroupWitness {
  int a = -1, b = -1, x = -1;
};

struct SGroupReport {
  bool is_s_group = true;
  std::optional<SGroupWitness> witness;  // present iff !is_s_group
};

// Facts about distinct generated subgroups, keyed by a 128-bit fingerprint of
// the member set. Sharded so parallel sweeps can insert concurrently;
// identical keys always carry identical values, so last-writer-wins is safe.
class PairFactCache {
 public:
  struct Key {
    std::uint64_t a = 0, b = 0;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const { return k.a ^ (k.b * 0x9e3779b97f4a7c15ull); }
  };

  std::optional<bool> lookup(const Key& k, std::uint32_t size, RelationMode mode) const;
  void store(const Key& k, std::uint32_t size, RelationMode mode, bool value);
  std::size_t entry_count() const;

 private:
  struct Entry {
    std::uint32_t size = 0;
    std::int8_t solvable = -1;   // -1 unknown
    std::int8_t nilpotent = -1;
  };
  struct Shard {
    mutable std::mutex mu;
    std::unordered_map<Key, Entry, KeyHash> map;
  };
  static constexpr std::size_t kShards = 32;
  std::array<Shard, kShards> shards_;
};

// Per-group engine for the pair relation "the two elements generate a
// solvable (resp. nilpotent) subgroup", and everything derived from it:
// per-element rows, radicals, subgroup closure reports. Rows are computed
// once per conjugacy class and transported to the rest of the class by
// conjugation. Internal sweeps run on `threads` workers; the public surface
// is meant to be driven from one thread.
class SolvabilizerEngine {
 public:
  explicit SolvabilizerEngine(const FiniteGroup& g, int threads = 1);

  const FiniteGroup& group() const { return g_; }
  int threads() const { return threads_; }

  bool pair_related(int i, int j, RelationMode mode);

  // Set bits over the whole group: { g : pair_related(g, x) }.
  const Bitset& row(int x, RelationMode mode);
  void ensure_all_rows(RelationMode mode);

  // Same row computed without class transport; oracle for cross-checks.
  Bitset row_by_sweep(int x, RelationMode mode);

  ElementSet radical(RelationMode mode);
  SolvabilizerResult sol_of_element(int x, RelationMode mode);
  SolvabilizerResult sol_of_set(const ElementSet& a, const ElementSet& b, RelationMode mode);
  bool class_row_is_subgroup(int class_id, RelationMode mode);
  SGroupReport s_group(RelationMode mode);

  std::size_t cache_entries() const { return cache_.entry_count(); }

 private:
  struct ModeState {
    std::vector<Bitset> rows;
    std::vector<char> class_done;
    std::vector<std::int8_t> class_subgroup;  // -1 unknown
    std::optional<Bitset> radical;
    bool all_done = false;
  };

  ModeState& state(RelationMode m) { return states_[m == RelationMode::Solvable ? 0 : 1]; }
  void ensure_class(int class_id, RelationMode mode);
  void sweep_row(int rep, RelationMode mode, Bitset& out);

  const FiniteGroup& g_;
  int threads_;
  PairFactCache cache_;
  ModeState states_[2];
};

// Full solvable radical via the intersection of per-element solvabilizers.
ElementSet solvable_radical(SolvabilizerEngine& engine, RelationMode mode);

// One named law check; `detail` carries the first counterexample on failure
// or a vacuity note.
struct CheckRow {
  std::string name;
  bool pass = true;
  std::string detail;
};

struct CheckOptions {
  std::uint64_t seed = 1;
  int sample_count = 200;   // sampled-law iterations
  bool deep_oracles = true; // order-gated independent recomputations
};

// The full element-level law suite for one group (both relation modes where
// the law has a nilpotent counterpart). Failures are rows, not exceptions.
std::vector<CheckRow> relation_law_checks(SolvabilizerEngine& engine, const CheckOptions& opts);

}  // namespace solvagraph
