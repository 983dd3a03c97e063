#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "armlab/edges.hpp"
#include "json.hpp"

namespace armlab {

// How a check covered its search space.
struct Scope {
  bool exhaustive = true;
  std::uint64_t seed = 0;    // meaningful only when sampled
  std::uint64_t count = 0;   // samples drawn when sampled

  static Scope Exhaustive() { return Scope{true, 0, 0}; }
  static Scope Sampled(std::uint64_t seed, std::uint64_t count) {
    return Scope{false, seed, count};
  }
};

// One concrete failure of a checked property: a tag plus the edge sets and
// integers that exhibit it, in a fixed order so reports are reproducible.
struct Witness {
  std::string kind;
  std::vector<std::pair<std::string, EdgeSet>> edge_sets;
  std::vector<std::pair<std::string, std::int64_t>> numbers;

  Witness() = default;
  explicit Witness(std::string k) : kind(std::move(k)) {}
  Witness& with(const std::string& name, EdgeSet e) {
    edge_sets.emplace_back(name, e);
    return *this;
  }
  Witness& with(const std::string& name, std::int64_t v) {
    numbers.emplace_back(name, v);
    return *this;
  }
};

inline bool operator==(const Witness& a, const Witness& b) {
  if (a.kind != b.kind || a.numbers != b.numbers) return false;
  if (a.edge_sets.size() != b.edge_sets.size()) return false;
  for (std::size_t i = 0; i < a.edge_sets.size(); ++i)
    if (a.edge_sets[i].first != b.edge_sets[i].first ||
        a.edge_sets[i].second.bits != b.edge_sets[i].second.bits)
      return false;
  return true;
}

inline bool witness_less(const Witness& a, const Witness& b) {
  if (a.kind != b.kind) return a.kind < b.kind;
  auto abits = [](const Witness& w) {
    std::vector<std::uint32_t> v;
    for (auto& [name, e] : w.edge_sets) v.push_back(e.bits);
    return v;
  };
  auto av = abits(a), bv = abits(b);
  if (av != bv) return av < bv;
  return a.numbers < b.numbers;
}

// Cap on stored violations; checks keep counting but stop recording past it.
inline constexpr std::size_t kMaxStoredViolations = 10000;

// Outcome of one named check.
struct AxiomReport {
  std::string suite;
  bool passed = true;
  Scope scope;
  std::vector<Witness> violations;
  std::uint64_t violation_count = 0;  // may exceed violations.size()
  nlohmann::json details = nlohmann::json::object();

  void record(Witness w) {
    passed = false;
    ++violation_count;
    if (violations.size() < kMaxStoredViolations)
      violations.push_back(std::move(w));
  }
  void finalize() {
    std::sort(violations.begin(), violations.end(), witness_less);
  }
};

// An enumerated set family (circuits, hyperplanes, ...), sorted by
// (cardinality, bits).
struct FamilyReport {
  std::string kind;
  int n = 0;  // ambient vertex count
  std::vector<EdgeSet> members;
};

}  // namespace armlab
