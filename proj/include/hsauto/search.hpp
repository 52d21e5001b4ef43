#ifndef HSAUTO_SEARCH_HPP
#define HSAUTO_SEARCH_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hsauto/partition.hpp"
#include "hsauto/schreier.hpp"

namespace hsauto {

/// Selected coset: subgroup position in the input list and accept state.
struct CoverColumn {
  std::size_t subgroup = 0;
  State accept = 0;

  auto operator<=>(const CoverColumn&) const = default;
};

using Cover = std::vector<CoverColumn>;

/// Every selection of cosets that covers each reachable product tuple
/// exactly once. capacities[i] bounds how many cosets of subgroup i may be
/// used (0 means unbounded); an empty span means unbounded everywhere.
/// Covers come out sorted, each sorted by (subgroup, state).
std::vector<Cover> exact_covers(const std::vector<SchreierGraph>& subgroups,
                                const std::vector<std::size_t>& capacities = {});

/// exact_covers converted to partitions; part names are "S<position>".
std::vector<CosetPartition> find_partitions(const std::vector<SchreierGraph>& subgroups,
                                            const std::vector<std::size_t>& capacities = {});

CosetPartition cover_to_partition(const std::vector<SchreierGraph>& subgroups, const Cover& cover,
                                  const std::vector<std::string>& names = {});

/// Multisets of indices in [2, max_index] with reciprocal sum 1 and at most
/// max_parts entries, ascending, in lexicographic order.
std::vector<std::vector<std::size_t>> unit_fraction_multisets(std::size_t max_index, std::size_t max_parts,
                                                              bool distinct_only);

struct SearchConfig {
  std::size_t rank = 2;
  /// Explicit multiset; when empty, every multiset from max_index/max_parts.
  std::vector<std::size_t> indices;
  std::size_t max_index = 6;
  std::size_t max_parts = 12;
  bool distinct_only = true;
  std::size_t shards = 1;
  std::size_t threads = 1;
  /// Stop after this many subgroup tuples; the report is flagged incomplete.
  std::optional<std::uint64_t> tuple_budget;
  std::optional<std::string> checkpoint_path;
  std::uint64_t checkpoint_every = 10000;
};

struct FoundPartition {
  std::size_t multiset = 0;
  std::uint64_t tuple = 0;
  CosetPartition partition;
};

struct MultisetSummary {
  std::vector<std::size_t> indices;
  std::uint64_t tuples = 0;
  std::uint64_t partitions = 0;
  std::uint64_t counterexamples = 0;
};

struct SearchReport {
  std::size_t rank = 0;
  std::map<std::size_t, std::uint64_t> subgroup_counts;
  std::vector<MultisetSummary> multisets;
  std::vector<FoundPartition> partitions;
  /// Partitions whose indices are pairwise distinct.
  std::vector<FoundPartition> counterexamples;
  std::uint64_t tuples_total = 0;
  std::uint64_t tuples_done = 0;
  /// Found partitions that failed re-verification (expected 0).
  std::uint64_t verification_failures = 0;
  bool complete = false;
};

/// Exhaustive search for partitions built from subgroup tuples whose index
/// multiset has reciprocal sum 1. Tuples draw subgroups independently per
/// index (with repetition, unordered within equal indices); each subgroup
/// in a tuple contributes at most as many cosets as it occurs. Results are
/// identical for any shard or thread count.
SearchReport search_counterexamples(const SearchConfig& cfg);

}  // namespace hsauto

#endif  // HSAUTO_SEARCH_HPP
