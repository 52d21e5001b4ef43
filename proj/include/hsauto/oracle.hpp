#ifndef HSAUTO_ORACLE_HPP
#define HSAUTO_ORACLE_HPP

// Brute-force ground truth. Deliberately naive: words are enumerated one by
// one and walked letter by letter over raw action tables, with no use of the
// graph, matrix or product-automaton code it is meant to check.

#include <cstdint>
#include <vector>

#include "hsauto/numeric.hpp"

namespace hsauto::oracle {

/// table[letter][state] = image of state under letter.
using Table = std::vector<std::vector<std::uint32_t>>;

struct Automaton {
  Table action;
  std::uint32_t accept = 0;
};

/// a_k = number of positive words of length k leading from state 0 to the
/// accept state, k = 0..max_len. Throws BoundExceeded for max_len > 16.
std::vector<std::uint64_t> brute_count(const Automaton& a, std::size_t max_len);

struct PartitionCheck {
  bool ok = true;
  /// First word (by length, then lex) accepted by != 1 parts, as letter indices.
  std::vector<std::uint32_t> failure;
  std::size_t coverage = 0;
};

/// Checks every positive word of length <= max_len. Throws BoundExceeded
/// for max_len > 12.
PartitionCheck brute_partition_check(const std::vector<Automaton>& parts, std::size_t max_len);

/// Number of index-d subgroups of the free group of rank n, by the
/// recurrence N_d = d (d!)^(n-1) - sum_{i<d} ((d-i)!)^(n-1) N_i.
BigInt hall_count(std::size_t rank, std::size_t d);

}  // namespace hsauto::oracle

#endif  // HSAUTO_ORACLE_HPP
