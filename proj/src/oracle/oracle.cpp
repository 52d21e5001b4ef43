#include "hsauto/oracle.hpp"

#include "hsauto/error.hpp"

namespace hsauto::oracle {

namespace {

/// Calls visit(word) for every word over `rank` letters of length `len`,
/// in lexicographic order.
template <typename Visit>
void for_each_word(std::size_t rank, std::size_t len, Visit&& visit) {
  std::vector<std::uint32_t> word(len, 0);
  while (true) {
    visit(word);
    std::size_t pos = len;
    while (pos > 0) {
      --pos;
      if (++word[pos] < rank) break;
      word[pos] = 0;
      if (pos == 0) return;
    }
    if (len == 0) return;
  }
}

std::uint32_t run(const Table& t, const std::vector<std::uint32_t>& word) {
  std::uint32_t s = 0;
  for (auto l : word) s = t[l][s];
  return s;
}

BigInt factorial(std::size_t k) {
  BigInt f = 1;
  for (std::size_t i = 2; i <= k; ++i) f *= i;
  return f;
}

}  // namespace

std::vector<std::uint64_t> brute_count(const Automaton& a, std::size_t max_len) {
  if (max_len > 16) throw BoundExceeded("brute_count is limited to words of length 16");
  std::vector<std::uint64_t> counts(max_len + 1, 0);
  for (std::size_t k = 0; k <= max_len; ++k)
    for_each_word(a.action.size(), k, [&](const std::vector<std::uint32_t>& w) {
      if (run(a.action, w) == a.accept) ++counts[k];
    });
  return counts;
}

PartitionCheck brute_partition_check(const std::vector<Automaton>& parts, std::size_t max_len) {
  if (max_len > 12) throw BoundExceeded("brute_partition_check is limited to words of length 12");
  PartitionCheck result;
  if (parts.empty()) {
    result.ok = false;
    return result;
  }
  const std::size_t rank = parts[0].action.size();
  for (std::size_t k = 0; k <= max_len && result.ok; ++k) {
    for_each_word(rank, k, [&](const std::vector<std::uint32_t>& w) {
      if (!result.ok) return;
      std::size_t hits = 0;
      for (const auto& p : parts)
        if (run(p.action, w) == p.accept) ++hits;
      if (hits != 1) {
        result.ok = false;
        result.failure = w;
        result.coverage = hits;
      }
    });
  }
  return result;
}

BigInt hall_count(std::size_t rank, std::size_t d) {
  std::vector<BigInt> n(d + 1);
  for (std::size_t k = 1; k <= d; ++k) {
    BigInt value = BigInt(k) * pow(factorial(k), static_cast<unsigned>(rank - 1));
    for (std::size_t i = 1; i < k; ++i) value -= pow(factorial(k - i), static_cast<unsigned>(rank - 1)) * n[i];
    n[k] = value;
  }
  return n[d];
}

}  // namespace hsauto::oracle
