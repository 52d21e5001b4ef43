#ifndef HSAUTO_TESTS_FIXTURES_HPP
#define HSAUTO_TESTS_FIXTURES_HPP

// Shared test fixtures: the index-4 subgroup K and the index-2 subgroup H
// of F_2, plus adapters from library types to the oracle's raw tables.

#include <random>
#include <string>
#include <vector>

#include "hsauto/oracle.hpp"
#include "hsauto/partition.hpp"
#include "hsauto/schreier.hpp"
#include "hsauto/words.hpp"

namespace hsauto::testing {

inline const Alphabet& ab() {
  static const Alphabet alphabet({"a", "b"});
  return alphabet;
}

inline std::vector<Word> words(const std::vector<std::string>& texts, const Alphabet& alphabet = ab()) {
  std::vector<Word> out;
  for (const auto& t : texts) out.push_back(parse_word(t, alphabet));
  return out;
}

inline SchreierGraph graph_K() { return build_schreier(words({"a^4", "b^4", "aB", "aaBB", "aaaBBB"}), ab()); }
inline SchreierGraph graph_H() { return build_schreier(words({"a^2", "b^2", "ab"}), ab()); }
inline SchreierGraph graph_F2() { return build_schreier(words({"a", "b"}), ab()); }

/// F_2 = H u Ka u Ka^3
inline CosetPartition partition_H_Ka_Ka3() {
  return CosetPartition(ab(), {CosetPart::from_rep("H", graph_H(), Word(2)),
                               CosetPart::from_rep("K", graph_K(), parse_word("a", ab())),
                               CosetPart::from_rep("K", graph_K(), parse_word("aaa", ab()))});
}

inline oracle::Automaton to_oracle(const CosetPart& p) { return {p.graph.action(), p.accept}; }

inline std::vector<oracle::Automaton> to_oracle(const CosetPartition& p) {
  std::vector<oracle::Automaton> out;
  for (const auto& part : p.parts()) out.push_back(to_oracle(part));
  return out;
}

/// Uniformly random letter sequence (not necessarily reduced).
inline std::vector<Letter> random_letters(std::mt19937& rng, std::size_t rank, std::size_t len) {
  std::uniform_int_distribution<std::uint32_t> gen(0, static_cast<std::uint32_t>(rank - 1));
  std::bernoulli_distribution inv(0.5);
  std::vector<Letter> out;
  for (std::size_t i = 0; i < len; ++i) out.push_back(Letter{gen(rng), inv(rng)});
  return out;
}

}  // namespace hsauto::testing

#endif  // HSAUTO_TESTS_FIXTURES_HPP
