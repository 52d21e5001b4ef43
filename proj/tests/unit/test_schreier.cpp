#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "hsauto/error.hpp"
#include "hsauto/oracle.hpp"
#include "hsauto/schreier.hpp"
#include "support/fixtures.hpp"

using namespace hsauto;
using namespace hsauto::testing;

namespace {

Word w(const char* text) { return parse_word(text, ab()); }

bool is_permutation_table(const ActionTable& t) {
  for (const auto& row : t) {
    std::vector<State> sorted = row;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
      if (sorted[i] != i) return false;
  }
  return true;
}

bool transitive(const ActionTable& t) {
  const std::size_t d = t.empty() ? 0 : t[0].size();
  std::vector<bool> seen(d, false);
  std::vector<State> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    State s = stack.back();
    stack.pop_back();
    for (const auto& row : t) {
      if (!seen[row[s]]) {
        seen[row[s]] = true;
        stack.push_back(row[s]);
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

// Test-local relabeling: BFS from 0, generators in order, forward edges only.
ActionTable relabel_bfs(const ActionTable& t) {
  const std::size_t d = t[0].size();
  std::vector<State> order{0};
  std::vector<long> label(d, -1);
  label[0] = 0;
  for (std::size_t q = 0; q < order.size(); ++q)
    for (const auto& row : t)
      if (label[row[order[q]]] < 0) {
        label[row[order[q]]] = static_cast<long>(order.size());
        order.push_back(row[order[q]]);
      }
  ActionTable out(t.size(), std::vector<State>(d));
  for (std::size_t g = 0; g < t.size(); ++g)
    for (std::size_t s = 0; s < d; ++s) out[g][label[s]] = static_cast<State>(label[t[g][s]]);
  return out;
}

// Independent count of index-d subgroups of F_2: all transitive pairs of
// permutations, deduplicated by basepointed relabeling.
std::size_t brute_subgroup_count(std::size_t d) {
  std::vector<State> p(d);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<State>> perms;
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::set<ActionTable> seen;
  for (const auto& x : perms)
    for (const auto& y : perms) {
      ActionTable t{x, y};
      if (transitive(t)) seen.insert(relabel_bfs(t));
    }
  return seen.size();
}

}  // namespace

TEST_CASE("build K: both letters act as the 4-cycle") {
  SchreierGraph k = graph_K();
  CHECK(k.index() == 4);
  ActionTable cycle{{1, 2, 3, 0}, {1, 2, 3, 0}};
  CHECK(k.action() == cycle);
}

TEST_CASE("build H: both letters swap the two cosets") {
  SchreierGraph h = graph_H();
  CHECK(h.index() == 2);
  CHECK(h.action() == ActionTable{{1, 0}, {1, 0}});
}

TEST_CASE("build the whole group: one state with loops") {
  SchreierGraph f = graph_F2();
  CHECK(f.index() == 1);
  CHECK(f.action() == ActionTable{{0}, {0}});
}

TEST_CASE("build rejects infinite index and trivial subgroups") {
  try {
    (void)build_schreier(words({"a"}), ab());
    FAIL("expected InfiniteIndex");
  } catch (const InfiniteIndex& e) {
    CHECK(std::string(e.what()).find('b') != std::string::npos);
  }
  CHECK_THROWS_AS(build_schreier(words({"a^2", "ab^2"}), ab()), InfiniteIndex);
  CHECK_THROWS_AS(build_schreier(std::vector<Word>{}, ab()), EmptyGenerators);
  CHECK_THROWS_AS(build_schreier(words({"aA", ""}), ab()), EmptyGenerators);
}

TEST_CASE("graph constructor validates") {
  CHECK_THROWS_AS(SchreierGraph(ab(), ActionTable{{0, 0}, {1, 0}}), InvalidGraph);
  CHECK_THROWS_AS(SchreierGraph(ab(), ActionTable{{0, 1}, {0, 1}}), InvalidGraph);
  CHECK_THROWS_AS(SchreierGraph(ab(), ActionTable{{1, 0}}), InvalidGraph);
}

TEST_CASE("walk examples") {
  SchreierGraph k = graph_K();
  CHECK(walk(k, 0, w("a")) == 1);
  CHECK(walk(k, 2, Word(2)) == 2);
  CHECK(walk(k, 0, w("aB")) == 0);
  CHECK(walk(k, 0, w("A")) == 3);
}

TEST_CASE("coset representatives") {
  CHECK(coset_reps(graph_K()).reps == words({"", "a", "aa", "aaa"}));
  CHECK(coset_reps(graph_F2()).reps == words({""}));
  CHECK(coset_reps(graph_H()).reps == words({"", "a"}));
}

TEST_CASE("generators walk to the basepoint and order does not matter") {
  std::vector<Word> gens = words({"a^4", "b^4", "aB", "aaBB", "aaaBBB"});
  SchreierGraph k = build_schreier(gens, ab());
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    std::shuffle(gens.begin(), gens.end(), rng);
    for (const auto& g : gens) CHECK(walk(k, 0, g) == 0);
    CHECK(build_schreier(gens, ab()) == k);
  }
}

TEST_CASE("redundant and inverted generators give the same graph") {
  CHECK(build_schreier(words({"AA", "bb", "BA", "abab"}), ab()) == graph_H());
  CHECK(build_schreier(words({"ab", "a^2", "b^2", "a^2 b^2"}), ab()) == graph_H());
}

TEST_CASE("canonicalization undoes a relabeling that fixes the basepoint") {
  SchreierGraph k = graph_K();
  std::vector<State> perm{0, 3, 1, 2};
  ActionTable t(2, std::vector<State>(4));
  for (std::size_t g = 0; g < 2; ++g)
    for (State s = 0; s < 4; ++s) t[g][perm[s]] = perm[k.target(g, s)];
  SchreierGraph shuffled(ab(), t);
  CHECK_FALSE(shuffled == k);
  CHECK(canonicalize(shuffled) == k);
  CHECK(canonical_form(shuffled) == k.action());
}

TEST_CASE("rank one: dZ is a d-cycle") {
  Alphabet a1({"a"});
  for (std::size_t d = 1; d <= 12; ++d) {
    SchreierGraph g = build_schreier(std::vector<Word>{parse_word("a^" + std::to_string(d), a1)}, a1);
    REQUIRE(g.index() == d);
    for (State s = 0; s < d; ++s) CHECK(g.target(0, s) == (s + 1) % d);
    auto subs = enumerate_subgroups(a1, d);
    REQUIRE(subs.size() == 1);
    CHECK(subs[0] == g);
  }
  Alphabet a1b({"a"});
  CHECK(build_schreier(std::vector<Word>{parse_word("a^6", a1b), parse_word("a^4", a1b)}, a1b).index() == 2);
}

TEST_CASE("index-2 subgroups of F_2") {
  auto subs = enumerate_subgroups(ab(), 2);
  REQUIRE(subs.size() == 3);
  CHECK(std::find(subs.begin(), subs.end(), graph_H()) != subs.end());
  CHECK(std::find(subs.begin(), subs.end(), build_schreier(words({"a", "b^2", "bab"}), ab())) != subs.end());
  CHECK(std::find(subs.begin(), subs.end(), build_schreier(words({"b", "a^2", "aba"}), ab())) != subs.end());
}

TEST_CASE("enumeration counts match Hall's recurrence") {
  const std::size_t expected[] = {1, 3, 13, 71, 461};
  for (std::size_t d = 1; d <= 5; ++d) {
    auto subs = enumerate_subgroups(ab(), d);
    CHECK(subs.size() == expected[d - 1]);
    CHECK(BigInt(subs.size()) == oracle::hall_count(2, d));
  }
  for (std::size_t d = 1; d <= 3; ++d)
    CHECK(BigInt(enumerate_subgroups(Alphabet::standard(3), d).size()) == oracle::hall_count(3, d));
}

TEST_CASE("enumeration matches a brute-force permutation count") {
  for (std::size_t d = 1; d <= 4; ++d) CHECK(enumerate_subgroups(ab(), d).size() == brute_subgroup_count(d));
}

TEST_CASE("enumerated graphs are canonical, distinct, valid and rebuild from their generators") {
  for (std::size_t d = 1; d <= 4; ++d) {
    std::set<ActionTable> seen;
    for (const auto& g : enumerate_subgroups(ab(), d)) {
      CHECK(g.index() == d);
      CHECK(is_permutation_table(g.action()));
      CHECK(transitive(g.action()));
      CHECK(canonicalize(g) == g);
      CHECK(relabel_bfs(g.action()) == g.action());
      CHECK(seen.insert(g.action()).second);

      auto gens = schreier_generators(g);
      CHECK(gens.size() == d + 1);
      for (const auto& x : gens) CHECK(walk(g, 0, x) == 0);
      CHECK(build_schreier(gens, ab()) == g);

      auto reps = coset_reps(g).reps;
      for (State s = 0; s < d; ++s) {
        CHECK(reps[s].is_positive());
        CHECK(walk(g, 0, reps[s]) == s);
      }
    }
  }
}

TEST_CASE("coset representative lengths are BFS distances") {
  for (const auto& g : enumerate_subgroups(ab(), 5)) {
    const std::size_t d = g.index();
    std::vector<std::size_t> dist(d, SIZE_MAX);
    std::vector<State> q{0};
    dist[0] = 0;
    for (std::size_t i = 0; i < q.size(); ++i)
      for (std::size_t a = 0; a < 2; ++a) {
        State t = g.target(a, q[i]);
        if (dist[t] == SIZE_MAX) {
          dist[t] = dist[q[i]] + 1;
          q.push_back(t);
        }
      }
    auto reps = coset_reps(g).reps;
    for (State s = 0; s < d; ++s) CHECK(reps[s].size() == dist[s]);
  }
}
