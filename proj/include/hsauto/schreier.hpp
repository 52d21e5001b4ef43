#ifndef HSAUTO_SCHREIER_HPP
#define HSAUTO_SCHREIER_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "hsauto/words.hpp"

namespace hsauto {

using State = std::uint32_t;

/// Action table: one permutation of {0..d-1} per generator.
using ActionTable = std::vector<std::vector<State>>;

/// Schreier coset graph of a finite-index subgroup H of F_n. States are the
/// right cosets of H, state 0 is H itself, and generator a sends Hg to Hga.
///
/// Construction validates that every letter acts as a permutation and that
/// the letters act transitively, so a SchreierGraph is always a complete,
/// bi-deterministic, strongly connected automaton skeleton.
class SchreierGraph {
 public:
  SchreierGraph(Alphabet alphabet, ActionTable action);

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t rank() const { return alphabet_.rank(); }
  /// Number of states, i.e. the index [F_n : H].
  std::size_t index() const { return action_.empty() ? 0 : action_[0].size(); }

  State target(std::size_t gen, State s) const { return action_[gen][s]; }
  State source(std::size_t gen, State s) const { return inverse_[gen][s]; }
  const ActionTable& action() const { return action_; }

  State step(State s, const Letter& l) const { return l.inverse ? inverse_[l.gen][s] : action_[l.gen][s]; }

  /// Same subgroup iff equal canonical forms.
  bool operator==(const SchreierGraph& other) const {
    return alphabet_ == other.alphabet_ && action_ == other.action_;
  }

 private:
  Alphabet alphabet_;
  ActionTable action_;
  ActionTable inverse_;
};

/// Schreier automaton of the coset H t_accept: start state 0, one accept
/// state. Its language is the set of positive words in that coset.
struct CosetAutomaton {
  SchreierGraph graph;
  State accept = 0;
};

/// Shortlex-minimal positive word from state 0 to each state.
struct CosetRepTable {
  std::vector<Word> reps;
};

/// Builds the Schreier graph of H = <generators> by folding a wedge of
/// generator loops. The result is in canonical form. Throws InfiniteIndex
/// when the folded graph is not letter-complete and EmptyGenerators when
/// H is trivial.
SchreierGraph build_schreier(std::span<const Word> generators, const Alphabet& alphabet);

State walk(const SchreierGraph& g, State from, const Word& w);

CosetRepTable coset_reps(const SchreierGraph& g);

/// Relabels states in breadth-first discovery order from state 0, trying
/// generators in alphabet order. Equal tables iff equal subgroups.
ActionTable canonical_form(const SchreierGraph& g);
SchreierGraph canonicalize(const SchreierGraph& g);

/// Free generating set of H read off the breadth-first spanning tree: one
/// generator t_s a t_{s.a}^-1 per non-tree edge.
std::vector<Word> schreier_generators(const SchreierGraph& g);

/// Streams one canonical graph per subgroup of index d, in lexicographic
/// order of the canonical action tables' construction sequence.
void for_each_subgroup(const Alphabet& alphabet, std::size_t d,
                       const std::function<void(const SchreierGraph&)>& visit);

std::vector<SchreierGraph> enumerate_subgroups(const Alphabet& alphabet, std::size_t d);

}  // namespace hsauto

#endif  // HSAUTO_SCHREIER_HPP
