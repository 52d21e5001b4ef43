#ifndef HSAUTO_PARTITION_HPP
#define HSAUTO_PARTITION_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hsauto/numeric.hpp"
#include "hsauto/polynomial.hpp"
#include "hsauto/schreier.hpp"

namespace hsauto {

/// One coset H t_accept of a candidate partition.
struct CosetPart {
  std::string subgroup;
  SchreierGraph graph;
  State accept = 0;
  Word rep;

  /// Part for the coset H w; accept = walk(graph, 0, w).
  static CosetPart from_rep(std::string subgroup, SchreierGraph graph, Word rep);
  /// Part for a state; rep is the shortlex coset representative.
  static CosetPart from_state(std::string subgroup, SchreierGraph graph, State accept);

  std::size_t index() const { return graph.index(); }
  CosetAutomaton automaton() const { return CosetAutomaton{graph, accept}; }
};

/// Finite list of cosets over one alphabet, claimed to partition F_n.
class CosetPartition {
 public:
  /// Throws AlphabetMismatch if the parts disagree on the alphabet and
  /// std::invalid_argument if there are no parts.
  CosetPartition(Alphabet alphabet, std::vector<CosetPart> parts);

  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<CosetPart>& parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  const CosetPart& operator[](std::size_t i) const { return parts_[i]; }

  std::vector<std::size_t> indices() const;

 private:
  Alphabet alphabet_;
  std::vector<CosetPart> parts_;
};

/// Breadth-first exploration of the product automaton from the tuple of
/// basepoints over positive letters. Since every letter permutes every
/// factor, the reachable set is the orbit of the basepoint tuple under F_n.
struct ProductSpace {
  std::size_t width = 0;
  /// Flattened tuples in discovery order; tuple t is [t*width, (t+1)*width).
  std::vector<State> tuples;
  /// Breadth-first tree for word recovery (root has parent == itself).
  std::vector<std::uint32_t> parent;
  std::vector<std::uint32_t> via;

  std::size_t size() const { return width == 0 ? 0 : tuples.size() / width; }
  State coordinate(std::size_t tuple, std::size_t part) const { return tuples[tuple * width + part]; }
  /// Shortlex-minimal positive word reaching the tuple.
  Word word_to(std::size_t tuple, std::size_t rank) const;
};

/// Throws AlphabetMismatch on differing ranks and BoundExceeded if the
/// tuple space cannot be encoded in 64 bits.
ProductSpace explore_product(const std::vector<const SchreierGraph*>& graphs);

struct PartitionReport {
  bool valid = false;
  /// Shortest (then lex-least) positive word covered != 1 times.
  std::optional<Word> witness;
  std::size_t witness_coverage = 0;
  Rational density;
  bool multiplicity = false;
  std::size_t reachable_tuples = 0;
};

PartitionReport verify_partition(const CosetPartition& p);

/// Sum of 1/d_i.
Rational density_check(const CosetPartition& p);

/// True if two parts have equal index.
bool has_multiplicity(const CosetPartition& p);

struct PeriodAnalysis {
  std::vector<std::size_t> periods;
  /// m(0, f_i) mod h_i.
  std::vector<std::size_t> residues;
  /// Periods > 1 that occur, ascending.
  std::vector<std::size_t> hset;
  /// Number of parts with period h, for h in hset.
  std::map<std::size_t, std::size_t> repetitions;
  bool pairwise_coprime = true;
};

PeriodAnalysis analyze_periods(const CosetPartition& p);

/// Rows are parts (by index into the partition); entries are the limiting
/// proportions h_i / d_i placed at the residue columns of each part.
struct PeriodMatrix {
  std::vector<std::size_t> rows;
  RationalMatrix matrix;
};

/// One row per part of period h, h columns. Throws PeriodAbsent unless
/// h > 1 occurs as a period.
PeriodMatrix build_C_matrix(const CosetPartition& p, std::size_t h);

/// Parts of period h_small first, then parts of period h_large. By default
/// lcm(h_large, h_small) columns, since the pattern repeats with that
/// period; `full_width` gives 2 h_large h_small columns.
PeriodMatrix build_D_matrix(const CosetPartition& p, std::size_t h_large, std::size_t h_small, bool full_width = false);

struct PeriodClassReport {
  std::size_t h = 0;
  std::size_t r = 0;
  bool equals_h = false;
  /// h < r <= 2(h - 1)
  bool in_range = false;
  /// r <= 2(h - 1) without the lower bound, reported separately.
  bool at_most_twice_h_minus_one = false;
  PeriodMatrix c;
  std::vector<Rational> column_sums;
  /// sum over the class of 1/d_i
  Rational class_density;
  bool column_sums_uniform = false;
  /// Columns holding exactly one nonzero entry.
  std::size_t single_columns = 0;
  /// 2h - r <= single_columns <= h - 1, evaluated only when r > h.
  std::optional<bool> single_column_bound;
};

/// r >= h - (h / h') r' when the only periods > 1 are h' and h, h' | h.
struct DivisorBound {
  std::size_t h = 0;
  std::size_t h_small = 0;
  std::size_t r = 0;
  std::size_t r_small = 0;
  long bound = 0;
  bool holds = false;
};

struct Theorem1Report {
  PeriodAnalysis periods;
  bool all_indices_above_one = false;
  bool hset_nonempty = false;
  bool pairwise_coprime = false;
  /// Hypotheses gating the multiplicity prediction.
  bool applicable = false;
  std::vector<PeriodClassReport> classes;
  bool predicted_multiplicity = false;
  bool actual_multiplicity = false;
  /// Prediction made but indices all distinct.
  bool falsifier = false;
  /// r >= h when exactly one period > 1 occurs.
  std::optional<bool> single_period_bound;
  std::vector<DivisorBound> divisor_bounds;
};

/// Throws InvalidPartition if the partition does not verify.
Theorem1Report theorem1_analyze(const CosetPartition& p);

struct RepetitionReport {
  /// Largest period, if > 1, occurs at least twice.
  bool max_period_repeats = true;
  /// Every period > 1 that properly divides no other period repeats.
  bool maximal_periods_repeat = true;
  /// Every period equals or divides another part's period.
  bool each_divides_another = true;
  std::vector<std::string> violations;
  bool pass = true;
};

/// Throws InvalidPartition if the partition does not verify.
RepetitionReport period_repetition_checks(const CosetPartition& p);

struct GenfunIdentityReport {
  std::vector<RationalFunction> parts;
  RationalFunction sum = RationalFunction::from_polynomial(Polynomial());
  RationalFunction expected = RationalFunction::from_polynomial(Polynomial());
  bool exact_identity = false;
  std::size_t horizon = 0;
  bool coefficients_match = false;
  std::optional<std::size_t> first_mismatch;
  bool pass = false;
};

/// sum_i p_i(z) == 1 / (1 - n z) exactly, and sum_i a_{i,k} == n^k for k <= horizon.
GenfunIdentityReport genfun_identity_check(const CosetPartition& p, std::size_t horizon);

}  // namespace hsauto

#endif  // HSAUTO_PARTITION_HPP
