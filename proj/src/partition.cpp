#include "hsauto/partition.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "hsauto/error.hpp"
#include "hsauto/spectral.hpp"

namespace hsauto {

namespace {

/// Distinct graphs of a partition and, per part, the slot of its graph.
struct GraphSlots {
  std::vector<const SchreierGraph*> graphs;
  std::vector<std::size_t> slot_of_part;
};

GraphSlots distinct_graphs(const CosetPartition& p) {
  GraphSlots out;
  for (const auto& part : p.parts()) {
    auto it = std::find_if(out.graphs.begin(), out.graphs.end(),
                           [&](const SchreierGraph* g) { return *g == part.graph; });
    if (it == out.graphs.end()) {
      out.slot_of_part.push_back(out.graphs.size());
      out.graphs.push_back(&part.graph);
    } else {
      out.slot_of_part.push_back(static_cast<std::size_t>(it - out.graphs.begin()));
    }
  }
  return out;
}

void require_valid(const CosetPartition& p) {
  const auto report = verify_partition(p);
  if (!report.valid) throw InvalidPartition("coset list does not partition the free group");
}

Rational part_density(const CosetPartition& p, const std::vector<std::size_t>& rows) {
  Rational sum = 0;
  for (auto i : rows) sum += Rational(1, static_cast<long>(p[i].index()));
  return sum;
}

}  // namespace

CosetPart CosetPart::from_rep(std::string subgroup, SchreierGraph graph, Word rep) {
  const State accept = walk(graph, 0, rep);
  return CosetPart{std::move(subgroup), std::move(graph), accept, std::move(rep)};
}

CosetPart CosetPart::from_state(std::string subgroup, SchreierGraph graph, State accept) {
  if (accept >= graph.index()) throw std::invalid_argument("accept state out of range");
  Word rep = coset_reps(graph).reps[accept];
  return CosetPart{std::move(subgroup), std::move(graph), accept, std::move(rep)};
}

CosetPartition::CosetPartition(Alphabet alphabet, std::vector<CosetPart> parts)
    : alphabet_(std::move(alphabet)), parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("a partition needs at least one part");
  for (const auto& part : parts_) {
    if (!(part.graph.alphabet() == alphabet_))
      throw AlphabetMismatch("part '" + part.subgroup + "' uses a different alphabet");
    if (part.accept >= part.graph.index()) throw std::invalid_argument("accept state out of range");
  }
}

std::vector<std::size_t> CosetPartition::indices() const {
  std::vector<std::size_t> out;
  for (const auto& part : parts_) out.push_back(part.index());
  return out;
}

Word ProductSpace::word_to(std::size_t tuple, std::size_t rank) const {
  std::vector<std::uint32_t> gens;
  for (std::size_t t = tuple; parent[t] != t; t = parent[t]) gens.push_back(via[t]);
  std::reverse(gens.begin(), gens.end());
  return Word::positive(rank, gens);
}

ProductSpace explore_product(const std::vector<const SchreierGraph*>& graphs) {
  ProductSpace space;
  space.width = graphs.size();
  if (graphs.empty()) return space;
  const std::size_t rank = graphs[0]->rank();

  std::vector<std::uint64_t> radix(graphs.size());
  std::uint64_t scale = 1;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (graphs[i]->rank() != rank) throw AlphabetMismatch("product of graphs over different alphabets");
    radix[i] = scale;
    const std::uint64_t d = graphs[i]->index();
    if (scale > std::numeric_limits<std::uint64_t>::max() / d)
      throw BoundExceeded("product state space does not fit in 64 bits");
    scale *= d;
  }

  std::unordered_map<std::uint64_t, std::uint32_t> seen;
  std::vector<State> current(graphs.size(), 0);
  auto encode = [&](const State* t) {
    std::uint64_t code = 0;
    for (std::size_t i = 0; i < graphs.size(); ++i) code += radix[i] * t[i];
    return code;
  };

  space.tuples.assign(graphs.size(), 0);
  space.parent.push_back(0);
  space.via.push_back(0);
  seen.emplace(0, 0);
  for (std::size_t head = 0; head < space.size(); ++head) {
    for (std::size_t a = 0; a < rank; ++a) {
      for (std::size_t i = 0; i < graphs.size(); ++i) current[i] = graphs[i]->target(a, space.coordinate(head, i));
      const auto [it, fresh] = seen.emplace(encode(current.data()), static_cast<std::uint32_t>(space.size()));
      if (!fresh) continue;
      space.tuples.insert(space.tuples.end(), current.begin(), current.end());
      space.parent.push_back(static_cast<std::uint32_t>(head));
      space.via.push_back(static_cast<std::uint32_t>(a));
    }
  }
  return space;
}

PartitionReport verify_partition(const CosetPartition& p) {
  const auto slots = distinct_graphs(p);
  const auto space = explore_product(slots.graphs);

  PartitionReport report;
  report.density = density_check(p);
  report.multiplicity = has_multiplicity(p);
  report.reachable_tuples = space.size();
  report.valid = true;
  for (std::size_t t = 0; t < space.size(); ++t) {
    std::size_t coverage = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
      if (space.coordinate(t, slots.slot_of_part[i]) == p[i].accept) ++coverage;
    if (coverage != 1) {
      report.valid = false;
      report.witness = space.word_to(t, p.alphabet().rank());
      report.witness_coverage = coverage;
      break;
    }
  }
  return report;
}

Rational density_check(const CosetPartition& p) {
  Rational sum = 0;
  for (const auto& part : p.parts()) sum += Rational(1, static_cast<long>(part.index()));
  return sum;
}

bool has_multiplicity(const CosetPartition& p) {
  auto idx = p.indices();
  std::sort(idx.begin(), idx.end());
  return std::adjacent_find(idx.begin(), idx.end()) != idx.end();
}

PeriodAnalysis analyze_periods(const CosetPartition& p) {
  PeriodAnalysis out;
  for (const auto& part : p.parts()) {
    const auto a = TransitionMatrix::from_graph(part.graph);
    const std::size_t h = period(a);
    const auto m = min_exponents(a);
    out.periods.push_back(h);
    out.residues.push_back(m(0, part.accept) % h);
    if (h > 1) ++out.repetitions[h];
  }
  for (const auto& [h, r] : out.repetitions) out.hset.push_back(h);
  for (std::size_t i = 0; i < out.hset.size(); ++i)
    for (std::size_t j = i + 1; j < out.hset.size(); ++j)
      if (std::gcd(out.hset[i], out.hset[j]) != 1) out.pairwise_coprime = false;
  return out;
}

namespace {

PeriodMatrix period_matrix(const CosetPartition& p, const PeriodAnalysis& pa, const std::vector<std::size_t>& hs,
                           std::size_t width) {
  PeriodMatrix out;
  for (auto h : hs) {
    if (h <= 1 || !pa.repetitions.contains(h)) throw PeriodAbsent("no part has period " + std::to_string(h));
    for (std::size_t i = 0; i < p.size(); ++i)
      if (pa.periods[i] == h) out.rows.push_back(i);
  }
  out.matrix = RationalMatrix(out.rows.size(), width);
  for (std::size_t r = 0; r < out.rows.size(); ++r) {
    const std::size_t i = out.rows[r];
    const std::size_t h = pa.periods[i];
    const Rational value(static_cast<long>(h), static_cast<long>(p[i].index()));
    for (std::size_t col = pa.residues[i]; col < width; col += h) out.matrix(r, col) = value;
  }
  return out;
}

}  // namespace

PeriodMatrix build_C_matrix(const CosetPartition& p, std::size_t h) {
  return period_matrix(p, analyze_periods(p), {h}, h);
}

PeriodMatrix build_D_matrix(const CosetPartition& p, std::size_t h_large, std::size_t h_small, bool full_width) {
  if (h_small >= h_large) throw std::invalid_argument("D matrix needs h_small < h_large");
  const std::size_t width = full_width ? 2 * h_large * h_small : std::lcm(h_large, h_small);
  return period_matrix(p, analyze_periods(p), {h_small, h_large}, width);
}

Theorem1Report theorem1_analyze(const CosetPartition& p) {
  require_valid(p);
  Theorem1Report report;
  report.periods = analyze_periods(p);
  const auto& pa = report.periods;
  const auto idx = p.indices();
  report.all_indices_above_one = std::all_of(idx.begin(), idx.end(), [](std::size_t d) { return d > 1; });
  report.hset_nonempty = !pa.hset.empty();
  report.pairwise_coprime = pa.pairwise_coprime;
  report.applicable = report.all_indices_above_one && report.hset_nonempty && report.pairwise_coprime;
  report.actual_multiplicity = has_multiplicity(p);

  bool condition = false;
  for (auto h : pa.hset) {
    PeriodClassReport cls;
    cls.h = h;
    cls.r = pa.repetitions.at(h);
    cls.equals_h = cls.r == h;
    cls.in_range = h < cls.r && cls.r <= 2 * (h - 1);
    cls.at_most_twice_h_minus_one = cls.r <= 2 * (h - 1);
    cls.c = period_matrix(p, pa, {h}, h);
    cls.column_sums = cls.c.matrix.column_sums();
    cls.class_density = part_density(p, cls.c.rows);
    cls.column_sums_uniform =
        std::all_of(cls.column_sums.begin(), cls.column_sums.end(), [&](const Rational& s) { return s == cls.class_density; });
    const auto per_column = cls.c.matrix.nonzeros_per_column();
    cls.single_columns = static_cast<std::size_t>(std::count(per_column.begin(), per_column.end(), 1));
    if (cls.r > h)
      cls.single_column_bound = static_cast<long>(cls.single_columns) >= 2 * static_cast<long>(h) - static_cast<long>(cls.r) &&
                                cls.single_columns <= h - 1;
    condition = condition || cls.equals_h || cls.in_range;
    report.classes.push_back(std::move(cls));
  }

  report.predicted_multiplicity = report.applicable && condition;
  report.falsifier = report.predicted_multiplicity && !report.actual_multiplicity;
  if (pa.hset.size() == 1 && report.all_indices_above_one)
    report.single_period_bound = pa.repetitions.at(pa.hset[0]) >= pa.hset[0];

  // the bound compares exactly two periods, one dividing the other
  if (pa.hset.size() == 2) {
    const std::size_t hs = pa.hset[0], h = pa.hset[1];
    if (h % hs == 0) {
      DivisorBound b;
      b.h = h;
      b.h_small = hs;
      b.r = pa.repetitions.at(h);
      b.r_small = pa.repetitions.at(hs);
      b.bound = static_cast<long>(h) - static_cast<long>(h / hs) * static_cast<long>(b.r_small);
      b.holds = static_cast<long>(b.r) >= b.bound;
      report.divisor_bounds.push_back(b);
    }
  }
  return report;
}

RepetitionReport period_repetition_checks(const CosetPartition& p) {
  require_valid(p);
  const auto pa = analyze_periods(p);
  const auto& hs = pa.periods;
  RepetitionReport report;

  auto count = [&](std::size_t h) { return static_cast<std::size_t>(std::count(hs.begin(), hs.end(), h)); };
  const std::size_t hmax = *std::max_element(hs.begin(), hs.end());
  if (hmax > 1 && count(hmax) < 2) {
    report.max_period_repeats = false;
    report.violations.push_back("maximal period " + std::to_string(hmax) + " occurs once");
  }
  for (std::size_t i = 0; i < hs.size(); ++i) {
    const std::size_t h = hs[i];
    bool divides_other = false;
    bool properly_divides = false;
    for (std::size_t j = 0; j < hs.size(); ++j) {
      if (j == i) continue;
      if (hs[j] % h == 0) divides_other = true;
      if (hs[j] != h && hs[j] % h == 0) properly_divides = true;
    }
    if (!divides_other) {
      report.each_divides_another = false;
      report.violations.push_back("period " + std::to_string(h) + " of part " + std::to_string(i) +
                                  " neither equals nor divides another period");
    }
    if (h > 1 && !properly_divides && count(h) < 2) {
      report.maximal_periods_repeat = false;
      report.violations.push_back("period " + std::to_string(h) + " divides no other period and occurs once");
    }
  }
  report.pass = report.violations.empty();
  return report;
}

GenfunIdentityReport genfun_identity_check(const CosetPartition& p, std::size_t horizon) {
  GenfunIdentityReport report;
  report.horizon = horizon;
  const BigInt n = p.alphabet().rank();
  report.expected = RationalFunction(Polynomial::constant(1), Polynomial(std::vector<BigInt>{1, -n}));
  for (const auto& part : p.parts()) {
    report.parts.push_back(generating_function(part.automaton()));
    report.sum = report.sum + report.parts.back();
  }
  report.exact_identity = (report.sum - report.expected).is_zero();

  std::vector<TransitionMatrix> matrices, powers;
  for (const auto& part : p.parts()) {
    matrices.push_back(TransitionMatrix::from_graph(part.graph));
    powers.push_back(TransitionMatrix::identity(part.index()));
  }
  report.coefficients_match = true;
  BigInt nk = 1;
  for (std::size_t k = 0; k <= horizon; ++k) {
    BigInt total = 0;
    for (std::size_t i = 0; i < p.size(); ++i) total += powers[i](0, p[i].accept);
    if (total != nk) {
      report.coefficients_match = false;
      report.first_mismatch = k;
      break;
    }
    for (std::size_t i = 0; i < p.size(); ++i) powers[i] = powers[i] * matrices[i];
    nk *= n;
  }
  report.pass = report.exact_identity && report.coefficients_match;
  return report;
}

}  // namespace hsauto
