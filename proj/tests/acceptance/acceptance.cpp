// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>

#include "hsauto/error.hpp"
#include "hsauto/json_io.hpp"
#include "hsauto/oracle.hpp"
#include "hsauto/partition.hpp"
#include "hsauto/search.hpp"
#include "hsauto/spectral.hpp"
#include "support/fixtures.hpp"

using namespace hsauto;
using namespace hsauto::testing;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void criterion(const std::string& id, const std::string& title, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  if (!o.pass) ++failures;
  std::printf("%-4s %-4s %s | %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", id.c_str(), title.c_str(), o.detail.c_str(),
              seconds_since(start));
  std::fflush(stdout);
}

template <typename... Args>
std::string fmt(Args&&... args) {
  std::ostringstream out;
  (out << ... << args);
  return out.str();
}

TransitionMatrix matrix(std::size_t d, std::initializer_list<long> e) {
  std::vector<BigInt> v;
  for (long x : e) v.emplace_back(x);
  return TransitionMatrix(d, v);
}

std::vector<Rational> row(std::initializer_list<int> v) {
  std::vector<Rational> out;
  for (int x : v) out.emplace_back(x);
  return out;
}

std::vector<SchreierGraph> subgroups_between(const Alphabet& alphabet, std::size_t lo, std::size_t hi) {
  std::vector<SchreierGraph> out;
  for (std::size_t d = lo; d <= hi; ++d)
    for (auto& g : enumerate_subgroups(alphabet, d)) out.push_back(std::move(g));
  return out;
}

Outcome example_graph() {
  const auto start = Clock::now();
  SchreierGraph k = build_schreier(words({"a^4", "b^4", "aB", "aaBB", "aaaBBB"}), ab());
  TransitionMatrix a = TransitionMatrix::from_graph(k);
  const std::size_t h = period(a);
  const double t = seconds_since(start);
  const bool ok = k.index() == 4 && a == matrix(4, {0, 2, 0, 0, 0, 0, 2, 0, 0, 0, 0, 2, 2, 0, 0, 0}) && h == 4 && t < 1.0;
  return {ok, fmt("d=", k.index(), " period=", h, " matrix ", (ok ? "exact" : "differs"))};
}

Outcome example_partition() {
  CosetPartition p = partition_H_Ka_Ka3();
  PartitionReport r = verify_partition(p);
  PeriodAnalysis pa = analyze_periods(p);
  PeriodMatrix d = build_D_matrix(p, 4, 2);
  const bool d_ok = d.matrix.rows == 3 && d.matrix.cols == 4 &&
                    d.matrix.entries == row({1, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1});
  const bool ok = r.valid && pa.periods == std::vector<std::size_t>{2, 4, 4} && d_ok;
  return {ok, fmt("valid=", r.valid, " periods=(", pa.periods[0], ",", pa.periods[1], ",", pa.periods[2], ") D ",
                  (d_ok ? "exact" : "differs"))};
}

Outcome genfun_identity() {
  const auto start = Clock::now();
  CosetPartition p = partition_H_Ka_Ka3();
  GenfunIdentityReport r = genfun_identity_check(p, 20);
  // independent coefficient sum from the series of each part
  bool coeffs = true;
  std::vector<BigInt> total(21);
  for (const auto& part : p.parts()) {
    auto s = series_coeffs(generating_function(part.automaton()), 20);
    for (std::size_t k = 0; k <= 20; ++k) total[k] += s[k];
  }
  for (std::size_t k = 0; k <= 20; ++k) coeffs = coeffs && total[k] == pow(BigInt(2), static_cast<unsigned>(k));
  const double t = seconds_since(start);
  const bool ok = r.exact_identity && r.coefficients_match && coeffs && t < 1.0;
  return {ok, fmt("sum = ", to_string(r.sum), ", exact=", r.exact_identity, ", coefficients k<=20 ",
                  (coeffs && r.coefficients_match ? "match 2^k" : "differ"))};
}

Outcome limit_properties() {
  std::size_t graphs = 0, bad = 0, literal_exceptions = 0;
  for (std::size_t d = 1; d <= 5; ++d)
    for (const auto& g : enumerate_subgroups(ab(), d)) {
      ++graphs;
      TransitionMatrix a = TransitionMatrix::from_graph(g);
      const std::size_t h = period(a);
      bool ok = d % h == 0;

      RationalMatrix b = build_B_matrix(g);
      ok = ok && b.nonzeros_per_row() == std::vector<std::size_t>(d, 1);
      ok = ok && b.column_sums() == std::vector<Rational>(h, Rational(1));
      ok = ok && b.nonzeros_per_column() == std::vector<std::size_t>(h, d / h);

      // mismatched residue => zero for every k <= 4dh; matching residue =>
      // nonzero on the upper half of the horizon
      const std::size_t horizon = 4 * d * h;
      MinExponents m = min_exponents(a);
      TransitionMatrix p = TransitionMatrix::identity(d);
      for (std::size_t k = 0; k <= horizon; ++k) {
        for (std::size_t i = 0; i < d; ++i)
          for (std::size_t j = 0; j < d; ++j) {
            const bool residue = k % h == m(i, j) % h;
            const bool zero = p(i, j) == 0;
            if (!residue && !zero) ok = false;
            if (residue && zero) {
              ++literal_exceptions;
              if (2 * k > horizon) ok = false;
            }
          }
        p = p * a;
      }
      if (!ok) ++bad;
    }
  return {bad == 0 && graphs == 549,
          fmt(graphs, " subgroups, ", bad, " violations; zero entries at matching residues below the half horizon: ",
              literal_exceptions)};
}

Outcome oracle_equivalence() {
  std::size_t cosets = 0, count_bad = 0;
  for (std::size_t d = 1; d <= 4; ++d)
    for (const auto& g : enumerate_subgroups(ab(), d)) {
      TransitionMatrix a = TransitionMatrix::from_graph(g);
      for (State f = 0; f < d; ++f) {
        ++cosets;
        auto brute = oracle::brute_count({g.action(), f}, 10);
        for (std::size_t k = 0; k <= 10; ++k)
          if (count_words(a, 0, f, k) != brute[k]) {
            ++count_bad;
            break;
          }
      }
    }

  std::size_t verify_bad = 0, valid_seen = 0, invalid_seen = 0;
  auto compare = [&](const CosetPartition& p, bool expect_valid) {
    PartitionReport r = verify_partition(p);
    oracle::PartitionCheck brute = oracle::brute_partition_check(to_oracle(p), 8);
    bool agree = r.valid == brute.ok && r.valid == expect_valid;
    if (!r.valid)
      agree = agree && r.witness && *r.witness == Word::positive(p.alphabet().rank(), brute.failure) &&
              r.witness_coverage == brute.coverage;
    (r.valid ? valid_seen : invalid_seen) += 1;
    if (!agree) ++verify_bad;
  };

  compare(partition_H_Ka_Ka3(), true);
  std::vector<SchreierGraph> pool = subgroups_between(ab(), 2, 5);
  std::mt19937 rng(4242);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int i = 0; i < 100; ++i) {
    const SchreierGraph& g = pool[pick(rng)];
    std::vector<CosetPart> parts;
    for (State s = 0; s < g.index(); ++s) parts.push_back(CosetPart::from_state("S", g, s));
    std::shuffle(parts.begin(), parts.end(), rng);
    if (i % 2 == 0) {
      compare(CosetPartition(ab(), parts), true);
      continue;
    }
    const std::size_t at = pick(rng) % parts.size();
    switch (i / 2 % 3) {
      case 0: parts.erase(parts.begin() + static_cast<long>(at)); break;
      case 1: parts.push_back(parts[at]); break;
      default: parts[at] = CosetPart::from_state("S", g, (parts[at].accept + 1) % g.index()); break;
    }
    compare(CosetPartition(ab(), parts), false);
  }
  const bool ok = count_bad == 0 && verify_bad == 0 && valid_seen == 51 && invalid_seen == 50;
  return {ok, fmt(cosets, " cosets counted to length 10 (", count_bad, " mismatches); ", valid_seen, " valid + ",
                  invalid_seen, " invalid partitions checked to length 8 (", verify_bad, " disagreements)")};
}

struct Corpus {
  std::size_t sets = 0;
  std::vector<CosetPartition> partitions;
};

const Corpus& corpus() {
  static const Corpus c = [] {
    Corpus out;
    std::vector<SchreierGraph> pool = subgroups_between(ab(), 2, 4);
    auto add = [&](std::vector<SchreierGraph> subs) {
      ++out.sets;
      for (auto& p : find_partitions(subs)) out.partitions.push_back(std::move(p));
    };
    for (std::size_t i = 0; i < pool.size(); ++i)
      for (std::size_t j = i + 1; j < pool.size(); ++j) {
        add({pool[i], pool[j]});
        for (std::size_t k = j + 1; k < pool.size(); ++k) add({pool[i], pool[j], pool[k]});
      }
    return out;
  }();
  return c;
}

Outcome period_repetition() {
  const Corpus& c = corpus();
  std::size_t violations = 0, invalid = 0;
  for (const auto& p : c.partitions) {
    if (!verify_partition(p).valid) {
      ++invalid;
      continue;
    }
    if (!period_repetition_checks(p).pass) ++violations;
  }
  return {violations == 0 && invalid == 0 && !c.partitions.empty(),
          fmt(c.sets, " subgroup pairs/triples, ", c.partitions.size(), " partitions, ", violations, " violations")};
}

Outcome multiplicity_soundness() {
  const Corpus& c = corpus();
  std::size_t applicable = 0, predicted = 0, falsifiers = 0;
  for (const auto& p : c.partitions) {
    Theorem1Report t = theorem1_analyze(p);
    applicable += t.applicable;
    predicted += t.predicted_multiplicity;
    // recomputed from the raw indices
    auto idx = p.indices();
    std::sort(idx.begin(), idx.end());
    const bool multiplicity = std::adjacent_find(idx.begin(), idx.end()) != idx.end();
    if (t.falsifier || (t.predicted_multiplicity && !multiplicity) || t.actual_multiplicity != multiplicity)
      ++falsifiers;
  }
  return {falsifiers == 0, fmt(c.partitions.size(), " partitions, ", applicable, " with hypotheses met, ", predicted,
                               " predictions, ", falsifiers, " falsifiers")};
}

struct TimedSearch {
  SearchReport report;
  double seconds = 0;
};

TimedSearch timed_search(std::size_t shards, std::size_t threads) {
  SearchConfig cfg;
  cfg.rank = 2;
  cfg.indices = {2, 3, 6};
  cfg.shards = shards;
  cfg.threads = threads;
  const auto start = Clock::now();
  TimedSearch t{search_counterexamples(cfg), 0};
  t.seconds = seconds_since(start);
  return t;
}

std::size_t parallel_threads() { return std::max<std::size_t>(2, std::thread::hardware_concurrency()); }

TimedSearch& single_search() {
  static TimedSearch t = timed_search(1, 1);
  return t;
}

TimedSearch& parallel_search() {
  static TimedSearch t = timed_search(4 * parallel_threads(), parallel_threads());
  return t;
}

Outcome desk_search() {
  const TimedSearch& one = single_search();
  const TimedSearch& many = parallel_search();
  const SearchReport& r = one.report;
  const bool counts = r.subgroup_counts.at(2) == 3 && r.subgroup_counts.at(3) == 13 && r.subgroup_counts.at(6) == 3447;
  const bool identical = to_json(one.report) == to_json(many.report);
  const bool ok = counts && r.complete && r.tuples_total == 3ull * 13 * 3447 && r.tuples_done == r.tuples_total &&
                  r.counterexamples.empty() && r.verification_failures == 0 && one.seconds <= 600 && identical;
  return {ok, fmt(r.tuples_done, "/", r.tuples_total, " triples, ", r.partitions.size(), " partitions, ",
                  r.counterexamples.size(), " distinct-index partitions, single-threaded ", one.seconds,
                  " s, sharded report ", (identical ? "identical" : "differs"))};
}

Outcome parallel_speedup() {
  const TimedSearch& one = single_search();
  const TimedSearch& many = parallel_search();
  const double speedup = one.seconds / many.seconds;
  const unsigned hw = std::thread::hardware_concurrency();
  return {speedup >= 1.2, fmt("speedup ", speedup, " with ", parallel_threads(), " threads (", one.seconds, " s vs ",
                              many.seconds, " s); hardware threads: ", hw, "; required >= 1.2")};
}

Outcome integers() {
  const auto start = Clock::now();
  SearchConfig cfg;
  cfg.rank = 1;
  cfg.max_index = 12;
  cfg.distinct_only = false;
  SearchReport all = search_counterexamples(cfg);
  cfg.distinct_only = true;
  SearchReport distinct = search_counterexamples(cfg);

  std::size_t largest_unrepeated = 0;
  for (const auto& f : all.partitions) {
    auto idx = f.partition.indices();
    std::sort(idx.begin(), idx.end());
    if (idx.size() < 2 || idx[idx.size() - 1] != idx[idx.size() - 2]) ++largest_unrepeated;
  }
  std::size_t period_bad = 0;
  const Alphabet z({"a"});
  for (std::size_t d = 1; d <= 12; ++d)
    for (const auto& g : enumerate_subgroups(z, d))
      if (period(TransitionMatrix::from_graph(g)) != d) ++period_bad;
  const double t = seconds_since(start);
  const bool ok = all.complete && distinct.complete && all.counterexamples.empty() &&
                  distinct.counterexamples.empty() && distinct.partitions.empty() && largest_unrepeated == 0 &&
                  period_bad == 0 && !all.partitions.empty() && t < 60;
  return {ok, fmt(all.multisets.size(), " multisets, ", all.partitions.size(), " covers, ",
                  all.counterexamples.size() + distinct.counterexamples.size(), " distinct-index covers, ",
                  largest_unrepeated, " with unrepeated largest index, ", period_bad, " period != d")};
}

Outcome enumeration_counts() {
  const auto start = Clock::now();
  const std::size_t expected[] = {1, 3, 13, 71, 461, 3447};
  std::ostringstream counts;
  bool ok = true;
  for (std::size_t d = 1; d <= 6; ++d) {
    std::size_t n = 0;
    for_each_subgroup(ab(), d, [&](const SchreierGraph&) { ++n; });
    ok = ok && n == expected[d - 1] && BigInt(n) == oracle::hall_count(2, d);
    counts << (d > 1 ? "," : "") << n;
  }
  ok = ok && seconds_since(start) < 60;
  return {ok, "counts " + counts.str()};
}

}  // namespace

int main() {
  criterion("1", "index-4 example subgroup: d, transition matrix, period", example_graph);
  criterion("2", "H, Ka, Ka^3 partition: validity, periods, D matrix", example_partition);
  criterion("3", "generating-function identity for H, Ka, Ka^3", genfun_identity);
  criterion("4", "period, B-matrix and power zero-pattern properties, index <= 5", limit_properties);
  criterion("5", "matrix counts and partition verification vs brute force", oracle_equivalence);
  criterion("6", "period repetition on partitions from subgroup pairs/triples, index <= 4", period_repetition);
  criterion("7", "multiplicity analyzer soundness on the same corpus", multiplicity_soundness);
  criterion("8a", "rank-2 search over {2,3,6}: complete, zero finds, shard-invariant", desk_search);
  criterion("8b", "rank-2 search over {2,3,6}: parallel speedup", parallel_speedup);
  criterion("9", "rank-1 covers up to index 12", integers);
  criterion("10", "subgroup enumeration counts, index 1..6", enumeration_counts);
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
