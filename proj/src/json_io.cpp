#include "hsauto/json_io.hpp"

#include <algorithm>
#include <limits>

#include "hsauto/error.hpp"

namespace hsauto {

namespace {

template <typename F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed ") + what + ": " + e.what());
  }
}

Json coeff_list(const Polynomial& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(bigint_to_json(c));
  if (out.empty()) out.push_back(0);
  return out;
}

Polynomial poly_from_json(const Json& j) {
  std::vector<BigInt> coeffs;
  for (const auto& c : j) coeffs.push_back(bigint_from_json(c));
  return Polynomial(std::move(coeffs));
}

Json size_list(const std::vector<std::size_t>& v) {
  Json out = Json::array();
  for (auto x : v) out.push_back(x);
  return out;
}

}  // namespace

Json bigint_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

BigInt bigint_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_number_unsigned()) return BigInt(j.get<std::uint64_t>());
  if (j.is_string()) {
    try {
      return BigInt(j.get<std::string>());
    } catch (const std::exception&) {
      throw ParseError("invalid integer string '" + j.get<std::string>() + "'");
    }
  }
  throw ParseError("expected an integer, got " + j.dump());
}

Json rational_to_json(const Rational& q) {
  return Json{{"num", bigint_to_json(numerator(q))}, {"den", bigint_to_json(denominator(q))}};
}

Rational rational_from_json(const Json& j) {
  return guarded("rational", [&] {
    const BigInt den = bigint_from_json(j.at("den"));
    if (den == 0) throw ParseError("rational with zero denominator");
    return Rational(bigint_from_json(j.at("num")), den);
  });
}

Json matrix_to_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols; ++j) row.push_back(rational_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json matrix_to_json(const TransitionMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.order(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.order(); ++j) row.push_back(bigint_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json rational_function_to_json(const RationalFunction& r) {
  return Json{{"num", coeff_list(r.numerator())}, {"den", coeff_list(r.denominator())}};
}

RationalFunction rational_function_from_json(const Json& j) {
  return guarded("rational function", [&] {
    Polynomial den = poly_from_json(j.at("den"));
    if (den.is_zero()) throw ParseError("rational function with zero denominator");
    return RationalFunction(poly_from_json(j.at("num")), std::move(den));
  });
}

Alphabet alphabet_from_json(const Json& j) {
  return guarded("alphabet", [&] { return Alphabet(j.get<std::vector<std::string>>()); });
}

SubgroupSpec subgroup_from_json(const Json& j) {
  return guarded("subgroup", [&] {
    Alphabet alphabet = alphabet_from_json(j.at("alphabet"));
    std::vector<Word> gens;
    for (const auto& g : j.at("generators")) gens.push_back(parse_word(g.get<std::string>(), alphabet));
    return SubgroupSpec{std::move(alphabet), std::move(gens)};
  });
}

Json graph_to_json(const SchreierGraph& g) {
  Json action = Json::object();
  for (std::size_t a = 0; a < g.rank(); ++a) action[g.alphabet().name(a)] = g.action()[a];
  return Json{{"d", g.index()}, {"action", action}};
}

SchreierGraph graph_from_json(const Json& j, const Alphabet& alphabet) {
  return guarded("graph", [&] {
    ActionTable table;
    for (const auto& name : alphabet.names()) table.push_back(j.at("action").at(name).get<std::vector<State>>());
    if (j.contains("d") && j.at("d").get<std::size_t>() != table[0].size())
      throw ParseError("graph 'd' disagrees with its action table");
    try {
      return SchreierGraph(alphabet, std::move(table));
    } catch (const InvalidGraph& e) {
      throw ParseError(std::string("invalid graph: ") + e.what());
    }
  });
}

CosetPartition partition_from_json(const Json& j) {
  return guarded("partition", [&] {
    Alphabet alphabet = alphabet_from_json(j.at("alphabet"));
    std::vector<std::pair<std::string, SchreierGraph>> subgroups;
    for (const auto& s : j.at("subgroups")) {
      const auto name = s.at("name").get<std::string>();
      for (const auto& [existing, g] : subgroups)
        if (existing == name) throw ParseError("duplicate subgroup name '" + name + "'");
      if (s.contains("generators")) {
        std::vector<Word> gens;
        for (const auto& g : s.at("generators")) gens.push_back(parse_word(g.get<std::string>(), alphabet));
        subgroups.emplace_back(name, build_schreier(gens, alphabet));
      } else {
        subgroups.emplace_back(name, canonicalize(graph_from_json(s, alphabet)));
      }
    }
    std::vector<CosetPart> parts;
    for (const auto& p : j.at("parts")) {
      const auto name = p.at("subgroup").get<std::string>();
      auto it = std::find_if(subgroups.begin(), subgroups.end(), [&](const auto& s) { return s.first == name; });
      if (it == subgroups.end()) throw ParseError("part refers to unknown subgroup '" + name + "'");
      parts.push_back(CosetPart::from_rep(name, it->second, parse_word(p.value("rep", ""), alphabet)));
    }
    return CosetPartition(std::move(alphabet), std::move(parts));
  });
}

Json partition_to_json(const CosetPartition& p) {
  const auto& alphabet = p.alphabet();
  Json subgroups = Json::array();
  std::vector<std::string> seen;
  for (const auto& part : p.parts()) {
    if (std::find(seen.begin(), seen.end(), part.subgroup) != seen.end()) continue;
    seen.push_back(part.subgroup);
    Json gens = Json::array();
    for (const auto& w : schreier_generators(part.graph)) gens.push_back(to_string(w, alphabet));
    Json s = graph_to_json(part.graph);
    s["name"] = part.subgroup;
    s["generators"] = gens;
    subgroups.push_back(std::move(s));
  }
  Json parts = Json::array();
  for (const auto& part : p.parts())
    parts.push_back({{"subgroup", part.subgroup}, {"rep", to_string(part.rep, alphabet)}, {"accept", part.accept}});
  return Json{{"alphabet", alphabet.names()}, {"subgroups", subgroups}, {"parts", parts}};
}

Json to_json(const PartitionReport& r, const Alphabet& alphabet) {
  Json j{{"valid", r.valid},
         {"density", rational_to_json(r.density)},
         {"multiplicity", r.multiplicity},
         {"reachable_tuples", r.reachable_tuples}};
  if (r.witness) {
    j["witness"] = to_string(*r.witness, alphabet);
    j["witness_coverage"] = r.witness_coverage;
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

Json to_json(const PeriodMatrix& m) { return Json{{"rows", size_list(m.rows)}, {"matrix", matrix_to_json(m.matrix)}}; }

Json to_json(const Theorem1Report& r) {
  Json classes = Json::array();
  for (const auto& c : r.classes) {
    Json sums = Json::array();
    for (const auto& s : c.column_sums) sums.push_back(rational_to_json(s));
    Json cls{{"h", c.h},
             {"r", c.r},
             {"r_equals_h", c.equals_h},
             {"h_lt_r_le_2h_minus_2", c.in_range},
             {"r_le_2h_minus_2", c.at_most_twice_h_minus_one},
             {"C", to_json(c.c)},
             {"column_sums", sums},
             {"class_density", rational_to_json(c.class_density)},
             {"column_sums_uniform", c.column_sums_uniform},
             {"single_columns", c.single_columns}};
    cls["single_column_bound"] = c.single_column_bound ? Json(*c.single_column_bound) : Json(nullptr);
    classes.push_back(std::move(cls));
  }
  Json bounds = Json::array();
  for (const auto& b : r.divisor_bounds)
    bounds.push_back({{"h", b.h}, {"h_small", b.h_small}, {"r", b.r}, {"r_small", b.r_small}, {"bound", b.bound}, {"holds", b.holds}});
  Json reps = Json::object();
  for (const auto& [h, n] : r.periods.repetitions) reps[std::to_string(h)] = n;
  Json j{{"periods", size_list(r.periods.periods)},
         {"residues", size_list(r.periods.residues)},
         {"hset", size_list(r.periods.hset)},
         {"repetitions", reps},
         {"all_indices_above_one", r.all_indices_above_one},
         {"hset_nonempty", r.hset_nonempty},
         {"pairwise_coprime", r.pairwise_coprime},
         {"applicable", r.applicable},
         {"classes", classes},
         {"predicted_multiplicity", r.predicted_multiplicity},
         {"actual_multiplicity", r.actual_multiplicity},
         {"falsifier", r.falsifier},
         {"divisor_bounds", bounds}};
  j["single_period_bound"] = r.single_period_bound ? Json(*r.single_period_bound) : Json(nullptr);
  return j;
}

Json to_json(const RepetitionReport& r) {
  return Json{{"max_period_repeats", r.max_period_repeats},
              {"maximal_periods_repeat", r.maximal_periods_repeat},
              {"each_divides_another", r.each_divides_another},
              {"violations", r.violations},
              {"pass", r.pass}};
}

Json to_json(const GenfunIdentityReport& r) {
  Json parts = Json::array();
  for (const auto& p : r.parts) parts.push_back(rational_function_to_json(p));
  Json j{{"parts", parts},
         {"sum", rational_function_to_json(r.sum)},
         {"expected", rational_function_to_json(r.expected)},
         {"exact_identity", r.exact_identity},
         {"horizon", r.horizon},
         {"coefficients_match", r.coefficients_match},
         {"pass", r.pass}};
  j["first_mismatch"] = r.first_mismatch ? Json(*r.first_mismatch) : Json(nullptr);
  return j;
}

Json to_json(const LimitReport& r) {
  Json cells = Json::array();
  for (const auto& c : r.cells)
    cells.push_back({{"row", c.row},
                     {"col", c.col},
                     {"zero_pattern_ok", c.zero_pattern_ok},
                     {"value", rational_to_json(c.value)},
                     {"deviation", rational_to_json(c.deviation)},
                     {"pass", c.pass}});
  return Json{{"d", r.d},
              {"h", r.h},
              {"horizon", r.horizon},
              {"tolerance", rational_to_json(r.tolerance)},
              {"expected", rational_to_json(r.expected)},
              {"cells", cells},
              {"pass", r.pass}};
}

Json to_json(const SearchReport& r) {
  Json counts = Json::object();
  for (const auto& [d, n] : r.subgroup_counts) counts[std::to_string(d)] = n;
  Json multisets = Json::array();
  for (const auto& m : r.multisets)
    multisets.push_back({{"indices", size_list(m.indices)},
                         {"tuples", m.tuples},
                         {"partitions", m.partitions},
                         {"counterexamples", m.counterexamples}});
  auto found_list = [](const std::vector<FoundPartition>& list) {
    Json out = Json::array();
    for (const auto& f : list) {
      Json p = partition_to_json(f.partition);
      p["indices"] = size_list(f.partition.indices());
      p["tuple"] = f.tuple;
      out.push_back(std::move(p));
    }
    return out;
  };
  return Json{{"rank", r.rank},
              {"subgroup_counts", counts},
              {"multisets", multisets},
              {"tuples_total", r.tuples_total},
              {"tuples_done", r.tuples_done},
              {"complete", r.complete},
              {"verification_failures", r.verification_failures},
              {"partition_count", r.partitions.size()},
              {"counterexample_count", r.counterexamples.size()},
              {"partitions", found_list(r.partitions)},
              {"counterexamples", found_list(r.counterexamples)}};
}

}  // namespace hsauto
