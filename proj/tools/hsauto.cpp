// hsauto: build Schreier graphs, verify and analyze coset partitions of free
// groups, and search small instances for distinct-index partitions.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hsauto/error.hpp"
#include "hsauto/json_io.hpp"
#include "hsauto/oracle.hpp"
#include "hsauto/partition.hpp"
#include "hsauto/schreier.hpp"
#include "hsauto/search.hpp"
#include "hsauto/spectral.hpp"

namespace {

using namespace hsauto;

constexpr const char* kVersion = "0.3.0";

enum ExitCode : int {
  kOk = 0,
  kInvalidInput = 1,
  kInfiniteIndex = 2,
  kInvalidPartition = 3,
  kCounterexample = 4,
  kResourceBound = 5,
};

struct Manifest {
  std::string command;
  std::vector<std::string> inputs;
  std::string output;
  Json flags = Json::object();

  Json to_json() const {
    return Json{{"tool", "hsauto"}, {"version", kVersion}, {"command", command}, {"inputs", inputs}, {"output", output}, {"flags", flags}};
  }
};

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("'" + path + "' is not valid JSON: " + e.what());
  }
}

void emit(const Json& report, const std::string& output) {
  const std::string text = report.dump(2) + "\n";
  if (output.empty() || output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(output);
  if (!out) throw ParseError("cannot write '" + output + "'");
  out << text;
}

std::size_t env_threads() {
  if (const char* v = std::getenv("HSAUTO_THREADS")) {
    try {
      const long n = std::stol(v);
      if (n > 0) return static_cast<std::size_t>(n);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

Json build_summary(const SchreierGraph& g) {
  const auto a = TransitionMatrix::from_graph(g);
  const auto h = period(a);
  const auto m = min_exponents(a);
  Json m_row = Json::array();
  for (std::size_t j = 0; j < g.index(); ++j) m_row.push_back(m(0, j));
  Json reps = Json::array();
  for (const auto& w : coset_reps(g).reps) reps.push_back(to_string(w, g.alphabet()));
  Json gens = Json::array();
  for (const auto& w : schreier_generators(g)) gens.push_back(to_string(w, g.alphabet()));
  Json j = graph_to_json(g);
  j["transition_matrix"] = matrix_to_json(a);
  j["period"] = h;
  j["min_exponents_from_basepoint"] = m_row;
  j["period_divides_index"] = g.index() % h == 0;
  j["coset_reps"] = reps;
  j["coset_rep_tie_break"] = "shortlex";
  j["B"] = matrix_to_json(build_B_matrix(g));
  j["free_generators"] = gens;
  return j;
}

std::vector<oracle::Automaton> oracle_parts(const CosetPartition& p) {
  std::vector<oracle::Automaton> out;
  for (const auto& part : p.parts()) out.push_back({part.graph.action(), part.accept});
  return out;
}

Json d_matrices(const CosetPartition& p, const PeriodAnalysis& pa) {
  Json out = Json::array();
  for (auto h : pa.hset)
    for (auto hs : pa.hset) {
      if (hs >= h) continue;
      out.push_back({{"h", h}, {"h_small", hs}, {"D", to_json(build_D_matrix(p, h, hs))}});
    }
  return out;
}

Json partition_overview(const CosetPartition& p) {
  Json parts = Json::array();
  for (const auto& part : p.parts())
    parts.push_back({{"subgroup", part.subgroup},
                     {"rep", to_string(part.rep, p.alphabet())},
                     {"index", part.index()},
                     {"accept", part.accept}});
  return parts;
}

int cmd_build(const std::string& input, const Manifest& manifest) {
  const auto spec = subgroup_from_json(read_json(input));
  const auto g = build_schreier(spec.generators, spec.alphabet);
  Json report{{"manifest", manifest.to_json()}, {"graph", build_summary(g)}};
  emit(report, manifest.output);
  if (!manifest.output.empty() && manifest.output != "-")
    std::cout << "index " << g.index() << ", period " << report["graph"]["period"].get<std::size_t>() << "\n";
  return kOk;
}

int cmd_verify(const std::string& input, std::size_t oracle_len, std::size_t horizon, bool analyses, bool genfun,
               const Manifest& manifest) {
  const auto p = partition_from_json(read_json(input));
  const auto verification = verify_partition(p);
  Json report{{"manifest", manifest.to_json()}, {"parts", partition_overview(p)}};
  report["verification"] = to_json(verification, p.alphabet());
  report["density"] = rational_to_json(density_check(p));

  if (oracle_len > 0) {
    const auto check = oracle::brute_partition_check(oracle_parts(p), oracle_len);
    Json o{{"max_len", oracle_len}, {"ok", check.ok}, {"agrees", verification.valid ? check.ok
                                                : (!check.ok || verification.witness->size() > oracle_len)}};
    if (!check.ok) o["failure"] = to_string(Word::positive(p.alphabet().rank(), check.failure), p.alphabet());
    report["oracle"] = o;
  }

  auto invalid_stage = [&] { return Json{{"error", "InvalidPartition"}, {"message", "analysis requires a valid partition"}}; };
  if (analyses) {
    if (verification.valid) {
      const auto t1 = theorem1_analyze(p);
      report["theorem1"] = to_json(t1);
      report["period_repetition"] = to_json(period_repetition_checks(p));
      report["D_matrices"] = d_matrices(p, t1.periods);
    } else {
      report["theorem1"] = invalid_stage();
      report["period_repetition"] = invalid_stage();
    }
  }
  if (genfun) {
    if (verification.valid)
      report["genfun_identity"] = to_json(genfun_identity_check(p, horizon));
    else
      report["genfun_identity"] = invalid_stage();
  }
  emit(report, manifest.output);
  std::cerr << (verification.valid ? "valid" : "invalid") << " partition, " << p.size() << " parts\n";
  return verification.valid ? kOk : kInvalidPartition;
}

int cmd_genfun(const std::string& input, std::size_t terms, const Manifest& manifest) {
  const auto p = partition_from_json(read_json(input));
  Json parts = Json::array();
  for (const auto& part : p.parts()) {
    const auto f = generating_function(part.automaton());
    Json series = Json::array();
    for (const auto& c : series_coeffs(f, terms)) series.push_back(bigint_to_json(c));
    parts.push_back({{"subgroup", part.subgroup},
                     {"rep", to_string(part.rep, p.alphabet())},
                     {"p", rational_function_to_json(f)},
                     {"text", to_string(f)},
                     {"series", series}});
  }
  Json report{{"manifest", manifest.to_json()}, {"parts", parts}};
  const bool valid = verify_partition(p).valid;
  if (valid) report["identity"] = to_json(genfun_identity_check(p, terms));
  emit(report, manifest.output);
  return kOk;
}

int cmd_search(SearchConfig cfg, const Manifest& manifest) {
  const auto start = std::chrono::steady_clock::now();
  const auto result = search_counterexamples(cfg);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  emit(Json{{"manifest", manifest.to_json()}, {"result", to_json(result)}}, manifest.output);
  std::cerr << "searched " << result.tuples_done << "/" << result.tuples_total << " subgroup tuples, "
            << result.partitions.size() << " partitions, " << result.counterexamples.size() << " counterexamples, "
            << seconds << " s\n";
  if (!result.counterexamples.empty()) return kCounterexample;
  if (!result.complete) return kResourceBound;
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schreier automata and coset partitions of free groups"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", kVersion);

  std::string output;
  app.add_option("-o,--output", output, "write the JSON report here instead of stdout");

  std::string input;
  auto* build = app.add_subcommand("build", "Schreier graph of a subgroup given by generators");
  build->add_option("input", input, "subgroup JSON")->required();

  std::size_t oracle_len = 0, horizon = 20;
  auto* verify = app.add_subcommand("verify", "verify and analyze a coset partition");
  verify->add_option("input", input, "partition JSON")->required();
  verify->add_option("--max-oracle-len", oracle_len, "cross-check with brute force up to this word length (<= 12)");
  verify->add_option("--horizon", horizon, "coefficient horizon for the generating-function identity");

  auto* analyze = app.add_subcommand("analyze", "period analysis of a valid coset partition");
  analyze->add_option("input", input, "partition JSON")->required();

  std::size_t terms = 12;
  auto* genfun = app.add_subcommand("genfun", "generating functions of the parts of a partition file");
  genfun->add_option("input", input, "partition JSON")->required();
  genfun->add_option("--terms", terms, "number of series coefficients to print");

  SearchConfig cfg;
  std::string resume;
  std::uint64_t budget = 0;
  bool all_multisets = false;
  auto* search = app.add_subcommand("search", "exhaustive search for distinct-index partitions");
  search->add_option("--rank", cfg.rank, "number of generators")->required();
  auto* indices_opt = search->add_option("--indices", cfg.indices, "index multiset, e.g. 2,3,6")->delimiter(',');
  search->add_option("--max-index", cfg.max_index, "largest index when no multiset is given")->excludes(indices_opt);
  search->add_option("--max-parts", cfg.max_parts, "largest number of parts");
  search->add_option("--shards", cfg.shards, "number of work shards");
  search->add_option("--threads", cfg.threads, "worker threads (default: HSAUTO_THREADS or 1)");
  search->add_option("--resume", resume, "checkpoint file, created or resumed");
  search->add_option("--budget", budget, "stop after this many subgroup tuples");
  search->add_flag("--all-multisets", all_multisets, "include multisets with repeated indices");

  cfg.threads = env_threads();
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalidInput;
  }

  Manifest manifest;
  manifest.output = output;
  manifest.command = app.get_subcommands().front()->get_name();
  if (!input.empty()) manifest.inputs.push_back(input);

  try {
    if (*build) return cmd_build(input, manifest);
    if (*verify) {
      manifest.flags = {{"max_oracle_len", oracle_len}, {"horizon", horizon}};
      return cmd_verify(input, oracle_len, horizon, true, true, manifest);
    }
    if (*analyze) return cmd_verify(input, 0, 0, true, false, manifest);
    if (*genfun) {
      manifest.flags = {{"terms", terms}};
      return cmd_genfun(input, terms, manifest);
    }
    if (*search) {
      cfg.distinct_only = !all_multisets;
      if (!resume.empty()) cfg.checkpoint_path = resume;
      if (budget > 0) cfg.tuple_budget = budget;
      manifest.flags = {{"rank", cfg.rank},       {"indices", cfg.indices}, {"max_index", cfg.max_index},
                        {"max_parts", cfg.max_parts}, {"distinct_only", cfg.distinct_only}, {"shards", cfg.shards},
                        {"budget", budget}};
      if (!resume.empty()) manifest.inputs.push_back(resume);
      return cmd_search(cfg, manifest);
    }
  } catch (const InfiniteIndex& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInfiniteIndex;
  } catch (const EmptyGenerators& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInfiniteIndex;
  } catch (const InvalidPartition& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalidPartition;
  } catch (const BoundExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kResourceBound;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
  return kInvalidInput;
}
