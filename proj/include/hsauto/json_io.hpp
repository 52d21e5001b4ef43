#ifndef HSAUTO_JSON_IO_HPP
#define HSAUTO_JSON_IO_HPP

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hsauto/numeric.hpp"
#include "hsauto/partition.hpp"
#include "hsauto/polynomial.hpp"
#include "hsauto/schreier.hpp"
#include "hsauto/search.hpp"
#include "hsauto/spectral.hpp"

namespace hsauto {

using Json = nlohmann::ordered_json;

/// Integers that fit in 64 bits are JSON numbers, larger ones decimal strings.
Json bigint_to_json(const BigInt& v);
BigInt bigint_from_json(const Json& j);

/// {"num": n, "den": d}
Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json matrix_to_json(const RationalMatrix& m);
Json matrix_to_json(const TransitionMatrix& m);

/// {"num": [c0, c1, ...], "den": [c0, c1, ...]}, ascending degree.
Json rational_function_to_json(const RationalFunction& r);
RationalFunction rational_function_from_json(const Json& j);

Alphabet alphabet_from_json(const Json& j);

/// {"alphabet": [...], "generators": [...]}
struct SubgroupSpec {
  Alphabet alphabet;
  std::vector<Word> generators;
};
SubgroupSpec subgroup_from_json(const Json& j);

/// {"d": 4, "action": {"a": [...], "b": [...]}}
Json graph_to_json(const SchreierGraph& g);
SchreierGraph graph_from_json(const Json& j, const Alphabet& alphabet);

/// Partition files name subgroups by generators (or by an "action" table)
/// and parts by subgroup name plus a representative word.
CosetPartition partition_from_json(const Json& j);
Json partition_to_json(const CosetPartition& p);

Json to_json(const PartitionReport& r, const Alphabet& alphabet);
Json to_json(const PeriodMatrix& m);
Json to_json(const Theorem1Report& r);
Json to_json(const RepetitionReport& r);
Json to_json(const GenfunIdentityReport& r);
Json to_json(const LimitReport& r);
Json to_json(const SearchReport& r);

}  // namespace hsauto

#endif  // HSAUTO_JSON_IO_HPP
