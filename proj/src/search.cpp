#include "hsauto/search.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "hsauto/error.hpp"

namespace hsauto {

namespace {

/// Algorithm X over the reachable product tuples. Column (i, f) covers the
/// tuples whose i-th coordinate is f, so every element lies in exactly one
/// column per subgroup. Blocking counters replace the linked lists of
/// dancing links; the instances here are small.
class CoverSolver {
 public:
  CoverSolver(const std::vector<SchreierGraph>& subgroups, const std::vector<std::size_t>& capacities)
      : subgroups_(subgroups) {
    std::vector<const SchreierGraph*> graphs;
    for (const auto& g : subgroups) {
      if (!(g.alphabet() == subgroups[0].alphabet())) throw AlphabetMismatch("subgroups over different alphabets");
      graphs.push_back(&g);
    }
    space_ = explore_product(graphs);

    const std::size_t k = subgroups.size();
    offset_.resize(k + 1, 0);
    for (std::size_t i = 0; i < k; ++i) offset_[i + 1] = offset_[i] + subgroups[i].index();
    capacity_.assign(k, 0);
    for (std::size_t i = 0; i < k && i < capacities.size(); ++i) capacity_[i] = capacities[i];

    const std::size_t columns = offset_[k];
    column_elems_.resize(columns);
    for (std::size_t e = 0; e < space_.size(); ++e)
      for (std::size_t i = 0; i < k; ++i) column_elems_[offset_[i] + space_.coordinate(e, i)].push_back(e);

    blocked_.assign(columns, 0);
    covered_.assign(space_.size(), false);
    avail_.assign(space_.size(), k);
    used_.assign(k, 0);
    uncovered_ = space_.size();
  }

  std::vector<Cover> solve() {
    recurse();
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

 private:
  std::size_t column(std::size_t subgroup, std::size_t e) const { return offset_[subgroup] + space_.coordinate(e, subgroup); }

  void block(std::size_t c) {
    if (blocked_[c]++ == 0)
      for (auto x : column_elems_[c]) --avail_[x];
  }
  void unblock(std::size_t c) {
    if (--blocked_[c] == 0)
      for (auto x : column_elems_[c]) ++avail_[x];
  }

  void select(std::size_t subgroup, std::size_t c) {
    for (auto x : column_elems_[c]) {
      covered_[x] = true;
      --uncovered_;
      for (std::size_t i = 0; i < subgroups_.size(); ++i) block(column(i, x));
    }
    if (capacity_[subgroup] != 0 && ++used_[subgroup] == capacity_[subgroup])
      for (std::size_t c2 = offset_[subgroup]; c2 < offset_[subgroup + 1]; ++c2) block(c2);
    chosen_.push_back(CoverColumn{subgroup, static_cast<State>(c - offset_[subgroup])});
  }

  void deselect(std::size_t subgroup, std::size_t c) {
    chosen_.pop_back();
    if (capacity_[subgroup] != 0 && used_[subgroup]-- == capacity_[subgroup])
      for (std::size_t c2 = offset_[subgroup]; c2 < offset_[subgroup + 1]; ++c2) unblock(c2);
    const auto& elems = column_elems_[c];
    for (auto it = elems.rbegin(); it != elems.rend(); ++it) {
      for (std::size_t i = subgroups_.size(); i-- > 0;) unblock(column(i, *it));
      covered_[*it] = false;
      ++uncovered_;
    }
  }

  void recurse() {
    if (uncovered_ == 0) {
      Cover cover = chosen_;
      std::sort(cover.begin(), cover.end());
      found_.push_back(std::move(cover));
      return;
    }
    std::size_t best = space_.size();
    for (std::size_t e = 0; e < space_.size(); ++e) {
      if (covered_[e]) continue;
      if (best == space_.size() || avail_[e] < avail_[best]) best = e;
      if (avail_[best] == 0) return;
    }
    for (std::size_t i = 0; i < subgroups_.size(); ++i) {
      const std::size_t c = column(i, best);
      if (blocked_[c] != 0) continue;
      select(i, c);
      recurse();
      deselect(i, c);
    }
  }

  const std::vector<SchreierGraph>& subgroups_;
  ProductSpace space_;
  std::vector<std::size_t> offset_;
  std::vector<std::size_t> capacity_;
  std::vector<std::vector<std::size_t>> column_elems_;
  std::vector<std::size_t> blocked_;
  std::vector<bool> covered_;
  std::vector<std::size_t> avail_;
  std::vector<std::size_t> used_;
  std::size_t uncovered_ = 0;
  Cover chosen_;
  std::vector<Cover> found_;
};

void multisets_rec(std::size_t start, const Rational& remaining, std::vector<std::size_t>& current,
                   std::size_t max_index, std::size_t max_parts, bool distinct_only,
                   std::vector<std::vector<std::size_t>>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  if (current.size() >= max_parts) return;
  for (std::size_t d = start; d <= max_index; ++d) {
    const Rational unit(1, static_cast<long>(d));
    if (unit > remaining) continue;
    // the remaining slots cannot reach the target with entries >= d
    if (unit * static_cast<long>(max_parts - current.size()) < remaining) break;
    current.push_back(d);
    multisets_rec(distinct_only ? d + 1 : d, remaining - unit, current, max_index, max_parts, distinct_only, out);
    current.pop_back();
  }
}

/// Combinations with repetition of `count` items from [0, n), ascending.
std::vector<std::vector<std::size_t>> multichoose(std::size_t n, std::size_t count) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (cur.size() == count) {
      out.push_back(cur);
      return;
    }
    for (std::size_t x = from; x < n; ++x) {
      cur.push_back(x);
      rec(x);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

constexpr std::uint64_t kMaxCombos = 50'000'000;

/// C(n + count - 1, count), saturating above kMaxCombos.
std::uint64_t multichoose_count(std::size_t n, std::size_t count) {
  if (n == 0) return count == 0 ? 1 : 0;
  unsigned __int128 acc = 1;
  for (std::size_t i = 1; i <= count; ++i) {
    acc = acc * (n - 1 + i) / i;
    if (acc > kMaxCombos) return kMaxCombos + 1;
  }
  return static_cast<std::uint64_t>(acc);
}

struct Group {
  std::size_t index = 0;
  std::vector<std::vector<std::size_t>> combos;
};

struct MultisetPlan {
  std::vector<std::size_t> indices;
  std::vector<Group> groups;
  std::uint64_t tuples = 0;
  std::uint64_t offset = 0;
};

/// Subgroups of one tuple, merged so identical subgroups become one entry
/// with a capacity equal to their multiplicity.
struct TupleSubgroups {
  std::vector<SchreierGraph> graphs;
  std::vector<std::size_t> capacities;
  std::vector<std::string> names;
};

struct ShardState {
  std::uint64_t begin = 0;
  std::uint64_t end = 0;
  std::uint64_t next = 0;
  std::vector<std::pair<std::uint64_t, Cover>> found;
};

class SearchRun {
 public:
  explicit SearchRun(const SearchConfig& cfg) : cfg_(cfg), alphabet_(Alphabet::standard(cfg.rank)) {
    if (cfg.rank == 0) throw std::invalid_argument("rank must be positive");
    if (cfg.shards == 0) throw std::invalid_argument("shard count must be positive");
    std::vector<std::vector<std::size_t>> multisets;
    if (!cfg.indices.empty()) {
      auto m = cfg.indices;
      std::sort(m.begin(), m.end());
      if (m.front() < 2) throw std::invalid_argument("indices must be at least 2");
      multisets.push_back(std::move(m));
    } else {
      multisets = unit_fraction_multisets(cfg.max_index, cfg.max_parts, cfg.distinct_only);
    }

    for (const auto& m : multisets)
      for (auto d : m)
        if (!subgroups_.contains(d)) subgroups_[d] = enumerate_subgroups(alphabet_, d);

    std::uint64_t offset = 0;
    for (const auto& m : multisets) {
      MultisetPlan plan;
      plan.indices = m;
      plan.offset = offset;
      plan.tuples = 1;
      for (std::size_t i = 0; i < m.size();) {
        std::size_t j = i;
        while (j < m.size() && m[j] == m[i]) ++j;
        Group g;
        g.index = m[i];
        if (multichoose_count(subgroups_[m[i]].size(), j - i) > kMaxCombos)
          throw BoundExceeded("too many subgroup combinations for index " + std::to_string(m[i]));
        g.combos = multichoose(subgroups_[m[i]].size(), j - i);
        plan.tuples *= g.combos.size();
        plan.groups.push_back(std::move(g));
        i = j;
      }
      offset += plan.tuples;
      plans_.push_back(std::move(plan));
    }
    total_ = offset;
    limit_ = cfg.tuple_budget ? std::min<std::uint64_t>(*cfg.tuple_budget, total_) : total_;

    shards_.resize(cfg.shards);
    for (std::size_t s = 0; s < cfg.shards; ++s) {
      shards_[s].begin = total_ * s / cfg.shards;
      shards_[s].end = total_ * (s + 1) / cfg.shards;
      shards_[s].next = shards_[s].begin;
    }
    if (cfg.checkpoint_path && std::filesystem::exists(*cfg.checkpoint_path)) load_checkpoint(*cfg.checkpoint_path);
  }

  SearchReport run() {
    const std::size_t threads = std::max<std::size_t>(1, std::min(cfg_.threads, cfg_.shards));
    std::vector<std::thread> pool;
    std::exception_ptr failure;
    std::mutex failure_mutex;
    for (std::size_t w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t s = w; s < shards_.size(); s += threads) run_shard(s);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    if (cfg_.checkpoint_path) write_checkpoint();
    return assemble();
  }

 private:
  std::size_t plan_of(std::uint64_t tuple) const {
    auto it = std::upper_bound(plans_.begin(), plans_.end(), tuple,
                               [](std::uint64_t t, const MultisetPlan& p) { return t < p.offset; });
    return static_cast<std::size_t>(it - plans_.begin()) - 1;
  }

  TupleSubgroups decode(std::uint64_t tuple) const {
    const auto& plan = plans_[plan_of(tuple)];
    std::uint64_t local = tuple - plan.offset;
    std::vector<std::size_t> choice(plan.groups.size());
    for (std::size_t g = plan.groups.size(); g-- > 0;) {
      const auto n = plan.groups[g].combos.size();
      choice[g] = static_cast<std::size_t>(local % n);
      local /= n;
    }
    TupleSubgroups out;
    for (std::size_t g = 0; g < plan.groups.size(); ++g) {
      const auto& group = plan.groups[g];
      const auto& combo = group.combos[choice[g]];
      const auto& pool = subgroups_.at(group.index);
      for (std::size_t i = 0; i < combo.size(); ++i) {
        if (i > 0 && combo[i] == combo[i - 1]) {
          ++out.capacities.back();
          continue;
        }
        out.graphs.push_back(pool[combo[i]]);
        out.capacities.push_back(1);
        out.names.push_back("d" + std::to_string(group.index) + "_" + std::to_string(combo[i]));
      }
    }
    return out;
  }

  void run_shard(std::size_t s) {
    ShardState& shard = shards_[s];
    std::uint64_t since_checkpoint = 0;
    const std::uint64_t stop = std::min(shard.end, std::max(shard.begin, limit_));
    while (shard.next < stop) {
      const auto subgroups = decode(shard.next);
      auto covers = exact_covers(subgroups.graphs, subgroups.capacities);
      {
        std::lock_guard lock(mutex_);
        for (auto& c : covers) shard.found.emplace_back(shard.next, std::move(c));
        ++shard.next;
      }
      if (cfg_.checkpoint_path && ++since_checkpoint >= cfg_.checkpoint_every) {
        since_checkpoint = 0;
        write_checkpoint();
      }
    }
  }

  nlohmann::json fingerprint() const {
    nlohmann::json multisets = nlohmann::json::array();
    for (const auto& p : plans_) multisets.push_back(p.indices);
    return {{"rank", cfg_.rank}, {"multisets", multisets}, {"shards", cfg_.shards}, {"tuples_total", total_}};
  }

  void write_checkpoint() {
    std::lock_guard lock(mutex_);
    nlohmann::json j;
    j["format"] = "hsauto-search-checkpoint/1";
    j["config"] = fingerprint();
    j["shard_state"] = nlohmann::json::array();
    for (const auto& s : shards_) {
      nlohmann::json found = nlohmann::json::array();
      for (const auto& [tuple, cover] : s.found) {
        nlohmann::json cols = nlohmann::json::array();
        for (const auto& c : cover) cols.push_back({c.subgroup, c.accept});
        found.push_back({{"tuple", tuple}, {"cover", cols}});
      }
      j["shard_state"].push_back({{"begin", s.begin}, {"end", s.end}, {"next", s.next}, {"found", found}});
    }
    const std::string tmp = *cfg_.checkpoint_path + ".tmp";
    {
      std::ofstream out(tmp);
      out << j.dump(1) << '\n';
    }
    std::filesystem::rename(tmp, *cfg_.checkpoint_path);
  }

  void load_checkpoint(const std::string& path) {
    std::ifstream in(path);
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError("unreadable checkpoint '" + path + "': " + e.what());
    }
    if (j.value("format", "") != "hsauto-search-checkpoint/1" || j.at("config") != fingerprint())
      throw ParseError("checkpoint '" + path + "' was written for a different search configuration");
    const auto& states = j.at("shard_state");
    for (std::size_t s = 0; s < shards_.size(); ++s) {
      const auto& st = states.at(s);
      shards_[s].next = st.at("next").get<std::uint64_t>();
      for (const auto& f : st.at("found")) {
        Cover cover;
        for (const auto& c : f.at("cover")) cover.push_back({c.at(0).get<std::size_t>(), c.at(1).get<State>()});
        shards_[s].found.emplace_back(f.at("tuple").get<std::uint64_t>(), std::move(cover));
      }
    }
  }

  SearchReport assemble() const {
    SearchReport report;
    report.rank = cfg_.rank;
    for (const auto& [d, list] : subgroups_) report.subgroup_counts[d] = list.size();
    report.tuples_total = total_;
    report.complete = true;
    for (const auto& s : shards_) {
      report.tuples_done += s.next - s.begin;
      if (s.next != s.end) report.complete = false;
    }
    for (const auto& p : plans_) report.multisets.push_back(MultisetSummary{p.indices, p.tuples, 0, 0});

    std::vector<std::pair<std::uint64_t, Cover>> all;
    for (const auto& s : shards_) all.insert(all.end(), s.found.begin(), s.found.end());
    std::sort(all.begin(), all.end());
    for (const auto& [tuple, cover] : all) {
      const auto subgroups = decode(tuple);
      FoundPartition found{plan_of(tuple), tuple, cover_to_partition(subgroups.graphs, cover, subgroups.names)};
      if (!verify_partition(found.partition).valid) ++report.verification_failures;
      auto& summary = report.multisets[found.multiset];
      ++summary.partitions;
      if (!has_multiplicity(found.partition)) {
        ++summary.counterexamples;
        report.counterexamples.push_back(found);
      }
      report.partitions.push_back(std::move(found));
    }
    return report;
  }

  const SearchConfig& cfg_;
  Alphabet alphabet_;
  std::map<std::size_t, std::vector<SchreierGraph>> subgroups_;
  std::vector<MultisetPlan> plans_;
  std::uint64_t total_ = 0;
  std::uint64_t limit_ = 0;
  std::vector<ShardState> shards_;
  std::mutex mutex_;
};

}  // namespace

std::vector<Cover> exact_covers(const std::vector<SchreierGraph>& subgroups, const std::vector<std::size_t>& capacities) {
  if (subgroups.empty()) return {};
  return CoverSolver(subgroups, capacities).solve();
}

CosetPartition cover_to_partition(const std::vector<SchreierGraph>& subgroups, const Cover& cover,
                                  const std::vector<std::string>& names) {
  std::vector<CosetPart> parts;
  for (const auto& c : cover) {
    const std::string name = c.subgroup < names.size() ? names[c.subgroup] : "S" + std::to_string(c.subgroup);
    parts.push_back(CosetPart::from_state(name, subgroups[c.subgroup], c.accept));
  }
  return CosetPartition(subgroups.at(0).alphabet(), std::move(parts));
}

std::vector<CosetPartition> find_partitions(const std::vector<SchreierGraph>& subgroups,
                                            const std::vector<std::size_t>& capacities) {
  std::vector<CosetPartition> out;
  for (const auto& cover : exact_covers(subgroups, capacities)) out.push_back(cover_to_partition(subgroups, cover));
  return out;
}

std::vector<std::vector<std::size_t>> unit_fraction_multisets(std::size_t max_index, std::size_t max_parts,
                                                              bool distinct_only) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> current;
  multisets_rec(2, Rational(1), current, max_index, max_parts, distinct_only, out);
  return out;
}

SearchReport search_counterexamples(const SearchConfig& cfg) { return SearchRun(cfg).run(); }

}  // namespace hsauto
