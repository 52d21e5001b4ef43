#include "hsauto/schreier.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>

#include "hsauto/error.hpp"

namespace hsauto {

namespace {

constexpr State kUndefined = std::numeric_limits<State>::max();

struct UnionFind {
  std::vector<std::size_t> parent;

  std::size_t add() {
    parent.push_back(parent.size());
    return parent.size() - 1;
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    // keep the smaller id as root so the basepoint stays 0
    if (b < a) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

struct Edge {
  std::size_t src;
  std::size_t gen;
  std::size_t dst;
};

ActionTable relabel_bfs(const ActionTable& action) {
  const std::size_t rank = action.size();
  const std::size_t d = action[0].size();
  std::vector<State> label(d, kUndefined);
  std::vector<State> order;
  order.reserve(d);
  label[0] = 0;
  order.push_back(0);
  for (std::size_t head = 0; head < order.size(); ++head) {
    const State s = order[head];
    for (std::size_t a = 0; a < rank; ++a) {
      const State t = action[a][s];
      if (label[t] == kUndefined) {
        label[t] = static_cast<State>(order.size());
        order.push_back(t);
      }
    }
  }
  ActionTable out(rank, std::vector<State>(d));
  for (std::size_t a = 0; a < rank; ++a)
    for (std::size_t s = 0; s < d; ++s) out[a][label[s]] = label[action[a][s]];
  return out;
}

}  // namespace

SchreierGraph::SchreierGraph(Alphabet alphabet, ActionTable action)
    : alphabet_(std::move(alphabet)), action_(std::move(action)) {
  const std::size_t rank = alphabet_.rank();
  if (action_.size() != rank)
    throw InvalidGraph("action table has " + std::to_string(action_.size()) + " rows for rank " +
                       std::to_string(rank));
  const std::size_t d = action_[0].size();
  if (d == 0) throw InvalidGraph("graph must have at least one state");

  inverse_.assign(rank, std::vector<State>(d, kUndefined));
  for (std::size_t a = 0; a < rank; ++a) {
    if (action_[a].size() != d) throw InvalidGraph("ragged action table");
    for (std::size_t s = 0; s < d; ++s) {
      const State t = action_[a][s];
      if (t >= d) throw InvalidGraph("state " + std::to_string(t) + " out of range");
      if (inverse_[a][t] != kUndefined)
        throw InvalidGraph("letter '" + alphabet_.name(a) + "' does not act as a permutation");
      inverse_[a][t] = static_cast<State>(s);
    }
  }

  // transitivity: orbit of state 0 under the positive letters
  std::vector<bool> seen(d, false);
  std::vector<State> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const State s = stack.back();
    stack.pop_back();
    for (std::size_t a = 0; a < rank; ++a) {
      const State t = action_[a][s];
      if (!seen[t]) {
        seen[t] = true;
        ++reached;
        stack.push_back(t);
      }
    }
  }
  if (reached != d) throw InvalidGraph("letters do not act transitively on the states");
}

SchreierGraph build_schreier(std::span<const Word> generators, const Alphabet& alphabet) {
  const std::size_t rank = alphabet.rank();
  UnionFind uf;
  std::vector<Edge> edges;
  const std::size_t base = uf.add();

  bool nontrivial = false;
  for (const Word& w : generators) {
    if (w.rank() != rank)
      throw AlphabetMismatch("generator of rank " + std::to_string(w.rank()) + " over alphabet of rank " +
                             std::to_string(rank));
    if (w.empty()) continue;
    nontrivial = true;
    std::size_t cur = base;
    for (std::size_t i = 0; i < w.size(); ++i) {
      const std::size_t next = (i + 1 == w.size()) ? base : uf.add();
      const Letter& l = w[i];
      if (l.inverse)
        edges.push_back({next, l.gen, cur});
      else
        edges.push_back({cur, l.gen, next});
      cur = next;
    }
  }
  if (!nontrivial) throw EmptyGenerators("subgroup generated by the empty set has infinite index");

  // fold until every vertex has at most one outgoing and one incoming edge per letter
  const std::size_t nv = uf.parent.size();
  std::vector<std::size_t> out(nv * rank), in(nv * rank);
  constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
  for (bool changed = true; changed;) {
    changed = false;
    std::fill(out.begin(), out.end(), none);
    std::fill(in.begin(), in.end(), none);
    for (const Edge& e : edges) {
      const std::size_t s = uf.find(e.src), t = uf.find(e.dst);
      std::size_t& o = out[s * rank + e.gen];
      if (o == none)
        o = t;
      else if (uf.find(o) != t)
        changed |= uf.unite(o, t);
      std::size_t& i = in[uf.find(t) * rank + e.gen];
      if (i == none)
        i = uf.find(s);
      else if (uf.find(i) != uf.find(s))
        changed |= uf.unite(i, s);
    }
  }

  // dense numbering of the folded vertices, basepoint first
  std::vector<State> dense(nv, kUndefined);
  State count = 0;
  for (std::size_t v = 0; v < nv; ++v) {
    const std::size_t r = uf.find(v);
    if (dense[r] == kUndefined) dense[r] = count++;
  }
  ActionTable action(rank, std::vector<State>(count, kUndefined));
  ActionTable inverse(rank, std::vector<State>(count, kUndefined));
  for (const Edge& e : edges) {
    const State s = dense[uf.find(e.src)], t = dense[uf.find(e.dst)];
    action[e.gen][s] = t;
    inverse[e.gen][t] = s;
  }
  for (State s = 0; s < count; ++s) {
    for (std::size_t a = 0; a < rank; ++a) {
      if (action[a][s] == kUndefined || inverse[a][s] == kUndefined) {
        const bool outgoing = action[a][s] == kUndefined;
        throw InfiniteIndex("subgroup has infinite index: folded vertex " + std::to_string(s) + " has no " +
                                (outgoing ? "outgoing" : "incoming") + " edge labelled '" + alphabet.name(a) + "'",
                            s, a, outgoing);
      }
    }
  }
  return SchreierGraph(alphabet, relabel_bfs(action));
}

State walk(const SchreierGraph& g, State from, const Word& w) {
  State s = from;
  for (const Letter& l : w.letters()) s = g.step(s, l);
  return s;
}

CosetRepTable coset_reps(const SchreierGraph& g) {
  const std::size_t d = g.index();
  const std::size_t rank = g.rank();
  std::vector<State> parent(d, kUndefined);
  std::vector<std::uint32_t> via(d, 0);
  std::vector<bool> seen(d, false);
  std::deque<State> queue{0};
  seen[0] = true;
  // FIFO order plus letters in alphabet order yields shortlex-minimal paths
  while (!queue.empty()) {
    const State s = queue.front();
    queue.pop_front();
    for (std::size_t a = 0; a < rank; ++a) {
      const State t = g.target(a, s);
      if (seen[t]) continue;
      seen[t] = true;
      parent[t] = s;
      via[t] = static_cast<std::uint32_t>(a);
      queue.push_back(t);
    }
  }

  CosetRepTable table;
  table.reps.reserve(d);
  for (State s = 0; s < d; ++s) {
    std::vector<std::uint32_t> gens;
    for (State v = s; v != 0; v = parent[v]) gens.push_back(via[v]);
    std::reverse(gens.begin(), gens.end());
    table.reps.push_back(Word::positive(rank, gens));
  }
  return table;
}

ActionTable canonical_form(const SchreierGraph& g) { return relabel_bfs(g.action()); }

SchreierGraph canonicalize(const SchreierGraph& g) { return SchreierGraph(g.alphabet(), canonical_form(g)); }

std::vector<Word> schreier_generators(const SchreierGraph& g) {
  const auto table = coset_reps(g);
  const std::size_t rank = g.rank();
  std::vector<Word> gens;
  for (State s = 0; s < g.index(); ++s) {
    for (std::size_t a = 0; a < rank; ++a) {
      const State t = g.target(a, s);
      const Letter letter{static_cast<std::uint32_t>(a), false};
      std::vector<Letter> path(table.reps[s].letters());
      path.push_back(letter);
      // tree edges reproduce the target's representative exactly
      if (Word::reduce(rank, path) == table.reps[t]) continue;
      gens.push_back(reduce_concat(Word::reduce(rank, path), invert(table.reps[t])));
    }
  }
  return gens;
}

void for_each_subgroup(const Alphabet& alphabet, std::size_t d,
                       const std::function<void(const SchreierGraph&)>& visit) {
  if (d == 0) return;
  const std::size_t rank = alphabet.rank();
  ActionTable act(rank, std::vector<State>(d, kUndefined));
  ActionTable inv(rank, std::vector<State>(d, kUndefined));
  std::size_t discovered = 1;
  const std::size_t slots = d * rank;

  // Fill (state, letter) slots in breadth-first order; a fresh target gets
  // the next unused label, so every completed table is already canonical.
  std::function<void(std::size_t)> fill = [&](std::size_t slot) {
    if (slot == slots) {
      visit(SchreierGraph(alphabet, act));
      return;
    }
    const State s = static_cast<State>(slot / rank);
    const std::size_t a = slot % rank;
    if (s >= discovered) return;
    for (State t = 0; t < discovered; ++t) {
      if (inv[a][t] != kUndefined) continue;
      act[a][s] = t;
      inv[a][t] = s;
      fill(slot + 1);
      inv[a][t] = kUndefined;
    }
    if (discovered < d) {
      const State t = static_cast<State>(discovered++);
      act[a][s] = t;
      inv[a][t] = s;
      fill(slot + 1);
      inv[a][t] = kUndefined;
      --discovered;
    }
    act[a][s] = kUndefined;
  };
  fill(0);
}

std::vector<SchreierGraph> enumerate_subgroups(const Alphabet& alphabet, std::size_t d) {
  std::vector<SchreierGraph> out;
  for_each_subgroup(alphabet, d, [&](const SchreierGraph& g) { out.push_back(g); });
  return out;
}

}  // namespace hsauto
