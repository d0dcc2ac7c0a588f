#include "bifix/dfa.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "bifix/code.hpp"
#include "bifix/error.hpp"

namespace bifix {

Dfa::Dfa(Alphabet alphabet, int num_states, int initial, std::vector<int> accepting,
         std::vector<std::vector<int>> delta)
    : alphabet_(std::move(alphabet)),
      num_states_(num_states),
      initial_(initial),
      accepting_(std::move(accepting)),
      delta_(std::move(delta)) {
  if (num_states_ < 1) throw_invalid("dfa needs at least one state");
  if (initial_ < 0 || initial_ >= num_states_) throw_invalid("dfa initial state out of range");
  if (static_cast<int>(delta_.size()) != alphabet_.size()) {
    throw_invalid("dfa transition table must cover the alphabet");
  }
  for (const auto& row : delta_) {
    if (static_cast<int>(row.size()) != num_states_) throw_invalid("dfa transition row size");
    for (int t : row) {
      if (t < 0 || t >= num_states_) throw_invalid("dfa transition target out of range");
    }
  }
  std::sort(accepting_.begin(), accepting_.end());
  accepting_.erase(std::unique(accepting_.begin(), accepting_.end()), accepting_.end());
  for (int q : accepting_) {
    if (q < 0 || q >= num_states_) throw_invalid("dfa accepting state out of range");
  }
}

bool Dfa::is_accepting(int state) const {
  return std::binary_search(accepting_.begin(), accepting_.end(), state);
}

int Dfa::run(int state, const Word& w) const {
  for (int a : w.letters()) {
    if (a < 0 || a >= alphabet_.size()) throw_invalid("letter out of the dfa alphabet");
    state = step(state, a);
  }
  return state;
}

bool Dfa::accepts(const Word& w) const { return is_accepting(run(initial_, w)); }

std::vector<bool> Dfa::coaccessible() const {
  std::vector<std::vector<int>> rev(num_states_);
  for (int a = 0; a < alphabet_.size(); ++a) {
    for (int s = 0; s < num_states_; ++s) rev[delta_[a][s]].push_back(s);
  }
  std::vector<bool> co(num_states_, false);
  std::vector<int> stack;
  for (int q : accepting_) {
    co[q] = true;
    stack.push_back(q);
  }
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u : rev[v]) {
      if (!co[u]) {
        co[u] = true;
        stack.push_back(u);
      }
    }
  }
  return co;
}

long long Dfa::longest_accepted() const {
  std::vector<bool> useful = coaccessible();
  {
    std::vector<bool> reach(num_states_, false);
    std::vector<int> stack{initial_};
    reach[initial_] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int a = 0; a < alphabet_.size(); ++a) {
        int t = delta_[a][v];
        if (!reach[t]) {
          reach[t] = true;
          stack.push_back(t);
        }
      }
    }
    for (int s = 0; s < num_states_; ++s) useful[s] = useful[s] && reach[s];
  }
  if (!useful[initial_]) return -1;

  // longest path through useful states; any cycle means the language is infinite
  std::vector<int> color(num_states_, 0);  // 0 new, 1 active, 2 done
  std::vector<long long> best(num_states_, -1);
  bool cyclic = false;
  auto dfs = [&](auto&& self, int v) -> long long {
    if (color[v] == 1) {
      cyclic = true;
      return 0;
    }
    if (color[v] == 2) return best[v];
    color[v] = 1;
    long long b = is_accepting(v) ? 0 : -1;
    for (int a = 0; a < alphabet_.size() && !cyclic; ++a) {
      int t = delta_[a][v];
      if (!useful[t]) continue;
      long long sub = self(self, t);
      if (cyclic) break;
      if (sub >= 0) b = std::max(b, sub + 1);
    }
    color[v] = 2;
    best[v] = b;
    return b;
  };
  long long r = dfs(dfs, initial_);
  return cyclic ? -2 : r;
}

Dfa minimize(const Dfa& dfa) {
  int n = dfa.num_states();
  int k = dfa.alphabet().size();

  // Moore refinement: split by (own block, successor blocks) signatures
  // until stable. Quadratic-ish but the automata here are small.
  std::vector<int> block_of(n, 0);
  for (int q : dfa.accepting()) block_of[q] = 1;
  int num_blocks = 0;
  for (;;) {
    std::map<std::vector<int>, int> sig_to_block;
    std::vector<int> next(n);
    for (int s = 0; s < n; ++s) {
      std::vector<int> sig;
      sig.reserve(k + 1);
      sig.push_back(block_of[s]);
      for (int a = 0; a < k; ++a) sig.push_back(block_of[dfa.step(s, a)]);
      auto [it, ins] = sig_to_block.emplace(std::move(sig), static_cast<int>(sig_to_block.size()));
      next[s] = it->second;
    }
    int blocks = static_cast<int>(sig_to_block.size());
    block_of = std::move(next);
    if (blocks == num_blocks) break;
    num_blocks = blocks;
  }

  std::vector<int> rep(num_blocks, -1);
  for (int s = 0; s < n; ++s) {
    if (rep[block_of[s]] < 0) rep[block_of[s]] = s;
  }
  std::vector<std::vector<int>> delta(k, std::vector<int>(num_blocks));
  std::vector<int> accepting;
  for (int b = 0; b < num_blocks; ++b) {
    for (int a = 0; a < k; ++a) delta[a][b] = block_of[dfa.step(rep[b], a)];
    if (dfa.is_accepting(rep[b])) accepting.push_back(b);
  }
  return Dfa(dfa.alphabet(), num_blocks, block_of[dfa.initial()], std::move(accepting),
             std::move(delta));
}

Dfa dfa_of_star(const FiniteCode& code) {
  const Alphabet& alphabet = code.alphabet();
  int k = alphabet.size();

  // trie over the code words; node 0 is the root
  std::vector<std::vector<int>> child(1, std::vector<int>(k, -1));
  std::vector<bool> final_node(1, false);
  for (const Word& w : code.words()) {
    int node = 0;
    for (int a : w.letters()) {
      if (child[node][a] < 0) {
        child[node][a] = static_cast<int>(child.size());
        child.emplace_back(k, -1);
        final_node.push_back(false);
      }
      node = child[node][a];
    }
    final_node[node] = true;
  }

  // subset construction of the trie NFA whose completed words restart at
  // the root; accepting subsets are those containing the root
  std::map<std::vector<int>, int> subset_id;
  std::vector<std::vector<int>> subsets;
  std::vector<std::vector<int>> trans;  // trans[q][a]
  std::queue<int> todo;
  auto intern = [&](std::vector<int> subset) {
    std::sort(subset.begin(), subset.end());
    subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
    auto [it, inserted] = subset_id.emplace(std::move(subset), static_cast<int>(subsets.size()));
    if (inserted) {
      subsets.push_back(it->first);
      trans.emplace_back(k, -1);
      todo.push(it->second);
    }
    return it->second;
  };
  int start = intern({0});
  while (!todo.empty()) {
    int q = todo.front();
    todo.pop();
    for (int a = 0; a < k; ++a) {
      std::vector<int> target;
      for (int node : subsets[q]) {
        int v = child[node][a];
        if (v >= 0) {
          target.push_back(v);
          if (final_node[v]) target.push_back(0);
        }
      }
      trans[q][a] = intern(std::move(target));
    }
  }

  int n = static_cast<int>(subsets.size());
  std::vector<std::vector<int>> delta(k, std::vector<int>(n));
  std::vector<int> accepting;
  for (int q = 0; q < n; ++q) {
    for (int a = 0; a < k; ++a) delta[a][q] = trans[q][a];
    if (std::binary_search(subsets[q].begin(), subsets[q].end(), 0)) accepting.push_back(q);
  }
  Dfa full(alphabet, n, start, std::move(accepting), std::move(delta));
  return minimize(full);
}

Dfa power_code_dfa(const Alphabet& alphabet, int n) {
  if (n < 1) throw_invalid("power code exponent must be positive");
  std::vector<std::vector<int>> delta(alphabet.size(), std::vector<int>(n));
  for (int a = 0; a < alphabet.size(); ++a) {
    for (int s = 0; s < n; ++s) delta[a][s] = (s + 1) % n;
  }
  return Dfa(alphabet, n, 0, {0}, std::move(delta));
}

}  // namespace bifix
