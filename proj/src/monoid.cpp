#include "bifix/monoid.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

#include "bifix/code.hpp"
#include "bifix/error.hpp"

namespace bifix {

FiniteMonoidPresentation::FiniteMonoidPresentation(Alphabet alphabet,
                                                   std::vector<Transformation> elements,
                                                   int identity,
                                                   std::vector<int> letter_generators)
    : alphabet_(std::move(alphabet)),
      elements_(std::move(elements)),
      identity_(identity),
      letter_generators_(std::move(letter_generators)) {
  if (elements_.empty()) throw_invalid("monoid needs elements");
  if (static_cast<int>(letter_generators_.size()) != alphabet_.size()) {
    throw_invalid("monoid needs one generator per letter");
  }
  lookup_order_.resize(elements_.size());
  std::iota(lookup_order_.begin(), lookup_order_.end(), std::size_t{0});
  std::sort(lookup_order_.begin(), lookup_order_.end(),
            [&](std::size_t a, std::size_t b) { return elements_[a] < elements_[b]; });
}

int FiniteMonoidPresentation::mul(int i, int j) const {
  const Transformation& ti = elements_.at(i);
  const Transformation& tj = elements_.at(j);
  Transformation out(ti.size());
  for (std::size_t s = 0; s < ti.size(); ++s) out[s] = tj[ti[s]];
  int idx = index_of(out);
  if (idx < 0) throw Error(ErrorKind::internal, "monoid not closed under composition");
  return idx;
}

int FiniteMonoidPresentation::index_of(const Transformation& t) const {
  auto it = std::lower_bound(lookup_order_.begin(), lookup_order_.end(), t,
                             [&](std::size_t a, const Transformation& v) {
                               return elements_[a] < v;
                             });
  if (it == lookup_order_.end() || !(elements_[*it] == t)) return -1;
  return static_cast<int>(*it);
}

FiniteMonoidPresentation transition_monoid(const Dfa& dfa, std::size_t element_cap) {
  int n = dfa.num_states();
  Transformation id(n);
  std::iota(id.begin(), id.end(), 0);

  std::vector<Transformation> gens;
  for (int a = 0; a < dfa.alphabet().size(); ++a) {
    Transformation t(n);
    for (int s = 0; s < n; ++s) t[s] = dfa.step(s, a);
    gens.push_back(std::move(t));
  }

  std::map<Transformation, int> index;
  std::vector<Transformation> elements;
  std::queue<int> todo;
  auto intern = [&](Transformation t) {
    auto [it, inserted] = index.emplace(std::move(t), static_cast<int>(elements.size()));
    if (inserted) {
      elements.push_back(it->first);
      if (elements.size() > element_cap) {
        throw_resource_limit("transition monoid exceeds the element cap of " +
                             std::to_string(element_cap));
      }
      todo.push(it->second);
    }
    return it->second;
  };

  int identity = intern(id);
  std::vector<int> letter_generators;
  for (auto& g : gens) letter_generators.push_back(intern(g));

  while (!todo.empty()) {
    int i = todo.front();
    todo.pop();
    for (const Transformation& g : gens) {
      Transformation prod(n);
      for (int s = 0; s < n; ++s) prod[s] = g[elements[i][s]];
      intern(std::move(prod));
    }
  }
  return FiniteMonoidPresentation(dfa.alphabet(), std::move(elements), identity,
                                  std::move(letter_generators));
}

GroupCodeResult is_group_code_dfa(const Dfa& dfa, std::size_t element_cap) {
  for (int a = 0; a < dfa.alphabet().size(); ++a) {
    std::vector<bool> hit(dfa.num_states(), false);
    for (int s = 0; s < dfa.num_states(); ++s) {
      int t = dfa.step(s, a);
      if (hit[t]) return {false, std::nullopt};
      hit[t] = true;
    }
  }
  return {true, transition_monoid(dfa, element_cap).size()};
}

GroupCodeResult is_group_code(const FiniteCode& code, std::size_t element_cap) {
  return is_group_code_dfa(dfa_of_star(code), element_cap);
}

namespace {

// Strongly connected components of the element set under the given
// generator-step relation; components numbered in a canonical order.
std::vector<int> scc_partition(std::size_t n, const std::vector<std::vector<int>>& adj,
                               int* num_out) {
  // iterative Tarjan
  std::vector<int> idx(n, -1), low(n, 0), comp(n, -1);
  std::vector<bool> on_stack(n, false);
  std::vector<int> stack;
  int counter = 0, comps = 0;
  struct Frame {
    int v;
    std::size_t edge;
  };
  for (std::size_t root = 0; root < n; ++root) {
    if (idx[root] >= 0) continue;
    std::vector<Frame> frames{{static_cast<int>(root), 0}};
    while (!frames.empty()) {
      Frame& f = frames.back();
      int v = f.v;
      if (f.edge == 0) {
        idx[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = true;
      }
      if (f.edge < adj[v].size()) {
        int u = adj[v][f.edge++];
        if (idx[u] < 0) {
          frames.push_back({u, 0});
        } else if (on_stack[u]) {
          low[v] = std::min(low[v], idx[u]);
        }
      } else {
        if (low[v] == idx[v]) {
          for (;;) {
            int u = stack.back();
            stack.pop_back();
            on_stack[u] = false;
            comp[u] = comps;
            if (u == v) break;
          }
          ++comps;
        }
        frames.pop_back();
        if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
      }
    }
  }
  *num_out = comps;
  return comp;
}

std::vector<int> renumber_by_first_occurrence(std::vector<int> classes, int* num) {
  std::map<int, int> rename;
  for (int& c : classes) {
    auto [it, inserted] = rename.emplace(c, static_cast<int>(rename.size()));
    c = it->second;
  }
  *num = static_cast<int>(rename.size());
  return classes;
}

}  // namespace

GreenSummary green_summary(const FiniteMonoidPresentation& m) {
  std::size_t n = m.size();
  std::vector<std::vector<int>> right(n), left(n), both(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (int g : m.generators()) {
      int r = m.mul(static_cast<int>(i), g);
      int l = m.mul(g, static_cast<int>(i));
      right[i].push_back(r);
      left[i].push_back(l);
      both[i].push_back(r);
      both[i].push_back(l);
    }
  }

  GreenSummary out;
  out.r_class_of = renumber_by_first_occurrence(scc_partition(n, right, &out.num_r), &out.num_r);
  out.l_class_of = renumber_by_first_occurrence(scc_partition(n, left, &out.num_l), &out.num_l);
  out.j_class_of = renumber_by_first_occurrence(scc_partition(n, both, &out.num_j), &out.num_j);

  std::map<std::pair<int, int>, int> h_ids;
  out.h_class_of.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto key = std::make_pair(out.r_class_of[i], out.l_class_of[i]);
    auto [it, inserted] = h_ids.emplace(key, static_cast<int>(h_ids.size()));
    out.h_class_of[i] = it->second;
  }
  out.num_h = static_cast<int>(h_ids.size());

  for (std::size_t i = 0; i < n; ++i) {
    if (m.is_idempotent(static_cast<int>(i))) out.idempotents.push_back(static_cast<int>(i));
  }

  // minimal ideal: the unique J-class with no edges into another class
  std::vector<bool> has_exit(out.num_j, false);
  for (std::size_t i = 0; i < n; ++i) {
    for (int t : both[i]) {
      if (out.j_class_of[t] != out.j_class_of[i]) has_exit[out.j_class_of[i]] = true;
    }
  }
  int min_class = -1;
  for (int c = 0; c < out.num_j; ++c) {
    if (!has_exit[c]) {
      if (min_class >= 0) throw Error(ErrorKind::internal, "minimum ideal is not unique");
      min_class = c;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (out.j_class_of[i] == min_class) out.minimal_ideal.push_back(static_cast<int>(i));
  }

  int idem = -1;
  for (int e : out.idempotents) {
    if (out.j_class_of[e] == min_class) {
      idem = e;
      break;
    }
  }
  if (idem < 0) throw Error(ErrorKind::internal, "minimal ideal of a finite monoid has an idempotent");
  for (int x : out.minimal_ideal) {
    if (out.h_class_of[x] == out.h_class_of[idem]) out.maximal_subgroup.push_back(x);
  }
  out.subgroup_table.assign(out.maximal_subgroup.size(),
                            std::vector<int>(out.maximal_subgroup.size()));
  for (std::size_t i = 0; i < out.maximal_subgroup.size(); ++i) {
    for (std::size_t j = 0; j < out.maximal_subgroup.size(); ++j) {
      int prod = m.mul(out.maximal_subgroup[i], out.maximal_subgroup[j]);
      auto it = std::lower_bound(out.maximal_subgroup.begin(), out.maximal_subgroup.end(), prod);
      if (it == out.maximal_subgroup.end() || *it != prod) {
        throw Error(ErrorKind::internal, "maximal subgroup is not closed");
      }
      out.subgroup_table[i][j] =
          static_cast<int>(it - out.maximal_subgroup.begin());
    }
  }

  out.is_group = out.minimal_ideal.size() == n;
  return out;
}

int eta(const FiniteMonoidPresentation& monoid, const Word& w) {
  check_word(monoid.alphabet(), w);
  int cur = monoid.identity();
  for (int a : w.letters()) cur = monoid.mul(cur, monoid.generator(a));
  return cur;
}

}  // namespace bifix
