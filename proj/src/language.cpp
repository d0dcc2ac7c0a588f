#include "bifix/language.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "bifix/error.hpp"

namespace bifix {

namespace {

// Positions of a flat level as indices; words of width w at offset i*w.
std::size_t level_count(const std::string& level, int width) {
  return width == 0 ? 0 : level.size() / static_cast<std::size_t>(width);
}

bool level_contains(const std::string& level, int width, std::string_view bytes) {
  std::size_t n = level_count(level, width);
  std::size_t lo = 0, hi = n;
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    std::string_view w(level.data() + mid * width, width);
    if (w < bytes) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (lo == n) return false;
  return std::string_view(level.data() + lo * width, width) == bytes;
}

}  // namespace

FactorSet::FactorSet(Alphabet alphabet, int max_length, std::vector<std::string> levels,
                     bool exact)
    : alphabet_(std::move(alphabet)),
      max_length_(max_length),
      levels_(std::move(levels)),
      exact_(exact) {
  if (max_length_ < 1) throw_invalid("factor set needs max_length >= 1");
  if (static_cast<int>(levels_.size()) != max_length_) {
    throw_invalid("factor set level count does not match max_length");
  }
  for (int k = 1; k <= max_length_; ++k) {
    const std::string& lvl = levels_[k - 1];
    if (lvl.size() % static_cast<std::size_t>(k) != 0) {
      throw_invalid("level size not a multiple of its word length");
    }
    std::size_t n = level_count(lvl, k);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      std::string_view a(lvl.data() + i * k, k);
      std::string_view b(lvl.data() + (i + 1) * k, k);
      if (!(a < b)) throw_invalid("level words must be sorted and distinct");
    }
    for (char c : lvl) {
      if (static_cast<unsigned char>(c) >= alphabet_.size()) {
        throw_invalid("factor letter out of alphabet");
      }
    }
  }
  check_factorial();
}

std::size_t FactorSet::count(int length) const {
  if (length == 0) return 1;
  if (length < 1 || length > max_length_) throw_invalid("length out of window");
  return level_count(levels_[length - 1], length);
}

std::string_view FactorSet::level(int length) const {
  if (length < 1 || length > max_length_) throw_invalid("length out of window");
  return levels_[length - 1];
}

std::string_view FactorSet::word_bytes(int length, std::size_t index) const {
  std::string_view lvl = level(length);
  return lvl.substr(index * length, length);
}

Word FactorSet::word(int length, std::size_t index) const {
  return Word::from_bytes(word_bytes(length, index));
}

bool FactorSet::contains_bytes(std::string_view bytes) const {
  int len = static_cast<int>(bytes.size());
  if (len == 0) return true;
  if (len > max_length_) throw_invalid("membership query beyond window");
  return level_contains(levels_[len - 1], len, bytes);
}

bool FactorSet::contains(const Word& w) const { return contains_bytes(w.to_bytes()); }

std::size_t FactorSet::total_bytes() const {
  std::size_t sum = 0;
  for (const auto& l : levels_) sum += l.size();
  return sum;
}

void FactorSet::check_factorial() const {
  for (int k = 2; k <= max_length_; ++k) {
    const std::string& lvl = levels_[k - 1];
    std::size_t n = level_count(lvl, k);
    for (std::size_t i = 0; i < n; ++i) {
      std::string_view w(lvl.data() + i * k, k);
      if (!contains_bytes(w.substr(0, k - 1)) || !contains_bytes(w.substr(1, k - 1))) {
        throw_invalid("factor set is not factorial at length " + std::to_string(k));
      }
    }
  }
}

bool FactorSet::is_prolongable_below(int limit) const {
  limit = std::min(limit, max_length_);
  for (int k = 1; k + 1 <= limit; ++k) {
    std::size_t n = count(k);
    for (std::size_t i = 0; i < n; ++i) {
      std::string_view w = word_bytes(k, i);
      bool left = false, right = false;
      for (int a = 0; a < alphabet_.size() && !(left && right); ++a) {
        std::string ext;
        if (!left) {
          ext = static_cast<char>(a) + std::string(w);
          left = left || contains_bytes(ext);
        }
        if (!right) {
          ext = std::string(w) + static_cast<char>(a);
          right = right || contains_bytes(ext);
        }
      }
      if (!left || !right) return false;
    }
  }
  return true;
}

bool FactorSet::levels_nonempty(int limit) const {
  limit = std::min(limit, max_length_);
  for (int k = 1; k <= limit; ++k) {
    if (count(k) == 0) return false;
  }
  return true;
}

RauzyGraph rauzy_graph(const FactorSet& factors, int order) {
  if (order < 1 || order + 1 > factors.max_length()) {
    throw_invalid("rauzy graph order out of window");
  }
  RauzyGraph g;
  g.order = order;
  std::size_t n = factors.count(order);
  g.vertices.reserve(n);
  for (std::size_t i = 0; i < n; ++i) g.vertices.push_back(factors.word(order, i));

  auto vertex_index = [&](std::string_view bytes) {
    std::string_view lvl = factors.level(order);
    std::size_t lo = 0, hi = n;
    while (lo < hi) {
      std::size_t mid = (lo + hi) / 2;
      std::string_view w = lvl.substr(mid * order, order);
      if (w < bytes) {
        lo = mid + 1;
      } else {
        hi = mid;
      }
    }
    return static_cast<int>(lo);
  };

  std::size_t m = factors.count(order + 1);
  for (std::size_t i = 0; i < m; ++i) {
    std::string_view w = factors.word_bytes(order + 1, i);
    RauzyGraph::Edge e;
    e.from = vertex_index(w.substr(0, order));
    e.to = vertex_index(w.substr(1, order));
    e.label = Word::from_bytes(w);
    g.edges.push_back(std::move(e));
  }
  return g;
}

bool RauzyGraph::strongly_connected() const {
  if (vertices.empty()) return false;
  std::size_t n = vertices.size();
  std::vector<std::vector<int>> fwd(n), bwd(n);
  for (const auto& e : edges) {
    fwd[e.from].push_back(e.to);
    bwd[e.to].push_back(e.from);
  }
  auto full_reach = [&](const std::vector<std::vector<int>>& adj) {
    std::vector<bool> seen(n, false);
    std::vector<int> stack{0};
    seen[0] = true;
    std::size_t visits = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : adj[v]) {
        if (!seen[u]) {
          seen[u] = true;
          ++visits;
          stack.push_back(u);
        }
      }
    }
    return visits == n;
  };
  return full_reach(fwd) && full_reach(bwd);
}

RecurrenceResult is_recurrent_up_to(const FactorSet& factors, int k_max) {
  if (k_max < 1 || k_max + 1 > factors.max_length()) {
    throw_invalid("recurrence order out of window");
  }
  for (int k = 1; k <= k_max; ++k) {
    if (!rauzy_graph(factors, k).strongly_connected()) {
      return {false, k};
    }
  }
  return {true, std::nullopt};
}

namespace {

bool occurs_in(std::string_view needle, std::string_view haystack) {
  return haystack.find(needle) != std::string_view::npos;
}

// Does every word of level R contain every word of level k?
// On failure reports the offending pair.
bool all_occur(const FactorSet& f, int k, int R, std::size_t* bad_word,
               std::size_t* bad_factor) {
  std::size_t nk = f.count(k);
  std::size_t nR = f.count(R);
  for (std::size_t j = 0; j < nR; ++j) {
    std::string_view w = f.word_bytes(R, j);
    for (std::size_t i = 0; i < nk; ++i) {
      if (!occurs_in(f.word_bytes(k, i), w)) {
        if (bad_word) *bad_word = j;
        if (bad_factor) *bad_factor = i;
        return false;
      }
    }
  }
  return true;
}

}  // namespace

UniformRecurrenceResult is_uniformly_recurrent_up_to(const FactorSet& factors, int k) {
  if (k < 1 || k >= factors.max_length()) throw_invalid("uniform recurrence order out of window");
  int L = factors.max_length();
  UniformRecurrenceResult res;
  std::size_t bad_word = 0, bad_factor = 0;
  if (!all_occur(factors, k, L, &bad_word, &bad_factor)) {
    res.uniform = false;
    res.missing_factor = factors.word(k, bad_factor);
    res.counterexample = factors.word(L, bad_word);
    return res;
  }
  // predicate is monotone in R, so binary search the least witness
  int lo = k, hi = L;
  while (lo < hi) {
    int mid = lo + (hi - lo) / 2;
    if (all_occur(factors, k, mid, nullptr, nullptr)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  res.uniform = true;
  res.recurrence_bound = lo;
  return res;
}

ExtensionGraph extension_graph(const FactorSet& factors, const Word& center) {
  if (center.size() + 2 > factors.max_length()) {
    throw_invalid("extension graph center too long for window");
  }
  std::string wb = center.to_bytes();
  if (!center.empty() && !factors.contains_bytes(wb)) {
    throw_invalid("extension graph center not in the factor set");
  }
  ExtensionGraph g;
  g.center = center;
  for (int a = 0; a < factors.alphabet().size(); ++a) {
    if (factors.contains_bytes(static_cast<char>(a) + wb)) g.left.push_back(a);
    if (factors.contains_bytes(wb + static_cast<char>(a))) g.right.push_back(a);
  }
  for (int a : g.left) {
    for (int b : g.right) {
      if (factors.contains_bytes(static_cast<char>(a) + wb + static_cast<char>(b))) {
        g.edges.emplace_back(a, b);
      }
    }
  }
  return g;
}

ExtensionGraph::Kind ExtensionGraph::classify() const {
  std::size_t n = left.size() + right.size();
  if (n == 0) return Kind::Disconnected;
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  auto left_id = [&](int a) {
    return static_cast<int>(std::lower_bound(left.begin(), left.end(), a) - left.begin());
  };
  auto right_id = [&](int b) {
    return static_cast<int>(left.size() +
                            (std::lower_bound(right.begin(), right.end(), b) - right.begin()));
  };
  for (auto [a, b] : edges) {
    parent[find(left_id(a))] = find(right_id(b));
  }
  std::set<int> roots;
  for (std::size_t i = 0; i < n; ++i) roots.insert(find(static_cast<int>(i)));
  if (roots.size() > 1) return Kind::Disconnected;
  return edges.size() == n - 1 ? Kind::Tree : Kind::ConnectedNotTree;
}

WordClassification classify_words(const FactorSet& factors, int max_center) {
  if (max_center < 0 || max_center + 2 > factors.max_length()) {
    throw_invalid("classification window too long for factor set");
  }
  WordClassification out;
  bool all_tree = true, all_connected = true;
  for (int len = 0; len <= max_center; ++len) {
    std::size_t n = len == 0 ? 1 : factors.count(len);
    for (std::size_t i = 0; i < n; ++i) {
      Word w = len == 0 ? Word() : factors.word(len, i);
      auto kind = extension_graph(factors, w).classify();
      out.items.push_back({w, kind});
      if (kind != ExtensionGraph::Kind::Tree && !out.first_not_tree) {
        out.first_not_tree = w;
      }
      if (kind == ExtensionGraph::Kind::Disconnected && !out.first_disconnected) {
        out.first_disconnected = w;
      }
      if (kind != ExtensionGraph::Kind::Tree) all_tree = false;
      if (kind == ExtensionGraph::Kind::Disconnected) all_connected = false;
    }
    if (all_tree) out.dendric_up_to = len;
    if (all_connected) out.connected_up_to = len;
  }
  return out;
}

std::size_t complexity(const FactorSet& factors, int k) {
  if (k < 0 || k > factors.max_length()) throw_invalid("complexity order out of window");
  return factors.count(k);
}

FactorSet periodic_word_factors(const Alphabet& alphabet, const Word& period, int max_length) {
  if (period.empty()) throw_invalid("period word must be nonempty");
  check_word(alphabet, period);
  std::string p = period.to_bytes();
  std::string carpet;
  while (static_cast<int>(carpet.size()) < max_length + static_cast<int>(p.size())) carpet += p;
  std::vector<std::string> levels(max_length);
  for (int k = 1; k <= max_length; ++k) {
    std::set<std::string> distinct;
    for (std::size_t i = 0; i + k <= carpet.size() && i < p.size(); ++i) {
      distinct.insert(carpet.substr(i, k));
    }
    std::string flat;
    for (const auto& w : distinct) flat += w;
    levels[k - 1] = std::move(flat);
  }
  return FactorSet(alphabet, max_length, std::move(levels));
}

FactorSet factor_set_from_words(const Alphabet& alphabet, int max_length,
                                const std::vector<Word>& words, bool exact) {
  std::vector<std::set<std::string>> sets(max_length);
  for (const auto& w : words) {
    check_word(alphabet, w);
    if (w.empty()) continue;
    if (w.size() > max_length) throw_invalid("word longer than the factor window");
    sets[w.size() - 1].insert(w.to_bytes());
  }
  std::vector<std::string> levels(max_length);
  for (int k = 1; k <= max_length; ++k) {
    std::string flat;
    for (const auto& w : sets[k - 1]) flat += w;
    levels[k - 1] = std::move(flat);
  }
  return FactorSet(alphabet, max_length, std::move(levels), exact);
}

}  // namespace bifix
