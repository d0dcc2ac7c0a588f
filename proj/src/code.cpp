#include "bifix/code.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "bifix/dfa.hpp"
#include "bifix/error.hpp"

namespace bifix {

FiniteCode::FiniteCode(Alphabet alphabet, std::vector<Word> words)
    : alphabet_(std::move(alphabet)), words_(std::move(words)) {
  if (words_.empty()) throw_invalid("a code needs at least one word");
  for (const Word& w : words_) {
    if (w.empty()) throw_invalid("the empty word is excluded from codes");
    check_word(alphabet_, w);
  }
  std::sort(words_.begin(), words_.end(), length_lex_less);
  auto dup = std::adjacent_find(words_.begin(), words_.end());
  if (dup != words_.end()) throw_invalid("duplicate code word");
}

int FiniteCode::max_word_length() const {
  int m = 0;
  for (const Word& w : words_) m = std::max(m, w.size());
  return m;
}

bool FiniteCode::contains(const Word& w) const {
  return std::any_of(words_.begin(), words_.end(), [&](const Word& x) { return x == w; });
}

namespace {

bool is_prefix_of(const std::string& u, const std::string& v) {
  return u.size() <= v.size() && v.compare(0, u.size(), u) == 0;
}

Word concat_all(const std::vector<Word>& parts) {
  Word out;
  for (const Word& p : parts) out = out + p;
  return out;
}

}  // namespace

CodeFlags classify_code(const FiniteCode& code) {
  CodeFlags flags;
  std::vector<std::string> xs;
  for (const Word& w : code.words()) xs.push_back(w.to_bytes());

  flags.is_prefix = true;
  flags.is_suffix = true;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (i == j) continue;
      if (is_prefix_of(xs[i], xs[j])) flags.is_prefix = false;
      std::string ri(xs[i].rbegin(), xs[i].rend());
      std::string rj(xs[j].rbegin(), xs[j].rend());
      if (is_prefix_of(ri, rj)) flags.is_suffix = false;
    }
  }
  flags.is_bifix = flags.is_prefix && flags.is_suffix;

  // Sardinas-Patterson as a BFS over surplus suffixes. A state s means some
  // word has a factorization running ahead of another by exactly s, the two
  // factorizations differing in their first code word. Reaching surplus
  // epsilon exhibits a double factorization.
  struct Node {
    std::vector<Word> leader;    // parse of the full word so far
    std::vector<Word> follower;  // parse lagging behind by the surplus
  };
  std::map<std::string, Node> seen;
  std::queue<std::string> todo;
  std::optional<DoubleFactorization> witness;

  auto visit = [&](std::string surplus, Node node) {
    if (witness) return;
    if (seen.count(surplus)) return;
    seen.emplace(surplus, std::move(node));
    todo.push(std::move(surplus));
  };

  for (std::size_t i = 0; i < xs.size() && !witness; ++i) {
    for (std::size_t j = 0; j < xs.size() && !witness; ++j) {
      if (i == j) continue;
      if (is_prefix_of(xs[i], xs[j])) {
        if (xs[i].size() == xs[j].size()) continue;  // impossible: words distinct
        std::string surplus = xs[j].substr(xs[i].size());
        visit(std::move(surplus), Node{{code.words()[j]}, {code.words()[i]}});
      }
    }
  }

  while (!todo.empty() && !witness) {
    std::string surplus = std::move(todo.front());
    todo.pop();
    Node node = seen.at(surplus);
    for (std::size_t i = 0; i < xs.size() && !witness; ++i) {
      const std::string& x = xs[i];
      const Word& xw = code.words()[i];
      if (x == surplus) {
        std::vector<Word> follower = node.follower;
        follower.push_back(xw);
        DoubleFactorization df;
        df.word = concat_all(node.leader);
        df.left = node.leader;
        df.right = std::move(follower);
        witness = std::move(df);
      } else if (is_prefix_of(surplus, x)) {
        // follower overtakes: roles swap
        std::vector<Word> follower = node.follower;
        follower.push_back(xw);
        visit(x.substr(surplus.size()), Node{std::move(follower), node.leader});
      } else if (is_prefix_of(x, surplus)) {
        std::vector<Word> follower = node.follower;
        follower.push_back(xw);
        visit(surplus.substr(x.size()), Node{node.leader, std::move(follower)});
      }
    }
  }

  flags.is_code = !witness.has_value();
  flags.counterexample = std::move(witness);
  return flags;
}

namespace {

void check_same_alphabet(const FiniteCode& code, const FactorSet& factors) {
  if (!(code.alphabet() == factors.alphabet())) {
    throw_invalid("code and factor set must share an alphabet");
  }
}

// Scan of all factors in length-then-lex order against a state predicate of
// the given automaton; reports the first word landing in a dead state.
CompletenessVerdict scan_factors(const FactorSet& factors, const Dfa& dfa, bool reversed) {
  std::vector<bool> alive = dfa.coaccessible();
  CompletenessVerdict verdict;
  verdict.bound = factors.max_length();
  for (int k = 1; k <= factors.max_length(); ++k) {
    std::size_t n = factors.count(k);
    for (std::size_t i = 0; i < n; ++i) {
      std::string_view w = factors.word_bytes(k, i);
      int state = dfa.initial();
      if (reversed) {
        for (int p = k - 1; p >= 0; --p) state = dfa.step(state, static_cast<unsigned char>(w[p]));
      } else {
        for (int p = 0; p < k; ++p) state = dfa.step(state, static_cast<unsigned char>(w[p]));
      }
      if (!alive[state]) {
        verdict.holds = false;
        verdict.counterexample = Word::from_bytes(w);
        return verdict;
      }
    }
  }
  verdict.holds = true;
  return verdict;
}

}  // namespace

CompletenessVerdict is_right_F_complete(const FiniteCode& code, const FactorSet& factors) {
  check_same_alphabet(code, factors);
  return scan_factors(factors, dfa_of_star(code), false);
}

CompletenessVerdict is_left_F_complete(const FiniteCode& code, const FactorSet& factors) {
  check_same_alphabet(code, factors);
  std::vector<Word> rev;
  for (const Word& w : code.words()) rev.push_back(w.reversed());
  FiniteCode mirrored(code.alphabet(), std::move(rev));
  return scan_factors(factors, dfa_of_star(mirrored), true);
}

MaximalityResult is_F_maximal_prefix(const FiniteCode& code, const FactorSet& factors) {
  check_same_alphabet(code, factors);
  if (!classify_code(code).is_prefix) {
    throw_invalid("F-maximality test requires a prefix code");
  }
  if (code.max_word_length() > factors.max_length()) {
    throw_invalid("code word longer than the factor window");
  }
  std::vector<std::string> xs;
  for (const Word& w : code.words()) {
    std::string b = w.to_bytes();
    if (!factors.contains_bytes(b)) {
      throw_invalid("prefix code is not contained in the factor set");
    }
    xs.push_back(std::move(b));
  }

  MaximalityResult res;
  res.bound = factors.max_length();
  for (int k = 1; k <= factors.max_length(); ++k) {
    std::size_t n = factors.count(k);
    for (std::size_t i = 0; i < n; ++i) {
      std::string w(factors.word_bytes(k, i));
      bool comparable = false;
      for (const std::string& x : xs) {
        if (is_prefix_of(x, w) || is_prefix_of(w, x)) {
          comparable = true;
          break;
        }
      }
      if (!comparable) {
        res.maximal = false;
        res.extension = Word::from_bytes(w);
        return res;
      }
    }
  }
  res.maximal = true;
  return res;
}

BifixCompletenessResult is_F_complete_bifix(const FiniteCode& code, const FactorSet& factors) {
  check_same_alphabet(code, factors);
  CodeFlags flags = classify_code(code);
  if (!flags.is_bifix) throw_invalid("completeness test requires a bifix code");
  BifixCompletenessResult res;
  res.left = is_left_F_complete(code, factors);
  res.right = is_right_F_complete(code, factors);
  res.complete = res.left.holds && res.right.holds;
  if (res.left.holds != res.right.holds && factors.max_length() >= 2) {
    int probe = std::min(4, factors.max_length() - 1);
    if (is_recurrent_up_to(factors, probe).recurrent) res.consistency_alarm = true;
  }
  return res;
}

IntersectionResult intersect_with_F(const FiniteCode& z, const FactorSet& factors) {
  check_same_alphabet(z, factors);
  std::vector<Word> kept;
  bool window_ok = true;
  for (const Word& w : z.words()) {
    if (w.size() > factors.max_length()) {
      window_ok = false;
      continue;
    }
    if (factors.contains(w)) kept.push_back(w);
  }
  if (kept.empty()) throw_invalid("intersection with the factor window is empty");
  return {FiniteCode(z.alphabet(), std::move(kept)), window_ok};
}

IntersectionResult intersect_power_with_F(int n, const FactorSet& factors) {
  if (n < 1) throw_invalid("power code exponent must be positive");
  if (n > factors.max_length()) {
    throw_resource_limit("factor window " + std::to_string(factors.max_length()) +
                         " too small for A^" + std::to_string(n));
  }
  std::vector<Word> words;
  std::size_t m = factors.count(n);
  words.reserve(m);
  for (std::size_t i = 0; i < m; ++i) words.push_back(factors.word(n, i));
  if (words.empty()) throw_invalid("factor window has no words of length " + std::to_string(n));
  return {FiniteCode(factors.alphabet(), std::move(words)), true};
}

IntersectionResult intersect_dfa_with_F(const Dfa& z, const FactorSet& factors) {
  if (!(z.alphabet() == factors.alphabet())) {
    throw_invalid("dfa and factor set must share an alphabet");
  }
  std::vector<Word> kept;
  for (int k = 1; k <= factors.max_length(); ++k) {
    std::size_t n = factors.count(k);
    for (std::size_t i = 0; i < n; ++i) {
      std::string_view w = factors.word_bytes(k, i);
      int state = z.initial();
      for (char c : w) state = z.step(state, static_cast<unsigned char>(c));
      if (z.is_accepting(state)) kept.push_back(Word::from_bytes(w));
    }
  }
  if (kept.empty()) throw_invalid("intersection with the factor window is empty");
  long long longest = z.longest_accepted();
  bool window_ok = longest >= 0 && longest <= factors.max_length();
  return {FiniteCode(factors.alphabet(), std::move(kept)), window_ok};
}

std::vector<Word> parse(const FiniteCode& code, const Word& w) {
  CodeFlags flags = classify_code(code);
  if (!flags.is_code) throw_invalid("parse requires a code");
  check_word(code.alphabet(), w);
  std::string bytes = w.to_bytes();
  std::size_t n = bytes.size();
  std::vector<int> back(n + 1, -1);  // index of the code word ending here
  std::vector<bool> reach(n + 1, false);
  reach[0] = true;
  std::vector<std::string> xs;
  for (const Word& x : code.words()) xs.push_back(x.to_bytes());
  for (std::size_t i = 0; i <= n; ++i) {
    if (!reach[i]) continue;
    for (std::size_t xi = 0; xi < xs.size(); ++xi) {
      const std::string& x = xs[xi];
      if (i + x.size() <= n && bytes.compare(i, x.size(), x) == 0 && !reach[i + x.size()]) {
        reach[i + x.size()] = true;
        back[i + x.size()] = static_cast<int>(xi);
      }
    }
  }
  if (!reach[n]) throw Error(ErrorKind::not_in_star, "word is not in the star of the code");
  std::vector<Word> parts;
  std::size_t pos = n;
  while (pos > 0) {
    const Word& x = code.words()[back[pos]];
    parts.push_back(x);
    pos -= x.size();
  }
  std::reverse(parts.begin(), parts.end());
  return parts;
}

}  // namespace bifix
