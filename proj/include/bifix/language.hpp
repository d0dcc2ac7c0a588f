#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bifix/alphabet.hpp"

namespace bifix {

/// All factors of a language up to a length bound, grouped by length.
///
/// Each level stores its words lexicographically sorted in one flat byte
/// buffer (all words of a level share the same length), which keeps the
/// large windows needed by higher-power decodings compact and binary
/// searchable. Level sets are factorial by construction; emptiness of a
/// level is allowed (decoded languages can be finite).
class FactorSet {
 public:
  /// levels[k-1] holds the concatenated, sorted, distinct words of length k.
  FactorSet(Alphabet alphabet, int max_length, std::vector<std::string> levels,
            bool exact = true);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  int max_length() const noexcept { return max_length_; }

  /// true when the set is certified complete for every length <= max_length.
  bool exact() const noexcept { return exact_; }

  std::size_t count(int length) const;
  std::string_view level(int length) const;            // flat bytes
  std::string_view word_bytes(int length, std::size_t index) const;
  Word word(int length, std::size_t index) const;

  bool contains_bytes(std::string_view bytes) const;  // empty word -> true
  bool contains(const Word& w) const;

  std::size_t total_bytes() const;

  /// Every word of every level has both its (k-1)-prefix and (k-1)-suffix in
  /// the level below. Throws on violation.
  void check_factorial() const;

  /// true iff every word of length k < limit extends by one letter on each
  /// side within the set (the subshift-language prolongability property).
  bool is_prolongable_below(int limit) const;

  bool levels_nonempty(int limit) const;

  bool operator==(const FactorSet&) const = default;

 private:
  Alphabet alphabet_;
  int max_length_;
  std::vector<std::string> levels_;
  bool exact_;
};

/// Directed graph on the length-k factors whose edges are the length-(k+1)
/// factors (u -> v labelled w when u = w[0..k) and v = w[1..k+1)).
struct RauzyGraph {
  int order = 0;
  std::vector<Word> vertices;
  struct Edge {
    int from;
    int to;
    Word label;
  };
  std::vector<Edge> edges;

  bool strongly_connected() const;
};

/// Bipartite extension graph of a center word: left/right extension letters
/// with an edge (a,b) for each a.w.b in the set.
struct ExtensionGraph {
  Word center;
  std::vector<int> left;   // letters a with a.w in F
  std::vector<int> right;  // letters b with w.b in F
  std::vector<std::pair<int, int>> edges;

  enum class Kind { Tree, ConnectedNotTree, Disconnected };
  Kind classify() const;
};

struct RecurrenceResult {
  bool recurrent = false;
  std::optional<int> failing_order;
};

struct UniformRecurrenceResult {
  bool uniform = false;
  std::optional<int> recurrence_bound;     // least R: every k-factor occurs in every R-factor
  std::optional<Word> missing_factor;      // a k-factor witnessing failure
  std::optional<Word> counterexample;      // a max-length factor missing it
};

struct WordClassification {
  struct Item {
    Word center;
    ExtensionGraph::Kind kind;
  };
  std::vector<Item> items;  // ordered by length then lex, starting at the empty word
  std::optional<int> dendric_up_to;    // largest c with all centers |w| <= c trees
  std::optional<int> connected_up_to;  // largest c with all centers |w| <= c connected
  std::optional<Word> first_not_tree;
  std::optional<Word> first_disconnected;
};

RauzyGraph rauzy_graph(const FactorSet& factors, int order);

/// Recurrence at scale: all Rauzy graphs of order <= k_max strongly
/// connected. Reports the least failing order otherwise.
RecurrenceResult is_recurrent_up_to(const FactorSet& factors, int k_max);

/// Uniform recurrence at scale for a fixed order k: searches the least
/// R <= max_length such that every length-k factor occurs in every
/// length-R factor.
UniformRecurrenceResult is_uniformly_recurrent_up_to(const FactorSet& factors, int k);

ExtensionGraph extension_graph(const FactorSet& factors, const Word& center);

/// Extension graphs of every center of length <= max_center (including the
/// empty word), with the strongest property holding across the window.
WordClassification classify_words(const FactorSet& factors, int max_center);

/// Number of factors of the given length.
std::size_t complexity(const FactorSet& factors, int k);

/// Factors of the periodic bi-infinite word (period)^inf up to max_length.
FactorSet periodic_word_factors(const Alphabet& alphabet, const Word& period, int max_length);

/// Build a FactorSet from explicit words (tests, JSON input); validates the
/// factorial invariant.
FactorSet factor_set_from_words(const Alphabet& alphabet, int max_length,
                                const std::vector<Word>& words, bool exact = true);

}  // namespace bifix
