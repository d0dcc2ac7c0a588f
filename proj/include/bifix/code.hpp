#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bifix/alphabet.hpp"
#include "bifix/language.hpp"

namespace bifix {

class Dfa;

/// A finite set of nonempty words over an alphabet, kept sorted in
/// length-then-lexicographic order.
class FiniteCode {
 public:
  FiniteCode(Alphabet alphabet, std::vector<Word> words);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const std::vector<Word>& words() const noexcept { return words_; }
  std::size_t size() const noexcept { return words_.size(); }
  int max_word_length() const;
  bool contains(const Word& w) const;

  bool operator==(const FiniteCode&) const = default;

 private:
  Alphabet alphabet_;
  std::vector<Word> words_;
};

/// A word with two distinct factorizations over the same set.
struct DoubleFactorization {
  Word word;
  std::vector<Word> left;
  std::vector<Word> right;
};

struct CodeFlags {
  bool is_code = false;
  bool is_prefix = false;
  bool is_suffix = false;
  bool is_bifix = false;
  std::optional<DoubleFactorization> counterexample;
};

/// Verdict of a one-sided completeness scan over a factor window.
struct CompletenessVerdict {
  bool holds = false;
  int bound = 0;                     // window the scan covered
  std::optional<Word> counterexample;  // least failing factor, length-then-lex
};

struct MaximalityResult {
  bool maximal = false;
  int bound = 0;
  std::optional<Word> extension;  // word keeping X a prefix code, if any
};

struct BifixCompletenessResult {
  bool complete = false;
  CompletenessVerdict left;
  CompletenessVerdict right;
  /// Set when the factor window is recurrent at a small scale yet the two
  /// one-sided verdicts disagree; signals a bug or an insufficient window.
  bool consistency_alarm = false;
};

struct IntersectionResult {
  FiniteCode code;
  /// true when the window provably saw every element of Z (max |z| <= L).
  bool complete_window = false;
};

/// Sardinas-Patterson decision with an explicit double factorization when
/// the set is not a code; prefix/suffix flags by pairwise comparison.
CodeFlags classify_code(const FiniteCode& code);

/// Every factor of length <= L a prefix of X^*? Decided exactly against the
/// prefix-closure of the X^* automaton; scans factors in length-then-lex
/// order and reports the first failure.
CompletenessVerdict is_right_F_complete(const FiniteCode& code, const FactorSet& factors);

CompletenessVerdict is_left_F_complete(const FiniteCode& code, const FactorSet& factors);

/// For a prefix code X inside F: search for a word of F \ X keeping X a
/// prefix code. Finding none certifies F-maximality within the window.
MaximalityResult is_F_maximal_prefix(const FiniteCode& code, const FactorSet& factors);

BifixCompletenessResult is_F_complete_bifix(const FiniteCode& code, const FactorSet& factors);

IntersectionResult intersect_with_F(const FiniteCode& z, const FactorSet& factors);
IntersectionResult intersect_power_with_F(int n, const FactorSet& factors);
IntersectionResult intersect_dfa_with_F(const Dfa& z, const FactorSet& factors);

/// The unique X-factorization of w. Throws not-in-star when w is not in X^*
/// and invalid-input when X is not a code.
std::vector<Word> parse(const FiniteCode& code, const Word& w);

}  // namespace bifix
