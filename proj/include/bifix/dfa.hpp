#pragma once

#include <vector>

#include "bifix/alphabet.hpp"

namespace bifix {

class FiniteCode;

/// A complete deterministic automaton over an alphabet: total transition
/// table indexed [letter][state].
class Dfa {
 public:
  Dfa(Alphabet alphabet, int num_states, int initial, std::vector<int> accepting,
      std::vector<std::vector<int>> delta);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  int num_states() const noexcept { return num_states_; }
  int initial() const noexcept { return initial_; }
  const std::vector<int>& accepting() const noexcept { return accepting_; }
  bool is_accepting(int state) const;
  int step(int state, int letter) const { return delta_.at(letter).at(state); }
  const std::vector<std::vector<int>>& delta() const noexcept { return delta_; }

  int run(int state, const Word& w) const;
  bool accepts(const Word& w) const;

  /// States from which some accepting state is reachable.
  std::vector<bool> coaccessible() const;

  /// Longest accepted word length: -1 when no word is accepted, -2 when the
  /// accepted language is infinite.
  long long longest_accepted() const;

 private:
  Alphabet alphabet_;
  int num_states_;
  int initial_;
  std::vector<int> accepting_;
  std::vector<std::vector<int>> delta_;
};

/// Minimal complete DFA of X^* for a finite set of nonempty words: trie with
/// restart transitions, determinized by subset construction, then Hopcroft
/// minimization.
Dfa dfa_of_star(const FiniteCode& code);

/// Minimal DFA of (A^n)^*: an n-cycle with every letter advancing one step.
Dfa power_code_dfa(const Alphabet& alphabet, int n);

/// Hopcroft minimization of a complete accessible DFA.
Dfa minimize(const Dfa& dfa);

}  // namespace bifix
