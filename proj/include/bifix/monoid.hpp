#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "bifix/alphabet.hpp"
#include "bifix/dfa.hpp"

namespace bifix {

class FiniteCode;

/// A total map on DFA states, the carrier of transition-monoid elements.
using Transformation = std::vector<int>;

/// A finite monoid of state transformations, closed under composition and
/// containing the identity; letters map to generator elements.
class FiniteMonoidPresentation {
 public:
  FiniteMonoidPresentation(Alphabet alphabet, std::vector<Transformation> elements,
                           int identity, std::vector<int> letter_generators);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const Transformation& element(int i) const { return elements_.at(i); }
  int identity() const noexcept { return identity_; }
  int generator(int letter) const { return letter_generators_.at(letter); }
  const std::vector<int>& generators() const noexcept { return letter_generators_; }
  int degree() const { return static_cast<int>(elements_.front().size()); }

  /// Index of the composition element_i followed by element_j.
  int mul(int i, int j) const;

  int index_of(const Transformation& t) const;  // -1 when absent

  bool is_idempotent(int i) const { return mul(i, i) == i; }

 private:
  Alphabet alphabet_;
  std::vector<Transformation> elements_;
  int identity_;
  std::vector<int> letter_generators_;
  std::vector<std::size_t> lookup_order_;  // element ids sorted by transformation
};

struct GreenSummary {
  std::vector<int> r_class_of;
  std::vector<int> l_class_of;
  std::vector<int> j_class_of;
  std::vector<int> h_class_of;
  int num_r = 0, num_l = 0, num_j = 0, num_h = 0;
  std::vector<int> idempotents;
  std::vector<int> minimal_ideal;  // element ids of the least J-class
  std::vector<int> maximal_subgroup;  // H-class of an idempotent in the minimal ideal
  std::vector<std::vector<int>> subgroup_table;  // indices into maximal_subgroup
  bool is_group = false;
};

struct GroupCodeResult {
  bool group = false;
  std::optional<std::size_t> order;
};

/// All transformations generated by the letters of a DFA, closed under
/// composition (BFS closure), identity included. Throws resource-limit when
/// the closure exceeds element_cap.
FiniteMonoidPresentation transition_monoid(const Dfa& dfa, std::size_t element_cap = 100000);

/// A set is a group code iff the syntactic monoid of its star is a group,
/// i.e. iff every letter acts as a permutation on the minimal DFA.
GroupCodeResult is_group_code(const FiniteCode& code, std::size_t element_cap = 100000);
GroupCodeResult is_group_code_dfa(const Dfa& minimal_star_dfa, std::size_t element_cap = 100000);

/// Green's relations via mutual reachability in the one-sided Cayley graphs;
/// minimal ideal and its maximal subgroup read off the J-order.
GreenSummary green_summary(const FiniteMonoidPresentation& monoid);

/// Image of a word under the syntactic morphism (element index).
int eta(const FiniteMonoidPresentation& monoid, const Word& w);

}  // namespace bifix
