#include <doctest.h>

#include <random>
#include <set>

#include "bifix/code.hpp"
#include "bifix/dfa.hpp"
#include "bifix/error.hpp"
#include "bifix/monoid.hpp"
#include "bifix/text_format.hpp"

using namespace bifix;

namespace {

Alphabet ab() { return Alphabet::lowercase(2); }

FiniteCode code_of(const std::string& text) { return parse_code(ab(), text); }

// naive Green oracle from the definitions: x <=_R y iff x in yM, etc.
struct NaiveGreen {
  std::vector<std::vector<bool>> r_eq, l_eq, j_eq;

  explicit NaiveGreen(const FiniteMonoidPresentation& m) {
    std::size_t n = m.size();
    auto right_set = [&](int x) {
      std::set<int> s;
      for (std::size_t k = 0; k < n; ++k) s.insert(m.mul(x, static_cast<int>(k)));
      return s;
    };
    auto left_set = [&](int x) {
      std::set<int> s;
      for (std::size_t k = 0; k < n; ++k) s.insert(m.mul(static_cast<int>(k), x));
      return s;
    };
    auto two_sided = [&](int x) {
      std::set<int> s;
      for (std::size_t u = 0; u < n; ++u) {
        int ux = m.mul(static_cast<int>(u), x);
        for (std::size_t v = 0; v < n; ++v) s.insert(m.mul(ux, static_cast<int>(v)));
      }
      return s;
    };
    std::vector<std::set<int>> rs(n), ls(n), js(n);
    for (std::size_t x = 0; x < n; ++x) {
      rs[x] = right_set(static_cast<int>(x));
      ls[x] = left_set(static_cast<int>(x));
      js[x] = two_sided(static_cast<int>(x));
    }
    auto eq_table = [&](const std::vector<std::set<int>>& sets) {
      std::vector<std::vector<bool>> eq(n, std::vector<bool>(n));
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          bool xy = sets[y].count(static_cast<int>(x)) > 0;  // x in yM...
          bool yx = sets[x].count(static_cast<int>(y)) > 0;
          eq[x][y] = xy && yx;
        }
      }
      return eq;
    };
    r_eq = eq_table(rs);
    l_eq = eq_table(ls);
    j_eq = eq_table(js);
  }
};

void check_green_against_oracle(const FiniteMonoidPresentation& m) {
  GreenSummary g = green_summary(m);
  NaiveGreen oracle(m);
  std::size_t n = m.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      CHECK((g.r_class_of[x] == g.r_class_of[y]) == oracle.r_eq[x][y]);
      CHECK((g.l_class_of[x] == g.l_class_of[y]) == oracle.l_eq[x][y]);
      CHECK((g.j_class_of[x] == g.j_class_of[y]) == oracle.j_eq[x][y]);
      CHECK((g.h_class_of[x] == g.h_class_of[y]) ==
            (oracle.r_eq[x][y] && oracle.l_eq[x][y]));
    }
  }
  // minimal ideal elements are exactly those J-below every element
  std::set<int> min_ideal(g.minimal_ideal.begin(), g.minimal_ideal.end());
  for (std::size_t x = 0; x < n; ++x) {
    bool below_all = true;
    for (std::size_t y = 0; y < n && below_all; ++y) {
      // x <=_J y iff x in MyM
      std::set<int> myn;
      for (std::size_t u = 0; u < n; ++u) {
        int uy = m.mul(static_cast<int>(u), static_cast<int>(y));
        for (std::size_t v = 0; v < n; ++v) myn.insert(m.mul(uy, static_cast<int>(v)));
      }
      below_all = myn.count(static_cast<int>(x)) > 0;
    }
    CHECK(below_all == (min_ideal.count(static_cast<int>(x)) > 0));
  }
}

}  // namespace

TEST_CASE("dfa of star shapes") {
  // parity automaton of (A^2)^*
  FiniteCode a2(ab(), {parse_word(ab(), "aa"), parse_word(ab(), "ab"), parse_word(ab(), "ba"),
                       parse_word(ab(), "bb")});
  Dfa parity = dfa_of_star(a2);
  CHECK(parity.num_states() == 2);

  FiniteCode just_a(ab(), {parse_word(ab(), "a")});
  Dfa star_a = dfa_of_star(just_a);
  CHECK(star_a.num_states() == 2);  // accepting loop plus the sink for b
  CHECK(star_a.accepts(parse_word(ab(), "aaa")));
  CHECK_FALSE(star_a.accepts(parse_word(ab(), "ab")));

  Dfa aba = dfa_of_star(code_of("a,ba"));
  CHECK(aba.num_states() == 3);  // root, after-b, sink
  CHECK(aba.accepts(parse_word(ab(), "abaa")));
  CHECK_FALSE(aba.accepts(parse_word(ab(), "ab")));
  CHECK_FALSE(aba.accepts(parse_word(ab(), "bb")));
}

TEST_CASE("power code dfa equals the dfa of the explicit power code") {
  for (int n = 1; n <= 4; ++n) {
    Dfa direct = power_code_dfa(ab(), n);
    // enumerate A^n explicitly
    std::vector<Word> words;
    for (int mask = 0; mask < (1 << n); ++mask) {
      std::vector<int> letters;
      for (int i = 0; i < n; ++i) letters.push_back((mask >> i) & 1);
      words.emplace_back(std::move(letters));
    }
    Dfa built = dfa_of_star(FiniteCode(ab(), words));
    CHECK(built.num_states() == direct.num_states());
    // same language on a sample of words
    for (int len = 0; len <= 6; ++len) {
      for (int mask = 0; mask < (1 << len); ++mask) {
        std::vector<int> letters;
        for (int i = 0; i < len; ++i) letters.push_back((mask >> i) & 1);
        Word w{letters};
        CHECK(direct.accepts(w) == built.accepts(w));
      }
    }
  }
}

TEST_CASE("transition monoids") {
  FiniteMonoidPresentation z2 = transition_monoid(power_code_dfa(ab(), 2));
  CHECK(z2.size() == 2);

  // one-state DFA of A^*: trivial monoid
  Dfa all(ab(), 1, 0, {0}, {{0}, {0}});
  CHECK(transition_monoid(all).size() == 1);

  FiniteMonoidPresentation m = transition_monoid(dfa_of_star(code_of("a,ba")));
  CHECK(m.size() == 6);
  // contains a zero element: the constant map to the sink (image size 1)
  bool has_zero = false;
  for (std::size_t i = 0; i < m.size(); ++i) {
    std::set<int> image(m.element(static_cast<int>(i)).begin(),
                        m.element(static_cast<int>(i)).end());
    if (image.size() == 1) has_zero = true;
  }
  CHECK(has_zero);
}

TEST_CASE("transition monoid cap") {
  CHECK_THROWS_AS(transition_monoid(dfa_of_star(code_of("a,ba")), 3), Error);
}

TEST_CASE("group codes") {
  for (int n = 1; n <= 8; ++n) {
    GroupCodeResult r = is_group_code_dfa(power_code_dfa(ab(), n));
    CHECK(r.group);
    CHECK(r.order == static_cast<std::size_t>(n));
  }
  CHECK_FALSE(is_group_code(code_of("a,ba")).group);
  GroupCodeResult trivial = is_group_code(code_of("a,b"));
  CHECK(trivial.group);
  CHECK(trivial.order == 1);
}

TEST_CASE("eta evaluations") {
  FiniteMonoidPresentation z2 = transition_monoid(power_code_dfa(ab(), 2));
  CHECK(eta(z2, parse_word(ab(), "ab")) == z2.identity());
  CHECK(eta(z2, parse_word(ab(), "a")) != z2.identity());
  CHECK(eta(z2, Word()) == z2.identity());

  FiniteMonoidPresentation z3 = transition_monoid(power_code_dfa(ab(), 3));
  int r2 = eta(z3, parse_word(ab(), "ab"));
  // rotation by two: state 0 goes to 2
  CHECK(z3.element(r2)[0] == 2);
  CHECK(eta(z3, parse_word(ab(), "aab")) == z3.identity());
}

TEST_CASE("power code monoids are cyclic with eta = length mod n") {
  std::mt19937_64 rng_seed(3);
  for (int n = 1; n <= 8; ++n) {
    FiniteMonoidPresentation zn = transition_monoid(power_code_dfa(ab(), n));
    CHECK(zn.size() == static_cast<std::size_t>(n));
    for (int len = 0; len <= 12; ++len) {
      std::vector<int> letters;
      for (int i = 0; i < len; ++i) letters.push_back(static_cast<int>(rng_seed() % 2));
      Word w{letters};
      int e = eta(zn, w);
      CHECK(zn.element(e)[0] == len % n);  // rotation by |w| mod n
    }
  }
}

TEST_CASE("green summary of cyclic groups") {
  for (int n : {2, 3, 5}) {
    FiniteMonoidPresentation zn = transition_monoid(power_code_dfa(ab(), n));
    GreenSummary g = green_summary(zn);
    CHECK(g.is_group);
    CHECK(g.num_h == 1);
    CHECK(g.minimal_ideal.size() == static_cast<std::size_t>(n));
    CHECK(g.maximal_subgroup.size() == static_cast<std::size_t>(n));
    CHECK(g.idempotents.size() == 1);
  }
}

TEST_CASE("green summary of the a,ba star monoid") {
  FiniteMonoidPresentation m = transition_monoid(dfa_of_star(code_of("a,ba")));
  GreenSummary g = green_summary(m);
  CHECK_FALSE(g.is_group);
  CHECK(g.minimal_ideal.size() == 1);     // the zero
  CHECK(g.maximal_subgroup.size() == 1);  // trivial group at the zero
  check_green_against_oracle(m);
}

TEST_CASE("green summary of the ab,ba star monoid with oracle and idempotent count") {
  FiniteMonoidPresentation m = transition_monoid(dfa_of_star(code_of("ab,ba")));
  CHECK(m.size() == 15);
  GreenSummary g = green_summary(m);
  CHECK(g.idempotents.size() == 7);
  check_green_against_oracle(m);
}

TEST_CASE("idempotents and subgroup closure") {
  FiniteMonoidPresentation m = transition_monoid(dfa_of_star(code_of("ab,ba")));
  GreenSummary g = green_summary(m);
  for (int e : g.idempotents) CHECK(m.mul(e, e) == e);
  // the maximal subgroup is closed with exactly one idempotent
  int idems = 0;
  for (int x : g.maximal_subgroup) {
    if (m.mul(x, x) == x) ++idems;
  }
  CHECK(idems == 1);
}

TEST_CASE("green summary against the oracle on many small code monoids") {
  // all codes with <= 2 words of length <= 2 plus a few length-3 samples
  std::vector<std::string> words{"a", "b", "aa", "ab", "ba", "bb", "aab", "aba"};
  int tested = 0;
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = i; j < words.size(); ++j) {
      std::vector<Word> ws{parse_word(ab(), words[i])};
      if (j != i) ws.push_back(parse_word(ab(), words[j]));
      FiniteCode code(ab(), ws);
      if (!classify_code(code).is_code) continue;
      FiniteMonoidPresentation m = transition_monoid(dfa_of_star(code));
      if (m.size() > 60) continue;
      check_green_against_oracle(m);
      ++tested;
    }
  }
  CHECK(tested > 20);
}
