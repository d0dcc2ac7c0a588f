#include <doctest.h>

#include "bifix/error.hpp"
#include "bifix/language.hpp"
#include "bifix/substitution.hpp"
#include "bifix/text_format.hpp"

using namespace bifix;

namespace {

FactorSet fib_factors(int L) { return factor_language(parse_substitution("a->ab; b->a"), L); }
FactorSet tm_factors(int L) { return factor_language(parse_substitution("a->ab; b->ba"), L); }
FactorSet f012(int L) {
  return factor_language(parse_substitution("0->012; 1->0122; 2->0121012"), L);
}

// z^* ∪ t^* up to length L: the decoded set of the period-2 counterexample
FactorSet unary_union(int L) {
  Alphabet alphabet({"z", "t"});
  std::vector<Word> words;
  for (int k = 1; k <= L; ++k) {
    words.emplace_back(std::vector<int>(k, 0));
    words.emplace_back(std::vector<int>(k, 1));
  }
  return factor_set_from_words(alphabet, L, words);
}

}  // namespace

TEST_CASE("rauzy graph shape") {
  FactorSet fib = fib_factors(6);
  RauzyGraph g = rauzy_graph(fib, 1);
  CHECK(g.vertices.size() == 2);
  CHECK(g.edges.size() == 3);  // aa, ab, ba
  CHECK(g.strongly_connected());

  FactorSet per = periodic_word_factors(Alphabet::lowercase(2),
                                        parse_word(Alphabet::lowercase(2), "ab"), 6);
  RauzyGraph cyc = rauzy_graph(per, 1);
  CHECK(cyc.vertices.size() == 2);
  CHECK(cyc.edges.size() == 2);
  CHECK(cyc.strongly_connected());

  RauzyGraph loops = rauzy_graph(unary_union(6), 1);
  CHECK(loops.vertices.size() == 2);
  CHECK(loops.edges.size() == 2);  // zz and tt
  CHECK_FALSE(loops.strongly_connected());
}

TEST_CASE("rauzy edge count equals next complexity") {
  FactorSet tm = tm_factors(10);
  for (int k = 1; k <= 8; ++k) {
    CHECK(rauzy_graph(tm, k).edges.size() == complexity(tm, k + 1));
  }
}

TEST_CASE("recurrence at scale") {
  CHECK(is_recurrent_up_to(fib_factors(12), 8).recurrent);

  RecurrenceResult bad = is_recurrent_up_to(unary_union(6), 1);
  CHECK_FALSE(bad.recurrent);
  CHECK(bad.failing_order == 1);

  FactorSet per = periodic_word_factors(Alphabet::lowercase(2),
                                        parse_word(Alphabet::lowercase(2), "ab"), 8);
  CHECK(is_recurrent_up_to(per, 6).recurrent);
}

TEST_CASE("uniform recurrence at scale") {
  FactorSet fib = fib_factors(12);
  UniformRecurrenceResult u1 = is_uniformly_recurrent_up_to(fib, 1);
  CHECK(u1.uniform);
  CHECK(u1.recurrence_bound == 3);  // aa exists, aaa does not
  UniformRecurrenceResult u2 = is_uniformly_recurrent_up_to(fib, 2);
  CHECK(u2.uniform);
  CHECK(u2.recurrence_bound == 6);

  UniformRecurrenceResult bad = is_uniformly_recurrent_up_to(unary_union(6), 1);
  CHECK_FALSE(bad.uniform);
  REQUIRE(bad.missing_factor.has_value());
  REQUIRE(bad.counterexample.has_value());
  // z never occurs in t^6 (and vice versa)
  CHECK(bad.missing_factor->size() == 1);
  CHECK(bad.counterexample->size() == 6);

  FactorSet per = periodic_word_factors(Alphabet::lowercase(2),
                                        parse_word(Alphabet::lowercase(2), "ab"), 8);
  UniformRecurrenceResult up = is_uniformly_recurrent_up_to(per, 1);
  CHECK(up.uniform);
  CHECK(up.recurrence_bound == 2);
}

TEST_CASE("uniform recurrence of primitive substitution windows") {
  for (const char* rules : {"a->ab; b->a", "a->ab; b->ba", "0->01; 1->0001"}) {
    FactorSet f = factor_language(parse_substitution(rules), 80);
    for (int k = 1; k <= 6; ++k) {
      UniformRecurrenceResult u = is_uniformly_recurrent_up_to(f, k);
      CHECK(u.uniform);
      CHECK(*u.recurrence_bound <= 80);
    }
  }
}

TEST_CASE("extension graphs") {
  FactorSet f = f012(6);
  ExtensionGraph g = extension_graph(f, parse_word(f.alphabet(), "1"));
  CHECK(g.left == std::vector<int>{0, 2});
  CHECK(g.right == std::vector<int>{0, 2});
  CHECK(g.edges == std::vector<std::pair<int, int>>{{0, 2}, {2, 0}});
  CHECK(g.classify() == ExtensionGraph::Kind::Disconnected);

  FactorSet fib = fib_factors(6);
  ExtensionGraph e = extension_graph(fib, Word());
  CHECK(e.left == std::vector<int>{0, 1});
  CHECK(e.right == std::vector<int>{0, 1});
  CHECK(e.edges == std::vector<std::pair<int, int>>{{0, 0}, {0, 1}, {1, 0}});
  CHECK(e.classify() == ExtensionGraph::Kind::Tree);

  ExtensionGraph t = extension_graph(tm_factors(6), Word());
  CHECK(t.edges.size() == 4);
  CHECK(t.classify() == ExtensionGraph::Kind::ConnectedNotTree);

  CHECK_THROWS_AS(extension_graph(fib, parse_word(fib.alphabet(), "bb")), Error);
}

TEST_CASE("word classification summaries") {
  WordClassification fib = classify_words(fib_factors(12), 8);
  CHECK(fib.dendric_up_to == 8);
  CHECK(fib.connected_up_to == 8);
  CHECK_FALSE(fib.first_disconnected.has_value());

  WordClassification s = classify_words(f012(8), 3);
  CHECK_FALSE(s.dendric_up_to.has_value());  // the empty word has a cycle
  CHECK(s.connected_up_to == 0);
  REQUIRE(s.first_disconnected.has_value());
  CHECK(format_word(f012(8).alphabet(), *s.first_disconnected) == "1");

  // Thue-Morse: connected at small centers, disconnected first at "aba"
  WordClassification tm = classify_words(tm_factors(12), 4);
  CHECK_FALSE(tm.dendric_up_to.has_value());
  CHECK(tm.connected_up_to == 2);
  REQUIRE(tm.first_disconnected.has_value());
  CHECK(format_word(tm_factors(12).alphabet(), *tm.first_disconnected) == "aba");
}

TEST_CASE("complexity values") {
  FactorSet fib = fib_factors(12);
  for (int k = 1; k <= 12; ++k) CHECK(complexity(fib, k) == static_cast<std::size_t>(k + 1));
  CHECK(complexity(fib, 5) == 6);

  FactorSet tm = tm_factors(8);
  CHECK(complexity(tm, 1) == 2);
  CHECK(complexity(tm, 2) == 4);
  CHECK(complexity(tm, 3) == 6);
  CHECK(complexity(tm, 4) == 10);
  CHECK(complexity(tm, 8) == 22);

  FactorSet per = periodic_word_factors(Alphabet::lowercase(2),
                                        parse_word(Alphabet::lowercase(2), "ab"), 8);
  CHECK(complexity(per, 5) == 2);
}

TEST_CASE("complexity plateau matches the periodicity verdict") {
  FactorSet per = periodic_word_factors(Alphabet::lowercase(2),
                                        parse_word(Alphabet::lowercase(2), "ab"), 8);
  bool plateau = false;
  for (int k = 1; k < 8; ++k) plateau = plateau || complexity(per, k + 1) == complexity(per, k);
  CHECK(plateau);
  CHECK(periodicity(per).is_periodic());

  FactorSet fib = fib_factors(12);
  for (int k = 1; k < 12; ++k) CHECK(complexity(fib, k + 1) > complexity(fib, k));
  CHECK_FALSE(periodicity(fib).is_periodic());
}

TEST_CASE("factor set validation") {
  Alphabet ab = Alphabet::lowercase(2);
  // not factorial: contains "ab" but not "b"
  std::vector<Word> bad{parse_word(ab, "a"), parse_word(ab, "ab")};
  CHECK_THROWS_AS(factor_set_from_words(ab, 2, bad), Error);

  std::vector<Word> good{parse_word(ab, "a"), parse_word(ab, "b"), parse_word(ab, "ab")};
  FactorSet f = factor_set_from_words(ab, 2, good);
  CHECK(f.contains(parse_word(ab, "ab")));
  CHECK_FALSE(f.contains(parse_word(ab, "ba")));
  CHECK(f.contains(Word()));
  CHECK_THROWS_AS(f.contains(parse_word(ab, "aba")), Error);
}

TEST_CASE("operations reject out-of-window orders") {
  FactorSet fib = fib_factors(5);
  CHECK_THROWS_AS(rauzy_graph(fib, 5), Error);
  CHECK_THROWS_AS(is_recurrent_up_to(fib, 5), Error);
  CHECK_THROWS_AS(is_uniformly_recurrent_up_to(fib, 5), Error);
  CHECK_THROWS_AS(classify_words(fib, 4), Error);
  CHECK_THROWS_AS(complexity(fib, 6), Error);
}
