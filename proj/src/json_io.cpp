#include "bifix/json_io.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "bifix/error.hpp"
#include "bifix/text_format.hpp"

namespace bifix {

Json to_json(const Alphabet& alphabet) {
  Json names = Json::array();
  for (int i = 0; i < alphabet.size(); ++i) names.push_back(alphabet.name(i));
  return names;
}

Json to_json(const Substitution& phi) {
  Json images = Json::object();
  for (int a = 0; a < phi.alphabet().size(); ++a) {
    images[phi.alphabet().name(a)] = format_word(phi.alphabet(), phi.image(a));
  }
  return Json{{"alphabet", to_json(phi.alphabet())}, {"images", images}};
}

Json to_json(const FactorSet& factors) {
  Json levels = Json::array();
  for (int k = 1; k <= factors.max_length(); ++k) {
    Json level = Json::array();
    std::size_t n = factors.count(k);
    for (std::size_t i = 0; i < n; ++i) {
      level.push_back(format_word_bytes(factors.alphabet(), factors.word_bytes(k, i)));
    }
    levels.push_back(std::move(level));
  }
  return Json{{"alphabet", to_json(factors.alphabet())},
              {"L", factors.max_length()},
              {"factors", levels}};
}

Json to_json(const Alphabet& alphabet, const FiniteCode& code) {
  Json words = Json::array();
  for (const Word& w : code.words()) words.push_back(format_word(alphabet, w));
  return words;
}

Json to_json(const Dfa& dfa) {
  Json delta = Json::object();
  for (int a = 0; a < dfa.alphabet().size(); ++a) {
    Json row = Json::array();
    for (int s = 0; s < dfa.num_states(); ++s) row.push_back(dfa.step(s, a));
    delta[dfa.alphabet().name(a)] = std::move(row);
  }
  return Json{{"states", dfa.num_states()},
              {"initial", dfa.initial()},
              {"accepting", dfa.accepting()},
              {"delta", delta}};
}

Json to_json(const PeriodicityVerdict& verdict) {
  switch (verdict.kind) {
    case PeriodicityVerdict::Kind::Periodic:
      return Json{{"kind", "Periodic"}, {"period", verdict.value}};
    case PeriodicityVerdict::Kind::AperiodicUpTo:
      return Json{{"kind", "AperiodicUpTo"}, {"bound", verdict.value}};
    case PeriodicityVerdict::Kind::AssertedAperiodic:
      return Json{{"kind", "AssertedAperiodic"}};
  }
  return {};
}

Json to_json(const ChargeVerdict& verdict, const Alphabet& alphabet) {
  Json j;
  j["verdict"] = to_string(verdict.status);
  if (verdict.certificate) j["certificate"] = to_string(*verdict.certificate);
  j["assumptions"] = verdict.assumptions;
  if (!verdict.obstructions.empty()) j["obstructions"] = verdict.obstructions;
  if (verdict.omega) {
    Json per_letter = Json::object();
    for (int a = 0; a < alphabet.size(); ++a) {
      per_letter[alphabet.name(a)] = verdict.omega->g_omega.at(a);
    }
    j["omega_image"] = Json{{"per_letter", per_letter},
                            {"preperiod", verdict.omega->preperiod_q},
                            {"period", verdict.omega->period_p},
                            {"exponent", verdict.omega->exponent_m}};
  }
  if (!verdict.image_subgroup.empty()) {
    j["image_subgroup_order"] = verdict.image_subgroup.size();
  }
  return j;
}

Json to_json(const Fingerprint& fingerprint) {
  Json map = Json::object();
  Json branches = Json::object();
  for (const auto& e : fingerprint.entries) {
    map[std::to_string(e.n)] = e.d;
    branches[std::to_string(e.n)] =
        Json{{"exact", e.exact}, {"branch", e.branch}};
  }
  return Json{{"n_max", fingerprint.n_max}, {"d", map}, {"entries", branches}};
}

Json to_json(const FingerprintComparison& comparison) {
  Json rows = Json::array();
  for (const auto& r : comparison.rows) {
    rows.push_back(Json{{"n", r.n},
                        {"left", r.left.d},
                        {"left_exact", r.left.exact},
                        {"right", r.right.d},
                        {"right_exact", r.right.exact},
                        {"compared", r.compared}});
  }
  Json j;
  j["verdict"] = comparison.verdict == FingerprintComparison::Verdict::NotConjugate
                     ? "NotConjugate"
                     : "Inconclusive";
  if (comparison.witness_n) j["witness_n"] = *comparison.witness_n;
  j["table"] = rows;
  j["left_collapsed_primes"] = comparison.left_collapsed_primes;
  j["right_collapsed_primes"] = comparison.right_collapsed_primes;
  j["notes"] = comparison.notes;
  return j;
}

Json to_json(const DecodedLanguage& decoded) {
  Json j = to_json(decoded.factors);
  Json expansion = Json::object();
  for (std::size_t i = 0; i < decoded.code.words().size(); ++i) {
    expansion[decoded.x_alphabet.name(static_cast<int>(i))] =
        format_word(decoded.code.alphabet(), decoded.code.words()[i]);
  }
  j["expansion"] = expansion;
  return j;
}

Json to_json(const GreenSummary& green, const FiniteMonoidPresentation& monoid) {
  Json j;
  j["order"] = monoid.size();
  j["num_r_classes"] = green.num_r;
  j["num_l_classes"] = green.num_l;
  j["num_j_classes"] = green.num_j;
  j["num_h_classes"] = green.num_h;
  j["idempotents"] = green.idempotents;
  j["minimal_ideal"] = green.minimal_ideal;
  j["maximal_subgroup"] = Json{{"elements", green.maximal_subgroup},
                               {"order", green.maximal_subgroup.size()}};
  j["is_group"] = green.is_group;
  return j;
}

Json to_json(const TheoremConsistencyReport& report) {
  Json j;
  j["outcome"] = to_string(report.outcome);
  j["code"] = report.code_label;
  j["periodicity"] = to_json(report.periodicity);
  j["verdict"] = to_string(report.verdict.status);
  if (report.verdict.certificate) j["certificate"] = to_string(*report.verdict.certificate);
  j["assumptions"] = report.verdict.assumptions;
  j["decoding_recurrent"] = report.recurrence.recurrent.recurrent;
  if (report.recurrence.recurrent.failing_order) {
    j["decoding_failing_order"] = *report.recurrence.recurrent.failing_order;
  }
  j["decoding_uniformly_recurrent_up_to"] = report.recurrence.uniformly_recurrent_up_to;
  j["k_max"] = report.recurrence.k_max;
  j["notes"] = report.notes;
  return j;
}

Substitution substitution_from_json(const Json& j) {
  std::vector<std::string> names = j.at("alphabet").get<std::vector<std::string>>();
  Alphabet alphabet(names);
  std::vector<Word> images;
  for (const std::string& name : names) {
    images.push_back(parse_word(alphabet, j.at("images").at(name).get<std::string>()));
  }
  return Substitution(std::move(alphabet), std::move(images));
}

FactorSet factor_set_from_json(const Json& j) {
  Alphabet alphabet(j.at("alphabet").get<std::vector<std::string>>());
  int max_length = j.at("L").get<int>();
  std::vector<Word> words;
  for (const auto& level : j.at("factors")) {
    for (const auto& w : level) {
      words.push_back(parse_word(alphabet, w.get<std::string>()));
    }
  }
  return factor_set_from_words(alphabet, max_length, words);
}

Dfa dfa_from_json(const Json& j) {
  int states = j.at("states").get<int>();
  int initial = j.at("initial").get<int>();
  std::vector<int> accepting = j.at("accepting").get<std::vector<int>>();
  std::vector<std::string> names;
  for (auto it = j.at("delta").begin(); it != j.at("delta").end(); ++it) {
    names.push_back(it.key());
  }
  std::sort(names.begin(), names.end());
  Alphabet alphabet(names);
  std::vector<std::vector<int>> delta;
  for (const std::string& name : names) {
    delta.push_back(j.at("delta").at(name).get<std::vector<int>>());
  }
  return Dfa(std::move(alphabet), states, initial, std::move(accepting), std::move(delta));
}

std::string egg_box_text(const GreenSummary& green, const FiniteMonoidPresentation& monoid) {
  std::size_t n = monoid.size();
  std::set<int> idem(green.idempotents.begin(), green.idempotents.end());
  std::ostringstream out;
  for (int jc = 0; jc < green.num_j; ++jc) {
    // collect the R- and L-classes meeting this J-class
    std::set<int> rs, ls;
    for (std::size_t i = 0; i < n; ++i) {
      if (green.j_class_of[i] == jc) {
        rs.insert(green.r_class_of[i]);
        ls.insert(green.l_class_of[i]);
      }
    }
    out << "J-class " << jc << " (" << rs.size() << " R x " << ls.size() << " L):\n";
    for (int r : rs) {
      out << "  ";
      for (int l : ls) {
        std::size_t cell = 0;
        bool has_idem = false;
        for (std::size_t i = 0; i < n; ++i) {
          if (green.j_class_of[i] == jc && green.r_class_of[i] == r &&
              green.l_class_of[i] == l) {
            ++cell;
            if (idem.count(static_cast<int>(i))) has_idem = true;
          }
        }
        out << '[' << cell << (has_idem ? "*" : " ") << ']';
      }
      out << '\n';
    }
  }
  return out.str();
}

}  // namespace bifix
