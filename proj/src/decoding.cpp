#include "bifix/decoding.hpp"

#include <algorithm>

#include "bifix/error.hpp"

namespace bifix {

Word DecodedLanguage::expand(const Word& xword) const {
  Word out;
  for (int x : xword.letters()) out = out + code.words().at(x);
  return out;
}

DecodedLanguage decode(const FactorSet& factors, const FiniteCode& code, int x_length_bound) {
  if (!(code.alphabet() == factors.alphabet())) {
    throw_invalid("decode needs the code and the factor set over one alphabet");
  }
  if (x_length_bound < 1) throw_invalid("decode needs a positive X-length bound");
  if (!classify_code(code).is_code) throw_invalid("decode requires a code");
  long long needed = static_cast<long long>(x_length_bound) * code.max_word_length();
  if (needed > factors.max_length()) {
    throw_resource_limit("decoding window insufficient: need factors up to length " +
                         std::to_string(needed) + ", have " +
                         std::to_string(factors.max_length()));
  }

  std::vector<std::string> names;
  for (const Word& w : code.words()) {
    names.push_back("⟨" + format_word(code.alphabet(), w) + "⟩");
  }
  Alphabet x_alphabet(std::move(names));

  std::vector<std::string> expansions;
  for (const Word& w : code.words()) expansions.push_back(w.to_bytes());

  // grow members level by level; members and their expansions stay in
  // lexicographic order because letters extend in sorted order
  std::vector<std::string> levels(x_length_bound);
  std::vector<std::string> prev_words{""};
  std::vector<std::string> prev_exp{""};
  for (int m = 1; m <= x_length_bound; ++m) {
    std::vector<std::string> cur_words;
    std::vector<std::string> cur_exp;
    std::string flat;
    for (std::size_t i = 0; i < prev_words.size(); ++i) {
      for (std::size_t x = 0; x < expansions.size(); ++x) {
        std::string exp = prev_exp[i] + expansions[x];
        if (!factors.contains_bytes(exp)) continue;
        std::string w = prev_words[i] + static_cast<char>(x);
        flat += w;
        cur_words.push_back(std::move(w));
        cur_exp.push_back(std::move(exp));
      }
    }
    levels[m - 1] = std::move(flat);
    prev_words = std::move(cur_words);
    prev_exp = std::move(cur_exp);
    if (prev_words.empty()) break;  // finite decoding; higher levels stay empty
  }

  FactorSet decoded(x_alphabet, x_length_bound, std::move(levels), factors.exact());
  return DecodedLanguage{code, std::move(x_alphabet), std::move(decoded)};
}

DecodedLanguage higher_power(const FactorSet& factors, int n, int x_length_bound) {
  IntersectionResult x = intersect_power_with_F(n, factors);
  return decode(factors, x.code, x_length_bound);
}

DecodingRecurrenceReport check_decoding_recurrence(const DecodedLanguage& decoded, int k_max) {
  if (k_max < 1 || k_max + 1 > decoded.factors.max_length()) {
    throw_invalid("recurrence order beyond the decoded window");
  }
  DecodingRecurrenceReport report;
  report.k_max = k_max;
  report.recurrent = is_recurrent_up_to(decoded.factors, k_max);
  bool all_uniform = true;
  for (int k = 1; k <= k_max; ++k) {
    UniformRecurrenceResult u = is_uniformly_recurrent_up_to(decoded.factors, k);
    if (all_uniform && u.uniform) {
      report.uniformly_recurrent_up_to = k;
    } else {
      all_uniform = false;
    }
    report.uniform.push_back(std::move(u));
  }
  return report;
}

std::string to_string(TheoremConsistencyReport::Outcome outcome) {
  switch (outcome) {
    case TheoremConsistencyReport::Outcome::Consistent:
      return "CONSISTENT";
    case TheoremConsistencyReport::Outcome::Observational:
      return "OBSERVATIONAL";
    case TheoremConsistencyReport::Outcome::WindowLimited:
      return "WINDOW_LIMITED";
    case TheoremConsistencyReport::Outcome::Contradiction:
      return "CONTRADICTION";
  }
  return "?";
}

TheoremConsistencyReport theorem_consistency_report(const Substitution& phi,
                                                    const GroupCodeSpec& spec,
                                                    const TheoremReportParams& params) {
  TheoremConsistencyReport report;
  report.params = params;

  FactorSet factors = factor_language(phi, params.factor_window);
  report.periodicity =
      params.assert_aperiodic ? PeriodicityVerdict::asserted() : periodicity(factors);

  GroupCode code = GroupCode::resolve(phi.alphabet(), spec);
  report.code_label = code.label();

  ChargeContext context{&factors, report.periodicity, params.connectedness_center_bound};
  report.verdict = charged_verdict(phi, code, context);

  // decode by X = F ∩ Z
  IntersectionResult x = spec.power ? intersect_power_with_F(*spec.power, factors)
                                    : intersect_with_F(*spec.code, factors);
  DecodedLanguage decoded = decode(factors, x.code, params.x_length_bound);
  report.recurrence = check_decoding_recurrence(decoded, params.k_max);

  bool checks_pass = report.recurrence.recurrent.recurrent &&
                     report.recurrence.uniformly_recurrent_up_to == params.k_max;
  if (report.verdict.status == ChargeVerdict::Status::Charged) {
    if (checks_pass) {
      report.outcome = TheoremConsistencyReport::Outcome::Consistent;
      report.notes.push_back(
          "charged and the decoding is recurrent and uniformly recurrent at scale, as the "
          "decoding theorems require");
    } else if (params.strict_windows) {
      report.outcome = TheoremConsistencyReport::Outcome::Contradiction;
      report.notes.push_back(
          "charged but a scale check failed although the windows were vouched for: this "
          "signals a bug");
    } else {
      report.outcome = TheoremConsistencyReport::Outcome::WindowLimited;
      report.notes.push_back(
          "charged but a scale check failed; the windows were not vouched for, so this is "
          "reported as window-limited rather than a contradiction");
    }
  } else {
    report.outcome = TheoremConsistencyReport::Outcome::Observational;
    report.notes.push_back(
        "verdict is not Charged: the decoding theorems assert nothing here, and the "
        "recurrence observations carry no converse information");
  }
  return report;
}

}  // namespace bifix
