#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bifix/charging.hpp"
#include "bifix/code.hpp"
#include "bifix/language.hpp"
#include "bifix/substitution.hpp"

namespace bifix {

/// The decoding F ∩ X^* as a language over the alphabet X: letters are the
/// code words (named by their expansions), words grouped by X-length.
struct DecodedLanguage {
  FiniteCode code;      // X; word i expands letter i
  Alphabet x_alphabet;  // names ⟨expansion⟩, aligned with code.words()
  FactorSet factors;    // over x_alphabet, window = X-length bound

  Word expand(const Word& xword) const;
};

/// All words of F ∩ X^* of X-length <= x_length_bound. The window must
/// satisfy x_length_bound * max|x| <= L; otherwise a resource-limit error
/// names the required window.
DecodedLanguage decode(const FactorSet& factors, const FiniteCode& code, int x_length_bound);

/// decode by the power code: X = F ∩ A^n.
DecodedLanguage higher_power(const FactorSet& factors, int n, int x_length_bound);

struct DecodingRecurrenceReport {
  RecurrenceResult recurrent;
  int k_max = 0;
  std::vector<UniformRecurrenceResult> uniform;  // index k-1 for k = 1..k_max
  int uniformly_recurrent_up_to = 0;             // largest prefix of orders all uniform
};

DecodingRecurrenceReport check_decoding_recurrence(const DecodedLanguage& decoded, int k_max);

struct TheoremReportParams {
  int factor_window = 40;          // L
  int x_length_bound = 10;         // Lx
  int k_max = 4;                   // recurrence orders checked on the decoding
  int connectedness_center_bound = 8;
  bool assert_aperiodic = false;
  /// Arms the CONTRADICTION alarm: a failed scale check under a Charged
  /// verdict is a bug signal only when the caller vouches that the windows
  /// were sized generously; otherwise the failure is reported as
  /// window-limited.
  bool strict_windows = false;
};

struct TheoremConsistencyReport {
  enum class Outcome { Consistent, Observational, WindowLimited, Contradiction };
  Outcome outcome = Outcome::Observational;
  ChargeVerdict verdict;
  std::string code_label;
  PeriodicityVerdict periodicity;
  DecodingRecurrenceReport recurrence;
  TheoremReportParams params;
  std::vector<std::string> notes;
};

std::string to_string(TheoremConsistencyReport::Outcome outcome);

/// Composes the charging verdict with the recurrence checks on the decoded
/// language. Charged verdicts must see the checks pass (the decoding
/// theorems guarantee it); a failure is a contradiction alarm when the
/// windows are vouched for, and a window-limited observation otherwise.
/// NotCharged and Unknown verdicts yield observational entries only.
TheoremConsistencyReport theorem_consistency_report(const Substitution& phi,
                                                    const GroupCodeSpec& spec,
                                                    const TheoremReportParams& params);

}  // namespace bifix
