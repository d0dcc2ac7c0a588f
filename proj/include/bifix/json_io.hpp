#pragma once

#include <string>

#include <json.hpp>

#include "bifix/charging.hpp"
#include "bifix/code.hpp"
#include "bifix/decoding.hpp"
#include "bifix/dfa.hpp"
#include "bifix/language.hpp"
#include "bifix/monoid.hpp"
#include "bifix/substitution.hpp"

namespace bifix {

using Json = nlohmann::json;

Json to_json(const Alphabet& alphabet);
Json to_json(const Substitution& phi);
Json to_json(const FactorSet& factors);
Json to_json(const Alphabet& alphabet, const FiniteCode& code);
Json to_json(const Dfa& dfa);
Json to_json(const ChargeVerdict& verdict, const Alphabet& alphabet);
Json to_json(const Fingerprint& fingerprint);
Json to_json(const FingerprintComparison& comparison);
Json to_json(const DecodedLanguage& decoded);
Json to_json(const GreenSummary& green, const FiniteMonoidPresentation& monoid);
Json to_json(const TheoremConsistencyReport& report);
Json to_json(const PeriodicityVerdict& verdict);

Substitution substitution_from_json(const Json& j);
FactorSet factor_set_from_json(const Json& j);
Dfa dfa_from_json(const Json& j);

/// Plain-text egg-box diagram: one block per J-class, rows R-classes,
/// columns L-classes, cells holding the H-class size with '*' marking a
/// group H-class.
std::string egg_box_text(const GreenSummary& green, const FiniteMonoidPresentation& monoid);

}  // namespace bifix
