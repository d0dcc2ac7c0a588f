#pragma once

#include <string>
#include <string_view>

#include "bifix/charging.hpp"
#include "bifix/code.hpp"
#include "bifix/substitution.hpp"

namespace bifix {

/// Parses the rule format `a->ab; b->a`. Letters are single visible
/// characters or `{name}` braces for multi-character symbols; the alphabet
/// is the set of rule left-hand sides, ordered as written.
Substitution parse_substitution(std::string_view text);

std::string format_substitution(const Substitution& phi);

/// Parses a word against a known alphabet (brace syntax as above).
Word parse_word(const Alphabet& alphabet, std::string_view text);

/// Parses the comma-separated code format `aa,ab,ba`.
FiniteCode parse_code(const Alphabet& alphabet, std::string_view text);

/// Alphabet of the distinct letter names appearing in a comma-separated word
/// list, sorted by name.
Alphabet infer_alphabet(std::string_view code_text);

/// Parses a code spec: either the power literal `A^n` or a word list.
GroupCodeSpec parse_group_code_spec(const Alphabet& alphabet, std::string_view text);

std::string format_code(const FiniteCode& code);

}  // namespace bifix
