#include "bifix/text_format.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <vector>

#include "bifix/error.hpp"

namespace bifix {

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

// Splits a word text into letter names: either single visible characters or
// {name} groups.
std::vector<std::string> letter_names(std::string_view text) {
  std::vector<std::string> names;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '{') {
      std::size_t close = text.find('}', i + 1);
      if (close == std::string_view::npos) throw_invalid("unterminated {name} in word");
      if (close == i + 1) throw_invalid("empty {name} in word");
      names.emplace_back(text.substr(i + 1, close - i - 1));
      i = close + 1;
    } else if (c == '}') {
      throw_invalid("unmatched } in word");
    } else {
      names.emplace_back(1, c);
      ++i;
    }
  }
  return names;
}

}  // namespace

Substitution parse_substitution(std::string_view text) {
  std::vector<std::string> alphabet_names;
  std::vector<std::vector<std::string>> image_names;
  for (std::string_view rule : split(text, ';')) {
    rule = strip(rule);
    if (rule.empty()) continue;
    std::size_t arrow = rule.find("->");
    if (arrow == std::string_view::npos) {
      throw_invalid("rule missing '->': " + std::string(rule));
    }
    std::vector<std::string> lhs = letter_names(strip(rule.substr(0, arrow)));
    if (lhs.size() != 1) throw_invalid("rule left-hand side must be one letter");
    std::vector<std::string> rhs = letter_names(strip(rule.substr(arrow + 2)));
    if (rhs.empty()) throw_invalid("rule image must be nonempty");
    if (std::find(alphabet_names.begin(), alphabet_names.end(), lhs[0]) !=
        alphabet_names.end()) {
      throw_invalid("duplicate rule for letter " + lhs[0]);
    }
    alphabet_names.push_back(lhs[0]);
    image_names.push_back(std::move(rhs));
  }
  if (alphabet_names.empty()) throw_invalid("no rules given");
  Alphabet alphabet(alphabet_names);
  std::vector<Word> images;
  for (const auto& rhs : image_names) {
    std::vector<int> letters;
    for (const std::string& name : rhs) {
      auto idx = alphabet.index(name);
      if (!idx) throw_invalid("image uses letter '" + name + "' with no rule");
      letters.push_back(*idx);
    }
    images.emplace_back(std::move(letters));
  }
  return Substitution(std::move(alphabet), std::move(images));
}

std::string format_substitution(const Substitution& phi) {
  std::string out;
  for (int a = 0; a < phi.alphabet().size(); ++a) {
    if (a > 0) out += "; ";
    out += format_word(phi.alphabet(), Word(std::vector<int>{a}));
    out += "->";
    out += format_word(phi.alphabet(), phi.image(a));
  }
  return out;
}

Word parse_word(const Alphabet& alphabet, std::string_view text) {
  std::vector<int> letters;
  for (const std::string& name : letter_names(text)) {
    auto idx = alphabet.index(name);
    if (!idx) throw_invalid("unknown letter '" + name + "'");
    letters.push_back(*idx);
  }
  return Word(std::move(letters));
}

Alphabet infer_alphabet(std::string_view code_text) {
  std::set<std::string> seen;
  for (std::string_view part : split(code_text, ',')) {
    for (const std::string& name : letter_names(strip(part))) seen.insert(name);
  }
  if (seen.empty()) throw_invalid("cannot infer an alphabet from an empty word list");
  return Alphabet(std::vector<std::string>(seen.begin(), seen.end()));
}

FiniteCode parse_code(const Alphabet& alphabet, std::string_view text) {
  std::vector<Word> words;
  for (std::string_view part : split(text, ',')) {
    part = strip(part);
    if (part.empty()) continue;
    words.push_back(parse_word(alphabet, part));
  }
  if (words.empty()) throw_invalid("empty code");
  return FiniteCode(alphabet, std::move(words));
}

GroupCodeSpec parse_group_code_spec(const Alphabet& alphabet, std::string_view text) {
  std::string_view t = strip(text);
  if (t.size() >= 3 && (t.substr(0, 2) == "A^")) {
    int n = 0;
    for (char c : t.substr(2)) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw_invalid("bad power code literal");
      n = n * 10 + (c - '0');
      if (n > 1000000) throw_invalid("power code exponent too large");
    }
    if (n < 1) throw_invalid("power code exponent must be positive");
    return GroupCodeSpec::power_code(n);
  }
  return GroupCodeSpec::explicit_code(parse_code(alphabet, t));
}

std::string format_code(const FiniteCode& code) {
  std::string out;
  for (const Word& w : code.words()) {
    if (!out.empty()) out += ',';
    out += format_word(code.alphabet(), w);
  }
  return out;
}

}  // namespace bifix
