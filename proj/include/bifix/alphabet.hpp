#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bifix {

/// A finite ordered alphabet. Letters are indices 0..size()-1; each letter
/// carries a display name (usually one visible character, but multi-character
/// names are allowed and rendered in {braces} by the text format).
///
/// Internally words are stored as byte strings of letter indices, so an
/// alphabet holds at most 255 letters.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> names);

  /// Alphabet {"a","b",...} with k single-letter names.
  static Alphabet lowercase(int k);

  int size() const noexcept { return static_cast<int>(names_.size()); }
  const std::string& name(int letter) const { return names_.at(letter); }
  std::optional<int> index(std::string_view name) const;

  bool operator==(const Alphabet&) const = default;

 private:
  std::vector<std::string> names_;
};

/// A word over an alphabet: a sequence of letter indices.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<int> letters) : letters_(std::move(letters)) {}

  /// From a byte string of letter indices.
  static Word from_bytes(std::string_view bytes);

  std::string to_bytes() const;

  bool empty() const noexcept { return letters_.empty(); }
  int size() const noexcept { return static_cast<int>(letters_.size()); }
  int at(int i) const { return letters_.at(i); }
  const std::vector<int>& letters() const noexcept { return letters_; }

  Word subword(int pos, int len) const;
  Word reversed() const;
  Word operator+(const Word& rhs) const;

  auto operator<=>(const Word&) const = default;

 private:
  std::vector<int> letters_;
};

/// Render a word using the alphabet's display names; multi-character names
/// are wrapped in braces so the output parses back unambiguously.
std::string format_word(const Alphabet& alphabet, const Word& w);
std::string format_word_bytes(const Alphabet& alphabet, std::string_view bytes);

/// true iff lhs comes before rhs in length-then-lexicographic order.
bool length_lex_less(const Word& lhs, const Word& rhs);

/// Validates that every letter of w is a letter of the alphabet.
void check_word(const Alphabet& alphabet, const Word& w);

}  // namespace bifix
