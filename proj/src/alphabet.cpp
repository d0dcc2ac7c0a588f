#include "bifix/alphabet.hpp"

#include <algorithm>
#include <set>

#include "bifix/error.hpp"

namespace bifix {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw_invalid("alphabet must be nonempty");
  if (names_.size() > 255) throw_invalid("alphabet too large (max 255 letters)");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw_invalid("letter names must be nonempty");
    if (!seen.insert(n).second) throw_invalid("duplicate letter name: " + n);
  }
}

Alphabet Alphabet::lowercase(int k) {
  std::vector<std::string> names;
  for (int i = 0; i < k; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
  return Alphabet(std::move(names));
}

std::optional<int> Alphabet::index(std::string_view name) const {
  for (int i = 0; i < size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

Word Word::from_bytes(std::string_view bytes) {
  std::vector<int> letters;
  letters.reserve(bytes.size());
  for (unsigned char c : bytes) letters.push_back(static_cast<int>(c));
  return Word(std::move(letters));
}

std::string Word::to_bytes() const {
  std::string out;
  out.reserve(letters_.size());
  for (int l : letters_) out.push_back(static_cast<char>(static_cast<unsigned char>(l)));
  return out;
}

Word Word::subword(int pos, int len) const {
  if (pos < 0 || len < 0 || pos + len > size()) throw_invalid("subword out of range");
  return Word(std::vector<int>(letters_.begin() + pos, letters_.begin() + pos + len));
}

Word Word::reversed() const {
  std::vector<int> r(letters_.rbegin(), letters_.rend());
  return Word(std::move(r));
}

Word Word::operator+(const Word& rhs) const {
  std::vector<int> out = letters_;
  out.insert(out.end(), rhs.letters_.begin(), rhs.letters_.end());
  return Word(std::move(out));
}

std::string format_word(const Alphabet& alphabet, const Word& w) {
  std::string out;
  for (int l : w.letters()) {
    const std::string& n = alphabet.name(l);
    // decoded-letter names are already self-delimiting
    bool delimited = n.size() >= 3 && n.compare(0, 3, "\xE2\x9F\xA8") == 0;
    if (n.size() == 1 || delimited) {
      out += n;
    } else {
      out += '{';
      out += n;
      out += '}';
    }
  }
  return out;
}

std::string format_word_bytes(const Alphabet& alphabet, std::string_view bytes) {
  return format_word(alphabet, Word::from_bytes(bytes));
}

bool length_lex_less(const Word& lhs, const Word& rhs) {
  if (lhs.size() != rhs.size()) return lhs.size() < rhs.size();
  return lhs.letters() < rhs.letters();
}

void check_word(const Alphabet& alphabet, const Word& w) {
  for (int l : w.letters()) {
    if (l < 0 || l >= alphabet.size()) throw_invalid("letter index out of alphabet");
  }
}

}  // namespace bifix
