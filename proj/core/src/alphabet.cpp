#include "simon/alphabet.hpp"

#include <algorithm>

#include "simon/errors.hpp"

namespace simon {

std::vector<Letter> LetterSet::letters() const {
  std::vector<Letter> out;
  for (std::uint32_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(static_cast<Letter>(std::countr_zero(b) + 1));
  }
  return out;
}

Alphabet::Alphabet(int sigma) {
  if (sigma < 1 || sigma > 26) {
    throw DomainError("default alphabet size must be in [1, 26], got " +
                      std::to_string(sigma));
  }
  for (int i = 0; i < sigma; ++i) glyphs_.push_back(static_cast<char>('a' + i));
}

Alphabet Alphabet::from_glyphs(std::string_view glyphs) {
  if (glyphs.empty()) throw ParseError("alphabet must contain at least one letter");
  if (glyphs.size() > static_cast<std::size_t>(kMaxAlphabetSize)) {
    throw ParseError("alphabet has more than 32 letters");
  }
  for (std::size_t i = 0; i < glyphs.size(); ++i) {
    const char c = glyphs[i];
    if (c <= ' ' || c > '~') throw ParseError("alphabet glyphs must be printable ASCII");
    if (glyphs.find(c, i + 1) != std::string_view::npos) {
      throw ParseError(std::string("duplicate alphabet glyph '") + c + "'");
    }
  }
  Alphabet a(1);
  a.glyphs_ = std::string(glyphs);
  return a;
}

Letter Alphabet::letter_of(char c) const noexcept {
  const auto pos = glyphs_.find(c);
  return pos == std::string::npos ? Letter{0} : static_cast<Letter>(pos + 1);
}

Word Alphabet::parse(std::string_view text) const {
  std::vector<Letter> letters;
  letters.reserve(text.size());
  for (char c : text) {
    const Letter a = letter_of(c);
    if (a == 0) {
      throw ParseError(std::string("character '") + c + "' is not in alphabet \"" +
                       glyphs_ + "\"");
    }
    letters.push_back(a);
  }
  return Word(size(), std::move(letters));
}

std::string Alphabet::render(std::span<const Letter> letters) const {
  std::string out;
  out.reserve(letters.size());
  for (Letter a : letters) out.push_back(glyph(a));
  return out;
}

std::string Alphabet::render(const Word& w) const { return render(w.view()); }

std::string Alphabet::render(LetterSet s) const { return render(s.letters()); }

Word::Word(int sigma, std::vector<Letter> letters)
    : sigma_(sigma), letters_(std::move(letters)) {
  if (sigma < 1 || sigma > kMaxAlphabetSize) {
    throw DomainError("alphabet size out of range: " + std::to_string(sigma));
  }
  for (Letter a : letters_) {
    if (a < 1 || a > sigma) {
      throw DomainError("letter " + std::to_string(a) + " outside [1, " +
                        std::to_string(sigma) + "]");
    }
  }
}

Word Word::slice(Position from, Position to) const {
  Word out(sigma_);
  if (from < 1) from = 1;
  to = std::min<Position>(to, size());
  if (from > to) return out;
  out.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(from - 1),
                      letters_.begin() + static_cast<std::ptrdiff_t>(to));
  return out;
}

std::size_t Word::count(Letter a) const {
  return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), a));
}

LetterSet Word::alph() const {
  LetterSet s;
  for (Letter a : letters_) s.insert(a);
  return s;
}

void Word::push_back(Letter a) {
  if (a < 1 || a > sigma_) {
    throw DomainError("letter " + std::to_string(a) + " outside alphabet");
  }
  letters_.push_back(a);
}

Word& Word::operator+=(const Word& other) {
  if (!other.empty() && other.sigma_ != sigma_) {
    if (!empty()) throw DomainError("concatenating words over different alphabets");
    sigma_ = other.sigma_;
  }
  letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
  return *this;
}

Word Word::repeat(std::size_t times) const {
  Word out(sigma_);
  out.letters_.reserve(letters_.size() * times);
  for (std::size_t i = 0; i < times; ++i) {
    out.letters_.insert(out.letters_.end(), letters_.begin(), letters_.end());
  }
  return out;
}

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.letters_ < b.letters_;
}

Word canonical_universal(int sigma, std::size_t times) {
  std::vector<Letter> perm;
  for (int a = 1; a <= sigma; ++a) perm.push_back(static_cast<Letter>(a));
  return Word(sigma, std::move(perm)).repeat(times);
}

void for_each_word(int sigma, std::size_t max_len,
                   const std::function<bool(const Word&)>& visit) {
  std::vector<Letter> cur;
  for (std::size_t len = 0; len <= max_len; ++len) {
    cur.assign(len, Letter{1});
    while (true) {
      if (!visit(Word(sigma, cur))) return;
      // Odometer increment; leftmost letter is most significant.
      std::size_t i = len;
      while (i > 0 && cur[i - 1] == sigma) {
        cur[i - 1] = 1;
        --i;
      }
      if (i == 0) break;
      ++cur[i - 1];
    }
  }
}

std::vector<Word> all_words(int sigma, std::size_t max_len) {
  std::vector<Word> out;
  for_each_word(sigma, max_len, [&](const Word& w) {
    out.push_back(w);
    return true;
  });
  return out;
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Letter a : w.letters()) {
    h ^= a;
    h *= 1099511628211ull;
  }
  return h ^ w.size();
}

}  // namespace simon
