#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace simon {

// Letters are the integers 1..sigma.
using Letter = std::uint8_t;

// 1-based positions. kInfinity is strictly greater than every position.
using Position = std::size_t;
inline constexpr Position kInfinity = std::numeric_limits<Position>::max();

inline constexpr int kMaxAlphabetSize = 32;

// A subset of the alphabet, stored as a bitmask (bit a-1 for letter a).
class LetterSet {
 public:
  constexpr LetterSet() = default;
  constexpr explicit LetterSet(std::uint32_t bits) : bits_(bits) {}

  static constexpr LetterSet full(int sigma) {
    return LetterSet(sigma >= 32 ? ~std::uint32_t{0}
                                 : (std::uint32_t{1} << sigma) - 1);
  }
  static constexpr LetterSet of(Letter a) { return LetterSet(bit(a)); }

  constexpr bool contains(Letter a) const { return (bits_ & bit(a)) != 0; }
  constexpr void insert(Letter a) { bits_ |= bit(a); }
  constexpr void erase(Letter a) { bits_ &= ~bit(a); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr std::uint32_t bits() const { return bits_; }

  constexpr LetterSet operator|(LetterSet o) const { return LetterSet(bits_ | o.bits_); }
  constexpr LetterSet operator&(LetterSet o) const { return LetterSet(bits_ & o.bits_); }
  constexpr LetterSet& operator|=(LetterSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  // Set difference.
  constexpr LetterSet operator-(LetterSet o) const { return LetterSet(bits_ & ~o.bits_); }

  // Letters in ascending order.
  std::vector<Letter> letters() const;

  constexpr auto operator<=>(const LetterSet&) const = default;

 private:
  static constexpr std::uint32_t bit(Letter a) { return std::uint32_t{1} << (a - 1); }
  std::uint32_t bits_ = 0;
};

class Word;

// Alphabet [sigma] with a printable glyph per letter. The default render map
// is 'a' -> 1, 'b' -> 2, ...
class Alphabet {
 public:
  explicit Alphabet(int sigma);
  // Glyphs must be distinct printable ASCII characters; sigma = glyphs.size().
  static Alphabet from_glyphs(std::string_view glyphs);

  int size() const noexcept { return static_cast<int>(glyphs_.size()); }
  const std::string& glyphs() const noexcept { return glyphs_; }
  char glyph(Letter a) const { return glyphs_.at(a - 1); }
  // 0 when `c` is not a glyph of this alphabet.
  Letter letter_of(char c) const noexcept;

  Word parse(std::string_view text) const;
  std::string render(std::span<const Letter> letters) const;
  std::string render(const Word& w) const;
  std::string render(LetterSet s) const;

  bool operator==(const Alphabet&) const = default;

 private:
  std::string glyphs_;
};

// A finite word over [sigma]. Empty words are allowed.
class Word {
 public:
  Word() = default;
  explicit Word(int sigma) : sigma_(sigma) {}
  Word(int sigma, std::vector<Letter> letters);
  Word(int sigma, std::initializer_list<Letter> letters)
      : Word(sigma, std::vector<Letter>(letters)) {}

  int sigma() const noexcept { return sigma_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::span<const Letter> view() const noexcept { return letters_; }

  // 1-based access, matching the w[i] convention of the public contract.
  Letter at(Position i) const { return letters_.at(i - 1); }
  Letter operator[](std::size_t zero_based) const { return letters_[zero_based]; }

  // w[from:to], 1-based and inclusive; empty when from > to.
  Word slice(Position from, Position to) const;
  std::size_t count(Letter a) const;
  LetterSet alph() const;

  void push_back(Letter a);
  Word& operator+=(const Word& other);
  friend Word operator+(Word a, const Word& b) { return a += b; }
  Word repeat(std::size_t times) const;

  // Shortlex order (length first, then lexicographic).
  friend bool shortlex_less(const Word& a, const Word& b);
  bool operator==(const Word& o) const { return letters_ == o.letters_; }
  auto operator<=>(const Word& o) const { return letters_ <=> o.letters_; }

 private:
  int sigma_ = 1;
  std::vector<Letter> letters_;
};

bool shortlex_less(const Word& a, const Word& b);

// (1 2 ... sigma)^times
Word canonical_universal(int sigma, std::size_t times);

// Calls `visit` for every word of length <= max_len over [sigma] in shortlex
// order. Stops early when `visit` returns false.
void for_each_word(int sigma, std::size_t max_len,
                   const std::function<bool(const Word&)>& visit);
std::vector<Word> all_words(int sigma, std::size_t max_len);

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

}  // namespace simon
