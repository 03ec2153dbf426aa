#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "simon/alphabet.hpp"
#include "simon/signature.hpp"

namespace simon {

using VarId = std::size_t;

struct Symbol {
  enum class Kind { Terminal, Variable };
  Kind kind = Kind::Terminal;
  Letter letter = 0;  // Terminal
  VarId var = 0;      // Variable

  static Symbol terminal(Letter a) { return {Kind::Terminal, a, 0}; }
  static Symbol variable(VarId x) { return {Kind::Variable, 0, x}; }
  bool is_variable() const { return kind == Kind::Variable; }

  bool operator==(const Symbol&) const = default;
};

// A word over terminals and variables. Variable ids are dense indices into
// the pattern's name table; two patterns parsed against a shared table (see
// parse's `known`) agree on ids, which is how word equations share variables.
class Pattern {
 public:
  explicit Pattern(int sigma = 1) : sigma_(sigma) {}

  // Text syntax: alphabet glyphs are terminals, an uppercase letter that is
  // not a glyph is a variable, and ${name} is a variable of any name. Spaces
  // are ignored.
  static Pattern parse(std::string_view text, const Alphabet& alphabet,
                       const std::vector<std::string>& known = {});

  int sigma() const noexcept { return sigma_; }
  const std::vector<Symbol>& symbols() const noexcept { return symbols_; }
  std::size_t size() const noexcept { return symbols_.size(); }

  VarId variable(const std::string& name);  // id of name, added if new
  std::optional<VarId> find_variable(std::string_view name) const;
  const std::string& variable_name(VarId x) const { return names_.at(x); }
  const std::vector<std::string>& variable_names() const noexcept { return names_; }
  std::size_t variable_count() const noexcept { return names_.size(); }

  void push_terminal(Letter a);
  void push_variable(VarId x);
  void append(const Word& w);
  Pattern& operator+=(const Pattern& other);  // other's variables matched by name

  std::vector<VarId> variables() const;  // occurring ids, ascending
  std::size_t occurrences(VarId x) const;
  bool has_variables() const;
  bool is_regular() const;  // every occurring variable occurs exactly once
  Word terminal_word() const;  // image under the all-empty substitution
  LetterSet terminal_alph() const;

  std::string render(const Alphabet& alphabet) const;

  bool operator==(const Pattern&) const = default;

 private:
  int sigma_;
  std::vector<Symbol> symbols_;
  std::vector<std::string> names_;
};

// Image of a variable as head . period^reps . tail; lets witnesses of huge
// universality stay symbolic.
struct ImageSpec {
  Word head;
  Word period;
  Count reps = 0;
  Word tail;

  static ImageSpec plain(Word w);

  Count length() const;
  UniversalitySignature signature() const;
  // Throws CapExceeded past max_length letters.
  Word materialize(std::size_t max_length) const;

  bool operator==(const ImageSpec&) const = default;
};

class Substitution {
 public:
  Substitution() = default;
  explicit Substitution(std::size_t variables) : images_(variables) {}

  void set(VarId x, Word w);
  bool defined(VarId x) const { return x < images_.size() && images_[x].has_value(); }
  const Word& at(VarId x) const;
  std::size_t size() const noexcept { return images_.size(); }

  bool operator==(const Substitution&) const = default;

 private:
  std::vector<std::optional<Word>> images_;
};

// h(alpha): terminals fixed, variables replaced. Undefined variable -> DomainError.
Word apply(const Substitution& h, const Pattern& alpha);

// Per-variable certified signatures of the images.
struct SignatureCertificate {
  std::vector<UniversalitySignature> images;  // indexed by VarId
};

// iota(h(alpha)) for every h whose images carry the certified signatures.
Count verify_certificate(const Pattern& alpha, const SignatureCertificate& cert);

// Signature of h(alpha) for compact images.
UniversalitySignature signature_of_image(const Pattern& alpha,
                                         const std::vector<ImageSpec>& images);

}  // namespace simon
