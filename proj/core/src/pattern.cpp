#include "simon/pattern.hpp"

#include <algorithm>

#include "simon/errors.hpp"

namespace simon {

Pattern Pattern::parse(std::string_view text, const Alphabet& alphabet,
                       const std::vector<std::string>& known) {
  Pattern p(alphabet.size());
  p.names_ = known;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '$' && i + 1 < text.size() && text[i + 1] == '{') {
      const std::size_t close = text.find('}', i + 2);
      if (close == std::string_view::npos) throw ParseError("unterminated ${ in pattern");
      const std::string name(text.substr(i + 2, close - i - 2));
      if (name.empty()) throw ParseError("empty variable name in pattern");
      p.push_variable(p.variable(name));
      i = close;
    } else if (const Letter a = alphabet.letter_of(c); a != 0) {
      p.push_terminal(a);
    } else if (c >= 'A' && c <= 'Z') {
      p.push_variable(p.variable(std::string(1, c)));
    } else if (c == ' ') {
      continue;
    } else {
      throw ParseError(std::string("pattern symbol '") + c + "' is neither a terminal nor a variable");
    }
  }
  return p;
}

VarId Pattern::variable(const std::string& name) {
  if (const auto found = find_variable(name)) return *found;
  names_.push_back(name);
  return names_.size() - 1;
}

std::optional<VarId> Pattern::find_variable(std::string_view name) const {
  const auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<VarId>(it - names_.begin());
}

void Pattern::push_terminal(Letter a) {
  if (a < 1 || a > sigma_) throw DomainError("terminal outside the alphabet");
  symbols_.push_back(Symbol::terminal(a));
}

void Pattern::push_variable(VarId x) {
  if (x >= names_.size()) throw DomainError("unknown variable id");
  symbols_.push_back(Symbol::variable(x));
}

void Pattern::append(const Word& w) {
  for (Letter a : w.letters()) push_terminal(a);
}

Pattern& Pattern::operator+=(const Pattern& other) {
  if (other.sigma_ != sigma_) throw DomainError("patterns over different alphabets");
  for (const Symbol& s : other.symbols_) {
    if (s.is_variable()) {
      push_variable(variable(other.names_[s.var]));
    } else {
      symbols_.push_back(s);
    }
  }
  return *this;
}

std::vector<VarId> Pattern::variables() const {
  std::vector<bool> seen(names_.size(), false);
  for (const Symbol& s : symbols_) {
    if (s.is_variable()) seen[s.var] = true;
  }
  std::vector<VarId> out;
  for (VarId x = 0; x < seen.size(); ++x) {
    if (seen[x]) out.push_back(x);
  }
  return out;
}

std::size_t Pattern::occurrences(VarId x) const {
  return static_cast<std::size_t>(std::count_if(
      symbols_.begin(), symbols_.end(),
      [x](const Symbol& s) { return s.is_variable() && s.var == x; }));
}

bool Pattern::has_variables() const {
  return std::any_of(symbols_.begin(), symbols_.end(),
                     [](const Symbol& s) { return s.is_variable(); });
}

bool Pattern::is_regular() const {
  for (VarId x : variables()) {
    if (occurrences(x) != 1) return false;
  }
  return true;
}

Word Pattern::terminal_word() const {
  Word w(sigma_);
  for (const Symbol& s : symbols_) {
    if (!s.is_variable()) w.push_back(s.letter);
  }
  return w;
}

LetterSet Pattern::terminal_alph() const { return terminal_word().alph(); }

std::string Pattern::render(const Alphabet& alphabet) const {
  std::string out;
  for (const Symbol& s : symbols_) {
    if (!s.is_variable()) {
      out += alphabet.glyph(s.letter);
      continue;
    }
    const std::string& name = names_[s.var];
    const bool bare = name.size() == 1 && name[0] >= 'A' && name[0] <= 'Z' &&
                      alphabet.letter_of(name[0]) == 0;
    out += bare ? name : "${" + name + "}";
  }
  return out;
}

ImageSpec ImageSpec::plain(Word w) {
  ImageSpec s;
  s.period = Word(w.sigma());
  s.tail = Word(w.sigma());
  s.head = std::move(w);
  return s;
}

Count ImageSpec::length() const {
  return Count(head.size()) + Count(period.size()) * reps + Count(tail.size());
}

UniversalitySignature ImageSpec::signature() const {
  const int sigma = std::max({head.sigma(), period.sigma(), tail.sigma()});
  UniversalitySignature s = UniversalitySignature::empty(sigma);
  if (!head.empty()) s = signature_of(head);
  if (!period.empty() && reps > 0) {
    s = concat_signatures(s, signature_power(signature_of(period), reps));
  }
  if (!tail.empty()) s = concat_signatures(s, signature_of(tail));
  return s;
}

Word ImageSpec::materialize(std::size_t max_length) const {
  if (length() > max_length) throw CapExceeded("image-length", max_length, "--image-cap");
  Word w = head;
  w += period.repeat(static_cast<std::size_t>(reps));
  w += tail;
  return w;
}

void Substitution::set(VarId x, Word w) {
  if (x >= images_.size()) images_.resize(x + 1);
  images_[x] = std::move(w);
}

const Word& Substitution::at(VarId x) const {
  if (!defined(x)) throw DomainError("substitution undefined on a pattern variable");
  return *images_[x];
}

Word apply(const Substitution& h, const Pattern& alpha) {
  Word out(alpha.sigma());
  for (const Symbol& s : alpha.symbols()) {
    if (s.is_variable()) {
      out += h.at(s.var);
    } else {
      out.push_back(s.letter);
    }
  }
  return out;
}

namespace {

template <typename SignatureOf>
UniversalitySignature fold_signature(const Pattern& alpha, SignatureOf&& var_signature) {
  UniversalitySignature acc = UniversalitySignature::empty(alpha.sigma());
  Word block(alpha.sigma());
  for (const Symbol& s : alpha.symbols()) {
    if (!s.is_variable()) {
      block.push_back(s.letter);
      continue;
    }
    if (!block.empty()) {
      acc = concat_signatures(acc, signature_of(block));
      block = Word(alpha.sigma());
    }
    acc = concat_signatures(acc, var_signature(s.var));
  }
  if (!block.empty()) acc = concat_signatures(acc, signature_of(block));
  return acc;
}

}  // namespace

Count verify_certificate(const Pattern& alpha, const SignatureCertificate& cert) {
  const auto sig = fold_signature(alpha, [&](VarId x) -> const UniversalitySignature& {
    if (x >= cert.images.size()) throw DomainError("certificate lacks a pattern variable");
    if (cert.images[x].sigma != alpha.sigma()) {
      throw DomainError("certificate signature over a different alphabet");
    }
    return cert.images[x];
  });
  return iota_from_signature(sig);
}

UniversalitySignature signature_of_image(const Pattern& alpha,
                                         const std::vector<ImageSpec>& images) {
  return fold_signature(alpha, [&](VarId x) {
    if (x >= images.size()) throw DomainError("image list lacks a pattern variable");
    return images[x].signature();
  });
}

}  // namespace simon
