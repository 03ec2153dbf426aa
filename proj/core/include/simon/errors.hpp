#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace simon {

// Input violates an operation's domain (e.g. a letter outside alph(w)).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Malformed textual input: words, patterns, JSON documents, DIMACS files.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A configurable resource cap was hit. `cap_name` identifies the cap and
// `flag` the command-line option that raises it.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(std::string cap_name, std::size_t limit, std::string flag)
      : std::runtime_error("cap '" + cap_name + "' exceeded (limit " +
                           std::to_string(limit) + "); raise it with " + flag),
        cap_name_(std::move(cap_name)),
        limit_(limit),
        flag_(std::move(flag)) {}

  const std::string& cap_name() const noexcept { return cap_name_; }
  std::size_t limit() const noexcept { return limit_; }
  const std::string& flag() const noexcept { return flag_; }

 private:
  std::string cap_name_;
  std::size_t limit_;
  std::string flag_;
};

}  // namespace simon
