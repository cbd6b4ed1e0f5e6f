#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace fna {

/// Base class of every error raised by the kernel.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& message) : std::runtime_error(message) {}
};

/// A letter name that is not an identifier (leading alphabetic, then alphanumerics).
class InvalidLetterError : public Error {
 public:
  explicit InvalidLetterError(const std::string& name)
      : Error("invalid letter name: \"" + name + "\""), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

/// Two bracket factors are adjacent at some nesting level.
/// `path` is the sequence of factor indices descended into bracket contents;
/// `index` is the position of the left factor of the offending pair.
class AdjacentBracketsError : public Error {
 public:
  AdjacentBracketsError(std::vector<std::size_t> path, std::size_t index)
      : Error(describe(path, index)), path_(std::move(path)), index_(index) {}
  const std::vector<std::size_t>& path() const { return path_; }
  std::size_t index() const { return index_; }

 private:
  static std::string describe(const std::vector<std::size_t>& path, std::size_t index) {
    std::string where = "adjacent bracket factors at index " + std::to_string(index);
    if (!path.empty()) {
      where += " under path ";
      for (std::size_t i = 0; i < path.size(); ++i) {
        if (i) where += "/";
        where += std::to_string(path[i]);
      }
    }
    return where;
  }
  std::vector<std::size_t> path_;
  std::size_t index_;
};

/// The empty word was passed where a nonempty word is required.
class EmptyWordError : public Error {
 public:
  EmptyWordError() : Error("the empty word has no factorization") {}
};

/// Rational with a zero denominator.
class ZeroDenominatorError : public Error {
 public:
  explicit ZeroDenominatorError(std::size_t offset = 0)
      : Error("zero denominator at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Input text that does not match the expression grammar.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, std::vector<std::string> expected)
      : Error(describe(offset, expected)), offset_(offset), expected_(std::move(expected)) {}
  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  static std::string describe(std::size_t offset, const std::vector<std::string>& expected) {
    std::string msg = "syntax error at offset " + std::to_string(offset);
    if (!expected.empty()) {
      msg += ": expected ";
      for (std::size_t i = 0; i < expected.size(); ++i) {
        if (i) msg += (i + 1 == expected.size()) ? " or " : ", ";
        msg += expected[i];
      }
    }
    return msg;
  }
  std::size_t offset_;
  std::vector<std::string> expected_;
};

/// Malformed serialized document.
class SchemaError : public Error {
 public:
  explicit SchemaError(const std::string& message) : Error("schema error: " + message) {}
};

class UnknownLawError : public Error {
 public:
  explicit UnknownLawError(const std::string& law)
      : Error("unknown law: \"" + law + "\""), law_(law) {}
  const std::string& law() const { return law_; }

 private:
  std::string law_;
};

class EmptySpaceError : public Error {
 public:
  explicit EmptySpaceError(const std::string& message) : Error("empty search space: " + message) {}
};

class EmptyAlphabetError : public Error {
 public:
  EmptyAlphabetError() : Error("alphabet must be nonempty") {}
};

class DuplicateLetterError : public Error {
 public:
  explicit DuplicateLetterError(const std::string& name)
      : Error("duplicate letter in alphabet: \"" + name + "\""), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

/// A coproduct term does not respect the grading shape required by the
/// degree-by-degree antipode recursion. Indicates a kernel bug; never ignored.
class NonGradedCoproductError : public Error {
 public:
  explicit NonGradedCoproductError(const std::string& message)
      : Error("non-graded coproduct term: " + message) {}
};

}  // namespace fna
