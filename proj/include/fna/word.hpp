#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fna/errors.hpp"

namespace fna {

/// An element of the generating alphabet. Names follow identifier syntax:
/// a leading alphabetic character followed by alphanumerics.
class Letter {
 public:
  explicit Letter(std::string name);

  const std::string& name() const { return name_; }

  friend bool operator==(const Letter& a, const Letter& b) { return a.name_ == b.name_; }
  friend std::strong_ordering operator<=>(const Letter& a, const Letter& b) {
    return a.name_ <=> b.name_;
  }

  static bool valid_name(const std::string& name);

 private:
  std::string name_;
};

class BracketedWord;

/// One factor of a bracketed word: a letter or a bracketed subword.
class Factor {
 public:
  static Factor letter(Letter l) { return Factor(std::move(l)); }
  static Factor bracket(BracketedWord content);

  bool is_letter() const { return std::holds_alternative<Letter>(repr_); }
  bool is_bracket() const { return !is_letter(); }

  const Letter& letter() const { return std::get<Letter>(repr_); }
  const BracketedWord& content() const { return *std::get<Ptr>(repr_); }

  unsigned degree() const;

  friend bool operator==(const Factor& a, const Factor& b);

 private:
  using Ptr = std::shared_ptr<const BracketedWord>;
  explicit Factor(Letter l) : repr_(std::move(l)) {}
  explicit Factor(Ptr p) : repr_(std::move(p)) {}
  std::variant<Letter, Ptr> repr_;
};

/// A basis word: an alternating sequence of letters and bracketed subwords
/// (no two bracket factors adjacent, recursively). The empty sequence is the
/// identity word. Immutable.
class BracketedWord {
 public:
  BracketedWord() = default;

  /// Builds a word from already-valid factors; rejects adjacent brackets at
  /// the top level (contents are valid by construction of Factor).
  explicit BracketedWord(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_unit() const { return factors_.empty(); }
  std::size_t width() const { return factors_.size(); }
  unsigned degree() const { return degree_; }

  friend bool operator==(const BracketedWord& a, const BracketedWord& b);

 private:
  std::vector<Factor> factors_;
  unsigned degree_ = 0;
};

/// All size measures of a word.
struct Measures {
  unsigned degree = 0;           // letters + brackets, at all nesting levels
  unsigned degree_letters = 0;   // letter occurrences
  unsigned degree_brackets = 0;  // bracket occurrences
  unsigned depth = 0;            // maximal bracket nesting
  unsigned breadth = 0;          // blocks of the standard decomposition
  unsigned width = 0;            // factors of the diamond factorization
};

Measures measures(const BracketedWord& w);

/// Total order: degree ascending, then width descending, then factorwise with
/// every letter preceding every bracket, letters by name, brackets by
/// recursive comparison of contents.
std::strong_ordering compare(const BracketedWord& a, const BracketedWord& b);

struct WordLess {
  bool operator()(const BracketedWord& a, const BracketedWord& b) const {
    return compare(a, b) == std::strong_ordering::less;
  }
};

/// The unique splitting of a nonempty word into width factors.
/// Throws EmptyWordError on the identity word.
std::vector<Factor> diamond_factorize(const BracketedWord& w);

/// An unvalidated candidate factor, as produced by parsers or generators.
class RawFactor {
 public:
  static RawFactor letter(std::string name);
  static RawFactor bracket(std::vector<RawFactor> content);

  bool is_letter() const { return name_.has_value(); }
  const std::string& name() const { return *name_; }
  const std::vector<RawFactor>& content() const { return content_; }

 private:
  RawFactor() = default;
  std::optional<std::string> name_;
  std::vector<RawFactor> content_;
};

/// Checks the alternating condition at every nesting level and returns the
/// basis word. Throws AdjacentBracketsError naming the first violating pair
/// and its nesting path, or InvalidLetterError on a bad letter name.
BracketedWord validate_basis(const std::vector<RawFactor>& candidate);

/// Inverse of validate_basis on valid words (used by generate-then-filter
/// style cross-checks).
std::vector<RawFactor> to_raw(const BracketedWord& w);

/// Convenience builders.
BracketedWord letter_word(const Letter& l);
BracketedWord bracket_word(const BracketedWord& content);

}  // namespace fna
