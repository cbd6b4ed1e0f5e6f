#pragma once

// Shared helpers for the test suites: an independent generate-then-filter
// enumeration of the basis, deterministic random element generation, and a
// few convenience builders.

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "fna/element.hpp"
#include "fna/textio.hpp"
#include "fna/word.hpp"

namespace fna::test {

inline BracketedWord word_of(const std::string& text) {
  Element e = eval_string(text);
  if (e.term_count() != 1 || e.terms().begin()->second != 1)
    throw std::logic_error("not a single monic word: " + text);
  return e.terms().begin()->first;
}

inline Element elem(const std::string& text) { return eval_string(text); }

/// All candidate factor sequences of exact total degree n over the given
/// letters, with bracket contents arbitrary candidate sequences of their own
/// degree. Includes non-alternating candidates; the filter below decides.
class RawSequenceOracle {
 public:
  explicit RawSequenceOracle(std::vector<std::string> letters) : letters_(std::move(letters)) {}

  const std::vector<std::vector<RawFactor>>& sequences(unsigned degree) {
    while (memo_.size() <= degree) {
      unsigned n = static_cast<unsigned>(memo_.size());
      std::vector<std::vector<RawFactor>> out;
      if (n == 0) {
        out.push_back({});
      } else {
        for (const std::string& l : letters_)
          for (const auto& rest : sequences(n - 1)) {
            std::vector<RawFactor> seq;
            seq.push_back(RawFactor::letter(l));
            seq.insert(seq.end(), rest.begin(), rest.end());
            out.push_back(std::move(seq));
          }
        for (unsigned d = 1; d <= n; ++d)
          for (const auto& content : sequences(d - 1))
            for (const auto& rest : sequences(n - d)) {
              std::vector<RawFactor> seq;
              seq.push_back(RawFactor::bracket(content));
              seq.insert(seq.end(), rest.begin(), rest.end());
              out.push_back(std::move(seq));
            }
      }
      memo_.push_back(std::move(out));
    }
    return memo_[degree];
  }

  /// The valid basis words of exact degree n, sorted in canonical order —
  /// computed purely by filtering, independent of the enumeration module.
  std::vector<BracketedWord> filtered_words(unsigned degree) {
    std::vector<BracketedWord> words;
    for (const auto& seq : sequences(degree)) {
      try {
        words.push_back(validate_basis(seq));
      } catch (const AdjacentBracketsError&) {
      }
    }
    std::sort(words.begin(), words.end(), WordLess{});
    return words;
  }

 private:
  std::vector<std::string> letters_;
  std::vector<std::vector<std::vector<RawFactor>>> memo_;
};

/// Deterministic element with terms drawn from `words` and coefficients from
/// `coeffs` (raw engine output reduced by modulo, stable across platforms).
inline Element random_element(std::mt19937_64& rng, const std::vector<BracketedWord>& words,
                              const std::vector<Rational>& coeffs, std::size_t max_terms) {
  Element out;
  std::size_t count = 1 + static_cast<std::size_t>(rng() % max_terms);
  for (std::size_t i = 0; i < count; ++i) {
    const BracketedWord& w = words[static_cast<std::size_t>(rng() % words.size())];
    const Rational& c = coeffs[static_cast<std::size_t>(rng() % coeffs.size())];
    out.add_term(w, c);
  }
  return out;
}

inline std::vector<Rational> small_coefficients() {
  return {Rational(-2), Rational(-1), Rational(-1, 2), Rational(1, 2), Rational(1), Rational(2)};
}

}  // namespace fna::test
