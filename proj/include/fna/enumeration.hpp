#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fna/word.hpp"

namespace fna {

/// Validated, duplicate-free alphabet from names.
std::vector<Letter> make_alphabet(const std::vector<std::string>& names);

/// Per-alphabet memoized generation of the basis by degree. Buckets are
/// complete, duplicate-free and sorted in canonical word order. A degree-n
/// word is the identity (n = 0) or an alternating sequence of letter factors
/// (degree 1) and bracket factors (degree 1 + content degree, content any
/// word of smaller degree).
class BasisCache {
 public:
  explicit BasisCache(std::vector<Letter> alphabet);

  const std::vector<Letter>& alphabet() const { return alphabet_; }

  /// All basis words of degree exactly n.
  const std::vector<BracketedWord>& bucket(unsigned degree);

  /// Degrees 0..max_degree flattened, degree-major.
  std::vector<BracketedWord> words_up_to(unsigned max_degree);

 private:
  void grow(unsigned degree);

  std::vector<Letter> alphabet_;
  std::vector<std::vector<BracketedWord>> buckets_;
  std::vector<std::vector<BracketedWord>> letter_led_;  // words not starting with a bracket
};

/// Buckets 0..max_degree.
std::vector<std::vector<BracketedWord>> enumerate_basis(const std::vector<Letter>& alphabet,
                                                        unsigned max_degree);

/// Bucket sizes 0..max_degree.
std::vector<std::size_t> dimension_series(const std::vector<Letter>& alphabet,
                                          unsigned max_degree);

}  // namespace fna
