#include "fna/enumeration.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace fna {

std::vector<Letter> make_alphabet(const std::vector<std::string>& names) {
  if (names.empty()) throw EmptyAlphabetError();
  std::vector<Letter> alphabet;
  std::set<std::string> seen;
  alphabet.reserve(names.size());
  for (const std::string& name : names) {
    if (!seen.insert(name).second) throw DuplicateLetterError(name);
    alphabet.emplace_back(name);
  }
  return alphabet;
}

BasisCache::BasisCache(std::vector<Letter> alphabet) : alphabet_(std::move(alphabet)) {
  if (alphabet_.empty()) throw EmptyAlphabetError();
  std::set<std::string> seen;
  for (const Letter& l : alphabet_)
    if (!seen.insert(l.name()).second) throw DuplicateLetterError(l.name());
  buckets_.push_back({BracketedWord()});
  letter_led_.push_back({BracketedWord()});
}

const std::vector<BracketedWord>& BasisCache::bucket(unsigned degree) {
  while (buckets_.size() <= degree) grow(static_cast<unsigned>(buckets_.size()));
  return buckets_[degree];
}

void BasisCache::grow(unsigned degree) {
  // prepend a factor to every suffix word
  auto prepend = [](const Factor& f, const std::vector<BracketedWord>& suffixes,
                    std::vector<BracketedWord>& out) {
    for (const BracketedWord& s : suffixes) {
      std::vector<Factor> fs;
      fs.reserve(1 + s.width());
      fs.push_back(f);
      fs.insert(fs.end(), s.factors().begin(), s.factors().end());
      out.emplace_back(std::move(fs));
    }
  };

  std::vector<BracketedWord> led;  // first factor a letter
  for (const Letter& l : alphabet_) prepend(Factor::letter(l), buckets_[degree - 1], led);

  std::vector<BracketedWord> all = led;
  // first factor a bracket of degree d: content of degree d-1, rest not
  // starting with a bracket
  for (unsigned d = 1; d <= degree; ++d)
    for (const BracketedWord& content : buckets_[d - 1])
      prepend(Factor::bracket(content), letter_led_[degree - d], all);

  std::sort(led.begin(), led.end(), WordLess{});
  std::sort(all.begin(), all.end(), WordLess{});
  letter_led_.push_back(std::move(led));
  buckets_.push_back(std::move(all));
}

std::vector<BracketedWord> BasisCache::words_up_to(unsigned max_degree) {
  std::vector<BracketedWord> out;
  for (unsigned n = 0; n <= max_degree; ++n) {
    const auto& b = bucket(n);
    out.insert(out.end(), b.begin(), b.end());
  }
  return out;
}

std::vector<std::vector<BracketedWord>> enumerate_basis(const std::vector<Letter>& alphabet,
                                                        unsigned max_degree) {
  BasisCache cache(alphabet);
  std::vector<std::vector<BracketedWord>> out;
  out.reserve(max_degree + 1);
  for (unsigned n = 0; n <= max_degree; ++n) out.push_back(cache.bucket(n));
  return out;
}

std::vector<std::size_t> dimension_series(const std::vector<Letter>& alphabet,
                                          unsigned max_degree) {
  BasisCache cache(alphabet);
  std::vector<std::size_t> out;
  out.reserve(max_degree + 1);
  for (unsigned n = 0; n <= max_degree; ++n) out.push_back(cache.bucket(n).size());
  return out;
}

}  // namespace fna
