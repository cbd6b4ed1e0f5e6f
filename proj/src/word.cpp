#include "fna/word.hpp"

#include <algorithm>
#include <utility>

namespace fna {

namespace {

bool is_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
bool is_alnum(char c) { return is_alpha(c) || (c >= '0' && c <= '9'); }

}  // namespace

bool Letter::valid_name(const std::string& name) {
  if (name.empty() || !is_alpha(name.front())) return false;
  return std::all_of(name.begin(), name.end(), is_alnum);
}

Letter::Letter(std::string name) : name_(std::move(name)) {
  if (!valid_name(name_)) throw InvalidLetterError(name_);
}

Factor Factor::bracket(BracketedWord content) {
  return Factor(std::make_shared<const BracketedWord>(std::move(content)));
}

unsigned Factor::degree() const { return is_letter() ? 1 : 1 + content().degree(); }

bool operator==(const Factor& a, const Factor& b) {
  if (a.is_letter() != b.is_letter()) return false;
  if (a.is_letter()) return a.letter() == b.letter();
  const auto& pa = std::get<Factor::Ptr>(a.repr_);
  const auto& pb = std::get<Factor::Ptr>(b.repr_);
  return pa == pb || *pa == *pb;
}

BracketedWord::BracketedWord(std::vector<Factor> factors) : factors_(std::move(factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i > 0 && factors_[i].is_bracket() && factors_[i - 1].is_bracket())
      throw AdjacentBracketsError({}, i - 1);
    degree_ += factors_[i].degree();
  }
}

bool operator==(const BracketedWord& a, const BracketedWord& b) {
  if (a.degree_ != b.degree_ || a.factors_.size() != b.factors_.size()) return false;
  return a.factors_ == b.factors_;
}

Measures measures(const BracketedWord& w) {
  Measures m;
  m.degree = w.degree();
  m.width = static_cast<unsigned>(w.width());
  bool prev_letter = false;
  for (const Factor& f : w.factors()) {
    if (f.is_letter()) {
      ++m.degree_letters;
      if (!prev_letter) ++m.breadth;  // a maximal letter run is one block
      prev_letter = true;
    } else {
      Measures inner = measures(f.content());
      ++m.degree_brackets;
      m.degree_letters += inner.degree_letters;
      m.degree_brackets += inner.degree_brackets;
      m.depth = std::max(m.depth, 1 + inner.depth);
      ++m.breadth;
      prev_letter = false;
    }
  }
  return m;
}

namespace {

std::strong_ordering compare_factors(const Factor& a, const Factor& b) {
  if (a.is_letter() != b.is_letter())
    return a.is_letter() ? std::strong_ordering::less : std::strong_ordering::greater;
  if (a.is_letter()) return a.letter() <=> b.letter();
  return compare(a.content(), b.content());
}

}  // namespace

std::strong_ordering compare(const BracketedWord& a, const BracketedWord& b) {
  if (auto c = a.degree() <=> b.degree(); c != std::strong_ordering::equal) return c;
  // wider words first at equal degree
  if (auto c = b.width() <=> a.width(); c != std::strong_ordering::equal) return c;
  for (std::size_t i = 0; i < a.width(); ++i)
    if (auto c = compare_factors(a.factors()[i], b.factors()[i]); c != std::strong_ordering::equal)
      return c;
  return std::strong_ordering::equal;
}

std::vector<Factor> diamond_factorize(const BracketedWord& w) {
  if (w.is_unit()) throw EmptyWordError();
  return w.factors();
}

RawFactor RawFactor::letter(std::string name) {
  RawFactor f;
  f.name_ = std::move(name);
  return f;
}

RawFactor RawFactor::bracket(std::vector<RawFactor> content) {
  RawFactor f;
  f.content_ = std::move(content);
  return f;
}

namespace {

BracketedWord validate_at(const std::vector<RawFactor>& candidate, std::vector<std::size_t>& path) {
  std::vector<Factor> factors;
  factors.reserve(candidate.size());
  bool prev_bracket = false;
  for (std::size_t i = 0; i < candidate.size(); ++i) {
    const RawFactor& f = candidate[i];
    if (f.is_letter()) {
      factors.push_back(Factor::letter(Letter(f.name())));
      prev_bracket = false;
    } else {
      if (prev_bracket) throw AdjacentBracketsError(path, i - 1);
      path.push_back(i);
      BracketedWord content = validate_at(f.content(), path);
      path.pop_back();
      factors.push_back(Factor::bracket(std::move(content)));
      prev_bracket = true;
    }
  }
  return BracketedWord(std::move(factors));
}

}  // namespace

BracketedWord validate_basis(const std::vector<RawFactor>& candidate) {
  std::vector<std::size_t> path;
  return validate_at(candidate, path);
}

std::vector<RawFactor> to_raw(const BracketedWord& w) {
  std::vector<RawFactor> raw;
  raw.reserve(w.width());
  for (const Factor& f : w.factors()) {
    if (f.is_letter())
      raw.push_back(RawFactor::letter(f.letter().name()));
    else
      raw.push_back(RawFactor::bracket(to_raw(f.content())));
  }
  return raw;
}

BracketedWord letter_word(const Letter& l) { return BracketedWord({Factor::letter(l)}); }

BracketedWord bracket_word(const BracketedWord& content) {
  return BracketedWord({Factor::bracket(content)});
}

}  // namespace fna
