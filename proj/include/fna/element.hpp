#pragma once

#include <functional>
#include <map>
#include <utility>

#include "fna/rational.hpp"
#include "fna/word.hpp"

namespace fna {

/// A finite linear combination of basis words with exact rational
/// coefficients. No stored coefficient is zero; iteration follows the
/// canonical word order.
class Element {
 public:
  using Terms = std::map<BracketedWord, Rational, WordLess>;

  Element() = default;

  static Element zero() { return {}; }
  static Element unit() { return from_word(BracketedWord()); }
  static Element from_word(BracketedWord w, Rational coeff = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  Rational coefficient(const BracketedWord& w) const;

  void add_term(const BracketedWord& w, const Rational& coeff);

  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);
  Element& operator*=(const Rational& scalar);

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Rational& c, Element a) { return a *= c; }
  friend Element operator-(Element a) { return a *= Rational(-1); }

  friend bool operator==(const Element& a, const Element& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

/// ca*a + cb*b with like terms collected and zeros dropped.
Element combine(const Element& a, const Element& b, const Rational& ca, const Rational& cb);

struct WordPairLess {
  bool operator()(const std::pair<BracketedWord, BracketedWord>& a,
                  const std::pair<BracketedWord, BracketedWord>& b) const {
    auto c = compare(a.first, b.first);
    if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
    return compare(a.second, b.second) == std::strong_ordering::less;
  }
};

/// A finite linear combination of ordered pairs of basis words (an element of
/// the tensor square).
class TensorElement {
 public:
  using Key = std::pair<BracketedWord, BracketedWord>;
  using Terms = std::map<Key, Rational, WordPairLess>;

  TensorElement() = default;

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const BracketedWord& left, const BracketedWord& right, const Rational& coeff);

  TensorElement& operator+=(const TensorElement& other);
  TensorElement& operator*=(const Rational& scalar);

  friend bool operator==(const TensorElement& a, const TensorElement& b) {
    return a.terms_ == b.terms_;
  }

 private:
  Terms terms_;
};

/// a (x) b, bilinear in both slots.
TensorElement tensor(const Element& a, const Element& b);

/// Bilinear extension of (a (x) b)(c (x) d) = (a<>c) (x) (b<>d), where <> is
/// the algebra product.
TensorElement tensor_multiply(const TensorElement& s, const TensorElement& t);

/// (id (x) f) applied termwise; f must be linear (caller contract).
TensorElement apply_right(const TensorElement& t,
                          const std::function<Element(const Element&)>& f);

}  // namespace fna
