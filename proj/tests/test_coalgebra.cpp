#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fna/coalgebra.hpp"
#include "fna/enumeration.hpp"
#include "fna/textio.hpp"

#include "support.hpp"

using namespace fna;
using test::elem;
using test::word_of;

namespace {
const LinearMap kId = [](const Element& e) { return e; };
const LinearMap kUnitCounit = [](const Element& e) { return unit_counit(e); };
}  // namespace

TEST_CASE("coproduct base cases") {
  CHECK(coproduct(Element::unit()) == tensor(Element::unit(), Element::unit()));
  CHECK(coproduct(elem("x")) == tensor(Element::unit(), elem("x")));
  CHECK(coproduct(elem("[x]")) == tensor(Element::unit(), elem("[x]")));
  // bracket-free words collapse already by the letter rule
  CHECK(coproduct(elem("x y z")) == tensor(Element::unit(), elem("x y z")));
}

TEST_CASE("coproduct is linear") {
  Element a = elem("2*x - 1/2*[x [y]]");
  TensorElement expected = tensor(Element::unit(), a);
  CHECK(coproduct(a) == expected);
  CHECK(coproduct(Element::zero()).is_zero());
}

TEST_CASE("counit") {
  CHECK(counit(Element::unit()) == 1);
  CHECK(counit(elem("3*x + [1]")) == 0);
  CHECK(counit(elem("2 + x")) == 2);
  CHECK(counit(elem("2/3 - x")) == Rational(2, 3));
  CHECK(counit(Element::zero()) == 0);
}

TEST_CASE("convolve") {
  CHECK(convolve(kId, kId, elem("x")) == elem("x"));
  CHECK(convolve(kUnitCounit, kUnitCounit, Element::unit()) == Element::unit());
  // u∘counit is not a right convolution identity
  CHECK(convolve(kId, kUnitCounit, elem("x")).is_zero());
}

TEST_CASE("coassociativity at degree <= 4") {
  struct KeyLess {
    bool operator()(const std::vector<BracketedWord>& a,
                    const std::vector<BracketedWord>& b) const {
      for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        auto c = compare(a[i], b[i]);
        if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
      }
      return a.size() < b.size();
    }
  };
  BasisCache cache(make_alphabet({"x"}));
  for (const BracketedWord& w : cache.words_up_to(4)) {
    TensorElement dw = coproduct(w);
    // expand both triple coproducts over pairs of words
    std::map<std::vector<BracketedWord>, Rational, KeyLess> lhs, rhs;
    auto add = [](auto& m, std::vector<BracketedWord> k, const Rational& c) {
      auto [it, inserted] = m.emplace(std::move(k), c);
      if (!inserted) {
        it->second += c;
        if (it->second == 0) m.erase(it);
      }
    };
    for (const auto& [k, c] : dw.terms()) {
      const TensorElement d_left = coproduct(k.first);
      for (const auto& [k2, c2] : d_left.terms())
        add(lhs, {k2.first, k2.second, k.second}, c * c2);
      const TensorElement d_right = coproduct(k.second);
      for (const auto& [k2, c2] : d_right.terms())
        add(rhs, {k.first, k2.first, k2.second}, c * c2);
    }
    CHECK(lhs == rhs);
  }
}

TEST_CASE("coproduct is an algebra map on pairs of degree <= 3") {
  BasisCache cache(make_alphabet({"x"}));
  std::vector<BracketedWord> words = cache.words_up_to(3);
  for (const auto& a : words)
    for (const auto& b : words) {
      Element u = Element::from_word(a), v = Element::from_word(b);
      CHECK(coproduct(diamond(u, v)) == tensor_multiply(coproduct(u), coproduct(v)));
    }
}

TEST_CASE("cocycle rule at degree <= 4") {
  BasisCache cache(make_alphabet({"x"}));
  for (const BracketedWord& w : cache.words_up_to(4)) {
    Element e = Element::from_word(w);
    CHECK(coproduct(bracket(e)) ==
          apply_right(coproduct(e), [](const Element& v) { return bracket(v); }));
  }
}

TEST_CASE("left counicity at degree <= 4") {
  BasisCache cache(make_alphabet({"x"}));
  for (const BracketedWord& w : cache.words_up_to(4)) {
    Element collapsed;
    const TensorElement dw = coproduct(w);
    for (const auto& [k, c] : dw.terms())
      collapsed.add_term(k.second, c * counit(Element::from_word(k.first)));
    CHECK(collapsed == Element::from_word(w));
  }
}

TEST_CASE("counit is an algebra map on pairs of degree <= 3") {
  BasisCache cache(make_alphabet({"x"}));
  std::vector<BracketedWord> words = cache.words_up_to(3);
  for (const auto& a : words)
    for (const auto& b : words)
      CHECK(counit(diamond(Element::from_word(a), Element::from_word(b))) ==
            counit(Element::from_word(a)) * counit(Element::from_word(b)));
}

TEST_CASE("the right counit identity fails: witness w = x") {
  BracketedWord w = word_of("x");
  Element collapsed;
  const TensorElement dw = coproduct(w);
  for (const auto& [k, c] : dw.terms())
    collapsed.add_term(k.first, c * counit(Element::from_word(k.second)));
  CHECK_FALSE(collapsed == Element::from_word(w));
  CHECK(collapsed.is_zero());
}

TEST_CASE("observed closed form: the recursion collapses to 1 (x) w at degree <= 4") {
  // checked empirically against the defining recursion, never assumed by it
  BasisCache cache(make_alphabet({"x"}));
  for (const BracketedWord& w : cache.words_up_to(4))
    CHECK(coproduct(w) == tensor(Element::unit(), Element::from_word(w)));
}
