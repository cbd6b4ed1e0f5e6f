#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fna/algebra.hpp"
#include "fna/enumeration.hpp"
#include "fna/textio.hpp"

#include "support.hpp"

using namespace fna;
using test::elem;
using test::word_of;

TEST_CASE("parse structure") {
  RawExprPtr e = parse("N(x)*N(y)");
  const auto* product = std::get_if<RawExpr::Product>(&e->node());
  REQUIRE(product != nullptr);
  REQUIRE(product->factors.size() == 2);
  CHECK(std::holds_alternative<RawExpr::Op>(product->factors[0]->node()));
  CHECK(std::holds_alternative<RawExpr::Op>(product->factors[1]->node()));

  e = parse("2/3*[x y] - 1");
  const auto* sum = std::get_if<RawExpr::Sum>(&e->node());
  REQUIRE(sum != nullptr);
  REQUIRE(sum->terms.size() == 2);
  CHECK(sum->terms[0].first == Rational(2, 3));
  CHECK(std::holds_alternative<RawExpr::Op>(sum->terms[0].second->node()));
  CHECK(sum->terms[1].first == Rational(-1));
  CHECK(std::holds_alternative<RawExpr::Unit>(sum->terms[1].second->node()));
}

TEST_CASE("parse diagnostics carry byte offsets") {
  try {
    parse("N(x");
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.offset() == 3);
  }
  try {
    parse("2/3 x");
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.offset() == 4);
  }
  CHECK_THROWS_AS(parse(""), SyntaxError);
  CHECK_THROWS_AS(parse("x +"), SyntaxError);
  CHECK_THROWS_AS(parse("x ? y"), SyntaxError);
  CHECK_THROWS_AS(parse("N x"), SyntaxError);   // reserved operator needs '('
  CHECK_THROWS_AS(parse("2x"), SyntaxError);    // coefficients need '*'
  CHECK_THROWS_AS(parse("x*2"), SyntaxError);   // only '1' is a word atom
  CHECK_THROWS_AS(parse("1/0"), ZeroDenominatorError);
}

TEST_CASE("whitespace insensitive grammar oddments") {
  CHECK(eval_string("  N( x ) * N( y )  ") == elem("N(x)*N(y)"));
  CHECK(eval_string("x y") == eval_string("x*y"));
  CHECK(eval_string("x(y)") == eval_string("x y"));
  CHECK(eval_string("1 x") == elem("x"));   // unit atom juxtaposed
  CHECK(eval_string("-x") == combine(Element::zero(), elem("x"), 0, -1));
  CHECK(eval_string("+x") == elem("x"));
  CHECK(eval_string("0") == Element::zero());
  CHECK(eval_string("xy") == Element::from_word(letter_word(Letter("xy"))));  // one letter
}

TEST_CASE("print_canonical") {
  CHECK(print_canonical(elem("N(x)*N(y)")) == "[x [y]] + [[x] y] - [[x y]]");
  CHECK(print_canonical(Element::zero()) == "0");
  CHECK(print_canonical(elem("1 + 2*[1]")) == "1 + 2*[1]");
  CHECK(print_canonical(elem("-x")) == "-x");
  CHECK(print_canonical(elem("1/2*x - 2/3*[1]")) == "1/2*x - 2/3*[1]");
  CHECK(print_canonical(elem("x [1] y")) == "x [1] y");
}

TEST_CASE("print_canonical tensors") {
  CHECK(print_canonical(tensor(Element::unit(), elem("x"))) == "1 (x) x");
  CHECK(print_canonical(TensorElement{}) == "0");
  TensorElement t = tensor(elem("2*x"), elem("[1]"));
  CHECK(print_canonical(t) == "2*x (x) [1]");
}

TEST_CASE("print_latex") {
  CHECK(print_latex(elem("[x]")) == "\\lfloor x\\rfloor");
  CHECK(print_latex(elem("2*x")) == "2x");
  CHECK(print_latex(elem("-[[x y]]")) == "-\\lfloor\\lfloor xy\\rfloor\\rfloor");
  CHECK(print_latex(elem("1/2*x")) == "\\frac{1}{2}x");
  CHECK(print_latex(elem("2 + [1] x")) == "2 + \\lfloor 1\\rfloor x");
  CHECK(print_latex(Element::zero()) == "0");
}

TEST_CASE("json schema instances") {
  CHECK(to_json(elem("x [1]")) ==
        R"({"terms":[{"num":"1","den":"1","word":["x",{"N":[]}]}]})");
  CHECK(to_json(Element::unit()) == R"({"terms":[{"num":"1","den":"1","word":[]}]})");
  CHECK(to_json(Element::zero()) == R"({"terms":[]})");
}

TEST_CASE("element_from_json") {
  Element e = elem("x [1]");
  CHECK(element_from_json(to_json(e)) == e);
  CHECK(element_from_json(R"({"terms":[]})") == Element::zero());
  // unsorted and repeated input terms normalize on load
  Element two_x = element_from_json(
      R"({"terms":[{"num":"1","den":"1","word":["x"]},{"num":"1","den":"1","word":["x"]}]})");
  CHECK(two_x == elem("2*x"));

  CHECK_THROWS_AS(element_from_json("not json"), SchemaError);
  CHECK_THROWS_AS(element_from_json(R"({"terms":[{"num":"1","den":"1"}]})"), SchemaError);
  CHECK_THROWS_AS(element_from_json(R"({"terms":[{"num":1,"den":"1","word":[]}]})"), SchemaError);
  CHECK_THROWS_AS(
      element_from_json(R"({"terms":[{"num":"1","den":"1","word":[{"M":[]}]}]})"), SchemaError);
  CHECK_THROWS_AS(
      element_from_json(R"({"terms":[{"num":"1","den":"1","word":[{"N":[]},{"N":[]}]}]})"),
      SchemaError);
  CHECK_THROWS_AS(element_from_json(R"({"terms":[{"num":"1","den":"0","word":[]}]})"),
                  ZeroDenominatorError);
}

TEST_CASE("round trips over enumerated words of degree <= 3") {
  BasisCache cache(make_alphabet({"x", "y"}));
  std::vector<BracketedWord> words = cache.words_up_to(3);
  auto coeffs = test::small_coefficients();

  // single-term elements: every word against every coefficient
  for (const auto& w : words) {
    for (const auto& c : coeffs) {
      Element e = Element::from_word(w, c);
      CHECK(eval_string(print_canonical(e)) == e);
      std::string j = to_json(e);
      CHECK(element_from_json(j) == e);
      CHECK(to_json(element_from_json(j)) == j);  // byte-stable
    }
  }

  // seeded multi-term elements
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 200; ++i) {
    Element e = test::random_element(rng, words, coeffs, 5);
    CHECK(eval_string(print_canonical(e)) == e);
    std::string j = to_json(e);
    CHECK(element_from_json(j) == e);
    CHECK(to_json(element_from_json(j)) == j);
  }
}

namespace {

// grammar-directed generator of well-formed inputs. `budget` caps the total
// number of atoms so evaluated products stay desk-sized (bracket products
// expand exponentially in the nesting).
std::string random_expression(std::mt19937_64& rng, int depth, int& budget);

std::string random_atom(std::mt19937_64& rng, int depth, int& budget) {
  --budget;
  switch (rng() % ((depth > 0 && budget > 0) ? 5 : 3)) {
    case 0: return "x";
    case 1: return "y";
    case 2: return "1";
    case 3: return "N(" + random_expression(rng, depth - 1, budget) + ")";
    default: return "[" + random_expression(rng, depth - 1, budget) + "]";
  }
}

std::string random_term(std::mt19937_64& rng, int depth, int& budget) {
  std::string out;
  if (rng() % 3 == 0) {
    out += std::to_string(1 + rng() % 9);
    if (rng() % 2 == 0) out += "/" + std::to_string(1 + rng() % 9);
    out += "*";
  }
  std::size_t atoms = 1 + rng() % 2;
  for (std::size_t i = 0; i < atoms; ++i) {
    if (i) out += (rng() % 2 == 0) ? " " : "*";
    out += random_atom(rng, depth, budget);
  }
  return out;
}

std::string random_expression(std::mt19937_64& rng, int depth, int& budget) {
  std::string out = random_term(rng, depth, budget);
  std::size_t extra = rng() % 2;
  for (std::size_t i = 0; i < extra && budget > 0; ++i)
    out += (rng() % 2 == 0 ? " + " : " - ") + random_term(rng, depth, budget);
  return out;
}

}  // namespace

TEST_CASE("fuzz: generated inputs parse") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 500; ++i) {
    int budget = 24;
    std::string input = random_expression(rng, 4, budget);
    CAPTURE(input);
    CHECK_NOTHROW(parse(input));
  }
}

TEST_CASE("fuzz: generated inputs evaluate and round trip") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 150; ++i) {
    int budget = 7;
    std::string input = random_expression(rng, 2, budget);
    CAPTURE(input);
    Element e = eval_string(input);
    CHECK(eval_string(print_canonical(e)) == e);
  }
}

TEST_CASE("fuzz: mutated inputs never crash") {
  std::mt19937_64 rng(100);
  const std::string symbols = "xyN1[]()*/+- 2";
  for (int i = 0; i < 500; ++i) {
    int budget = 10;
    std::string input = random_expression(rng, 2, budget);
    std::size_t edits = 1 + rng() % 4;
    for (std::size_t k = 0; k < edits && !input.empty(); ++k) {
      std::size_t pos = rng() % input.size();
      switch (rng() % 3) {
        case 0: input[pos] = symbols[rng() % symbols.size()]; break;
        case 1: input.erase(pos, 1); break;
        default: input.insert(pos, 1, symbols[rng() % symbols.size()]); break;
      }
    }
    CAPTURE(input);
    try {
      parse(input);
    } catch (const Error&) {
      // positioned diagnostics are the contract; crashes are not
    }
  }
}
