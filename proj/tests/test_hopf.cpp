#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fna/enumeration.hpp"
#include "fna/hopf.hpp"
#include "fna/textio.hpp"

#include "support.hpp"

using namespace fna;
using test::elem;
using test::word_of;

TEST_CASE("homogeneous_components") {
  GradedDecomposition d = homogeneous_components(elem("x + [x]"));
  REQUIRE(d.size() == 2);
  CHECK(d.at(1) == elem("x"));
  CHECK(d.at(2) == elem("[x]"));

  d = homogeneous_components(Element::unit());
  REQUIRE(d.size() == 1);
  CHECK(d.at(0) == Element::unit());

  CHECK(homogeneous_components(Element::zero()).empty());
}

TEST_CASE("components sum back to the element and are homogeneous") {
  Element a = elem("2*[x [y]] - 1/2*x + 1 + x y");
  Element sum;
  for (const auto& [n, component] : homogeneous_components(a)) {
    sum += component;
    for (const auto& [w, c] : component.terms()) CHECK(w.degree() == n);
  }
  CHECK(sum == a);
}

TEST_CASE("antipode examples") {
  CHECK(antipode(Element::unit()) == Element::unit());
  CHECK(antipode(elem("x")).is_zero());
  CHECK(antipode(elem("[x] + 2*x")).is_zero());
  CHECK(antipode(Element::zero()).is_zero());
  // mixed degrees are legal; only the unit component survives
  CHECK(antipode(elem("3 + x + [x]")) == elem("3"));
}

TEST_CASE("right antipode identity at degree <= 4") {
  LinearMap id = [](const Element& e) { return e; };
  LinearMap s = [](const Element& e) { return antipode(e); };
  BasisCache cache(make_alphabet({"x"}));
  for (const BracketedWord& w : cache.words_up_to(4)) {
    Element e = Element::from_word(w);
    CHECK(convolve(id, s, e) == unit_counit(e));
  }
}

TEST_CASE("antipode agrees with u∘counit word by word") {
  BasisCache cache(make_alphabet({"x", "y"}));
  for (const BracketedWord& w : cache.words_up_to(3)) {
    Element e = Element::from_word(w);
    CHECK(antipode(e) == unit_counit(e));
  }
}

TEST_CASE("product grading on homogeneous inputs of degree <= 3") {
  BasisCache cache(make_alphabet({"x"}));
  std::vector<BracketedWord> words = cache.words_up_to(3);
  for (const auto& a : words)
    for (const auto& b : words) {
      Element product = diamond(Element::from_word(a), Element::from_word(b));
      for (const auto& [w, c] : product.terms()) CHECK(w.degree() == a.degree() + b.degree());
    }
}

TEST_CASE("coproduct grading shape at degree <= 4") {
  BasisCache cache(make_alphabet({"x"}));
  for (const BracketedWord& w : cache.words_up_to(4)) {
    const unsigned n = w.degree();
    const TensorElement dw = coproduct(w);
    for (const auto& [k, c] : dw.terms()) {
      const unsigned du = k.first.degree(), dv = k.second.degree();
      CHECK(((du == 0 && dv == n) || (du > 0 && dv > 0 && du + dv == n)));
    }
  }
}

TEST_CASE("bracket raises degree by exactly one") {
  BasisCache cache(make_alphabet({"x"}));
  for (const BracketedWord& w : cache.words_up_to(4)) {
    Element image = bracket(Element::from_word(w));
    REQUIRE(image.term_count() == 1);
    CHECK(image.terms().begin()->first.degree() == w.degree() + 1);
  }
}

TEST_CASE("check_connected") {
  LawReport r = check_connected(make_alphabet({"x"}), 3);
  CHECK(r.passed);
  CHECK(r.instances_checked == 22);
  CHECK(r.law == "connected");

  r = check_connected(make_alphabet({"x", "y"}), 2);
  CHECK(r.passed);

  // the degree-0 slice is exactly the identity word
  BasisCache cache(make_alphabet({"x", "y"}));
  REQUIRE(cache.bucket(0).size() == 1);
  CHECK(cache.bucket(0).front().is_unit());
}
