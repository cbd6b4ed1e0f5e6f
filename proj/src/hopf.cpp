#include "fna/hopf.hpp"

#include <string>

#include "fna/enumeration.hpp"

namespace fna {

GradedDecomposition homogeneous_components(const Element& a) {
  GradedDecomposition out;
  for (const auto& [w, c] : a.terms()) out[w.degree()].add_term(w, c);
  return out;
}

namespace {

Element antipode_word(const BracketedWord& w) {
  if (w.is_unit()) return Element::unit();
  const unsigned n = w.degree();
  Element out;
  const TensorElement dw = coproduct(w);
  for (const auto& [k, c] : dw.terms()) {
    const unsigned du = k.first.degree();
    const unsigned dv = k.second.degree();
    if (du + dv != n || (du == 0 && dv != n) || (du > 0 && dv == 0))
      throw NonGradedCoproductError("term of degrees (" + std::to_string(du) + ", " +
                                    std::to_string(dv) + ") in a coproduct of degree " +
                                    std::to_string(n));
    if (du == 0) continue;  // the 1 (x) w part solves to the recursion below
    Element piece = diamond(Element::from_word(k.first), antipode_word(k.second));
    piece *= -c;
    out += piece;
  }
  return out;
}

}  // namespace

Element antipode(const Element& a) {
  Element out;
  for (const auto& [degree, component] : homogeneous_components(a)) {
    (void)degree;
    for (const auto& [w, c] : component.terms()) {
      Element sw = antipode_word(w);
      sw *= c;
      out += sw;
    }
  }
  return out;
}

LawReport check_connected(const std::vector<Letter>& alphabet, unsigned max_degree) {
  BasisCache cache(alphabet);
  LawReport report;
  report.law = "connected";
  for (const Letter& l : alphabet) report.space.alphabet.push_back(l.name());
  report.space.max_degree = max_degree;
  report.space.arity = 1;
  report.space.exhaustive = true;
  report.passed = true;

  const auto& degree_zero = cache.bucket(0);
  if (degree_zero.size() != 1 || !degree_zero.front().is_unit()) {
    report.passed = false;
    report.counterexample = TupleRecord{{}, "degree-0 slice", "the identity word alone"};
    return report;
  }
  for (unsigned n = 0; n <= max_degree; ++n) {
    for (const BracketedWord& w : cache.bucket(n)) {
      ++report.instances_checked;
      Rational eps = counit(Element::from_word(w));
      Rational expected = n == 0 ? 1 : 0;
      if (eps != expected) {
        report.passed = false;
        report.counterexample = TupleRecord{{},
                                            "counit = " + rational_to_string(eps),
                                            "counit = " + rational_to_string(expected)};
        return report;
      }
    }
  }
  return report;
}

}  // namespace fna
