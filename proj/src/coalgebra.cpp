#include "fna/coalgebra.hpp"

namespace fna {

namespace {

TensorElement coproduct_factor(const Factor& f) {
  if (f.is_letter())
    return tensor(Element::unit(), Element::from_word(BracketedWord({f})));
  return apply_right(coproduct(f.content()), [](const Element& e) { return bracket(e); });
}

}  // namespace

TensorElement coproduct(const BracketedWord& w) {
  if (w.is_unit()) return tensor(Element::unit(), Element::unit());
  const auto& fs = w.factors();
  TensorElement acc = coproduct_factor(fs.front());
  for (std::size_t i = 1; i < fs.size(); ++i)
    acc = tensor_multiply(acc, coproduct_factor(fs[i]));
  return acc;
}

TensorElement coproduct(const Element& a) {
  TensorElement out;
  for (const auto& [w, c] : a.terms()) {
    TensorElement dw = coproduct(w);
    dw *= c;
    out += dw;
  }
  return out;
}

Rational counit(const Element& a) { return a.coefficient(BracketedWord()); }

Element unit_counit(const Element& a) {
  return Element::from_word(BracketedWord(), counit(a));
}

Element convolve(const LinearMap& f, const LinearMap& g, const Element& a) {
  Element out;
  const TensorElement da = coproduct(a);
  for (const auto& [k, c] : da.terms()) {
    Element piece = diamond(f(Element::from_word(k.first)), g(Element::from_word(k.second)));
    piece *= c;
    out += piece;
  }
  return out;
}

}  // namespace fna
