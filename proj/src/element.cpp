#include "fna/element.hpp"

#include "fna/algebra.hpp"

namespace fna {

Element Element::from_word(BracketedWord w, Rational coeff) {
  Element e;
  e.add_term(w, coeff);
  return e;
}

Rational Element::coefficient(const BracketedWord& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Element::add_term(const BracketedWord& w, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(w, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Element& Element::operator+=(const Element& other) {
  for (const auto& [w, c] : other.terms_) add_term(w, c);
  return *this;
}

Element& Element::operator-=(const Element& other) {
  for (const auto& [w, c] : other.terms_) add_term(w, -c);
  return *this;
}

Element& Element::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) c *= scalar;
  return *this;
}

Element combine(const Element& a, const Element& b, const Rational& ca, const Rational& cb) {
  Element out;
  for (const auto& [w, c] : a.terms()) out.add_term(w, ca * c);
  for (const auto& [w, c] : b.terms()) out.add_term(w, cb * c);
  return out;
}

void TensorElement::add_term(const BracketedWord& left, const BracketedWord& right,
                             const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(Key{left, right}, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

TensorElement& TensorElement::operator+=(const TensorElement& other) {
  for (const auto& [k, c] : other.terms_) add_term(k.first, k.second, c);
  return *this;
}

TensorElement& TensorElement::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, c] : terms_) c *= scalar;
  return *this;
}

TensorElement tensor(const Element& a, const Element& b) {
  TensorElement out;
  for (const auto& [u, cu] : a.terms())
    for (const auto& [v, cv] : b.terms()) out.add_term(u, v, cu * cv);
  return out;
}

TensorElement tensor_multiply(const TensorElement& s, const TensorElement& t) {
  TensorElement out;
  for (const auto& [ks, cs] : s.terms()) {
    for (const auto& [kt, ct] : t.terms()) {
      Element left = diamond(ks.first, kt.first);
      Element right = diamond(ks.second, kt.second);
      Rational c = cs * ct;
      for (const auto& [wl, cl] : left.terms())
        for (const auto& [wr, cr] : right.terms()) out.add_term(wl, wr, c * cl * cr);
    }
  }
  return out;
}

TensorElement apply_right(const TensorElement& t,
                          const std::function<Element(const Element&)>& f) {
  TensorElement out;
  for (const auto& [k, c] : t.terms()) {
    Element image = f(Element::from_word(k.second));
    for (const auto& [w, cw] : image.terms()) out.add_term(k.first, w, c * cw);
  }
  return out;
}

}  // namespace fna
