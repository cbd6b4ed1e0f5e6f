#include "fna/algebra.hpp"

#include <utility>
#include <vector>

namespace fna {

namespace testhooks {

namespace {
DiamondMutation g_mutation = DiamondMutation::none;
}

void set_diamond_mutation(DiamondMutation m) { g_mutation = m; }
DiamondMutation diamond_mutation() { return g_mutation; }

}  // namespace testhooks

namespace {

using testhooks::DiamondMutation;

Element bracket_pair(const BracketedWord& u, const BracketedWord& v);

// Junction product of two words. Termination: every nested junction strictly
// decreases the sum of the depths of the two factors meeting at the seam.
Element diamond_words(const BracketedWord& a, const BracketedWord& b) {
  if (a.is_unit()) return Element::from_word(b);
  if (b.is_unit()) return Element::from_word(a);
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  const Factor& last = fa.back();
  const Factor& first = fb.front();

  if (last.is_bracket() && first.is_bracket()) {
    Element mid = bracket_pair(last.content(), first.content());
    Element out;
    for (const auto& [m, c] : mid.terms()) {
      // every term of bracket_pair is a single bracket factor
      std::vector<Factor> fs;
      fs.reserve(fa.size() + fb.size() - 1);
      fs.insert(fs.end(), fa.begin(), fa.end() - 1);
      fs.insert(fs.end(), m.factors().begin(), m.factors().end());
      fs.insert(fs.end(), fb.begin() + 1, fb.end());
      out.add_term(BracketedWord(std::move(fs)), c);
    }
    return out;
  }

  Rational sign = 1;
  if (testhooks::diamond_mutation() == DiamondMutation::flip_letter_bracket_sign &&
      last.is_letter() && first.is_bracket())
    sign = -1;
  std::vector<Factor> fs;
  fs.reserve(fa.size() + fb.size());
  fs.insert(fs.end(), fa.begin(), fa.end());
  fs.insert(fs.end(), fb.begin(), fb.end());
  return Element::from_word(BracketedWord(std::move(fs)), sign);
}

// [u][v] = [u<>[v]] + [[u]<>v] - [[u<>v]]
Element bracket_pair(const BracketedWord& u, const BracketedWord& v) {
  Element head = bracket(diamond_words(u, bracket_word(v)));
  head += bracket(diamond_words(bracket_word(u), v));
  Rational tail = testhooks::diamond_mutation() == DiamondMutation::flip_nested_bracket_sign
                      ? Rational(1)
                      : Rational(-1);
  return combine(head, bracket(bracket(diamond_words(u, v))), 1, tail);
}

}  // namespace

Element diamond(const BracketedWord& a, const BracketedWord& b) { return diamond_words(a, b); }

Element diamond(const Element& a, const Element& b) {
  Element out;
  for (const auto& [u, cu] : a.terms()) {
    for (const auto& [v, cv] : b.terms()) {
      Element product = diamond_words(u, v);
      Rational c = cu * cv;
      for (const auto& [w, cw] : product.terms()) out.add_term(w, c * cw);
    }
  }
  return out;
}

Element bracket(const Element& a) {
  Element out;
  for (const auto& [w, c] : a.terms()) out.add_term(bracket_word(w), c);
  return out;
}

Element eval_expr(const RawExpr& e) {
  struct Visitor {
    Element operator()(const RawExpr::Sum& sum) const {
      Element acc;
      for (const auto& [c, child] : sum.terms) acc += c * eval_expr(*child);
      return acc;
    }
    Element operator()(const RawExpr::Product& product) const {
      Element acc = Element::unit();
      for (const auto& child : product.factors) acc = diamond(acc, eval_expr(*child));
      return acc;
    }
    Element operator()(const RawExpr::Op& op) const { return bracket(eval_expr(*op.child)); }
    Element operator()(const RawExpr::LetterRef& ref) const {
      return Element::from_word(letter_word(Letter(ref.name)));
    }
    Element operator()(const RawExpr::Unit&) const { return Element::unit(); }
  };
  return std::visit(Visitor{}, e.node());
}

Element eval_expr(const RawExprPtr& e) { return eval_expr(*e); }

}  // namespace fna
