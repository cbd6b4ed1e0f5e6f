#pragma once

#include <functional>

#include "fna/element.hpp"
#include "fna/rawexpr.hpp"

namespace fna {

/// Product of two basis words. The identity word is a two-sided unit; at the
/// junction of the last factor of a and the first factor of b, two letters or
/// a letter against a bracket concatenate, while a bracket against a bracket
/// expands through the operator identity
///   [u][v] = [u[v]] + [[u]v] - [[uv]].
Element diamond(const BracketedWord& a, const BracketedWord& b);

/// Bilinear extension to linear combinations.
Element diamond(const Element& a, const Element& b);

/// The operator N: linear extension of w -> [w].
Element bracket(const Element& a);

/// Normalizes an expression tree into the basis: the unit maps to the empty
/// word, letters to one-factor words, operator nodes through bracket,
/// juxtapositions through diamond, sums and scalar multiples linearly.
Element eval_expr(const RawExpr& e);
Element eval_expr(const RawExprPtr& e);

/// A caller-supplied algebra with an operator satisfying the same identity as
/// the bracket. mul must be associative and unital and nij must satisfy the
/// operator identity; violations are the caller's to detect.
template <typename V>
struct NijenhuisTarget {
  V zero;
  V unit;
  std::function<V(const V&, const V&)> add;
  std::function<V(const Rational&, const V&)> scale;
  std::function<V(const V&, const V&)> mul;
  std::function<V(const V&)> nij;
  std::function<V(const Letter&)> letter_image;
};

template <typename V>
V extend_hom_word(const BracketedWord& w, const NijenhuisTarget<V>& t) {
  V acc = t.unit;
  for (const Factor& f : w.factors()) {
    V image = f.is_letter() ? t.letter_image(f.letter()) : t.nij(extend_hom_word(f.content(), t));
    acc = t.mul(acc, image);
  }
  return acc;
}

/// The unique homomorphism extending letter_image: letters map through
/// letter_image, brackets through nij, factor sequences through mul
/// left-to-right, and the combination through add/scale. Target-raised
/// failures propagate unchanged.
template <typename V>
V extend_hom(const Element& e, const NijenhuisTarget<V>& t) {
  V acc = t.zero;
  for (const auto& [w, c] : e.terms()) acc = t.add(acc, t.scale(c, extend_hom_word(w, t)));
  return acc;
}

namespace testhooks {

/// Test-only: flips one sign inside the word product so the law suites can be
/// shown to fail. Global state; set it only from single-threaded test code.
enum class DiamondMutation {
  none,
  /// [u][v] = [u[v]] + [[u]v] + [[uv]]  (tail sign flipped)
  flip_nested_bracket_sign,
  /// a letter followed by a bracket concatenates with coefficient -1
  flip_letter_bracket_sign,
};

void set_diamond_mutation(DiamondMutation m);
DiamondMutation diamond_mutation();

class ScopedDiamondMutation {
 public:
  explicit ScopedDiamondMutation(DiamondMutation m) : previous_(diamond_mutation()) {
    set_diamond_mutation(m);
  }
  ~ScopedDiamondMutation() { set_diamond_mutation(previous_); }
  ScopedDiamondMutation(const ScopedDiamondMutation&) = delete;
  ScopedDiamondMutation& operator=(const ScopedDiamondMutation&) = delete;

 private:
  DiamondMutation previous_;
};

}  // namespace testhooks

}  // namespace fna
