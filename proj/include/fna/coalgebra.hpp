#pragma once

#include <functional>

#include "fna/algebra.hpp"
#include "fna/element.hpp"

namespace fna {

using LinearMap = std::function<Element(const Element&)>;

/// The coproduct, computed by the defining recursion:
///   D(1) = 1 (x) 1,   D(x) = 1 (x) x for letters,
///   D([w]) = (id (x) N) D(w),
///   D(w1 ... wm) = D(w1) <> ... <> D(wm) over the diamond factorization.
TensorElement coproduct(const BracketedWord& w);
TensorElement coproduct(const Element& a);

/// The left counit: the coefficient of the identity word.
Rational counit(const Element& a);

/// u∘counit, the convolution identity e.
Element unit_counit(const Element& a);

/// (f * g)(a) = sum f(a_(1)) <> g(a_(2)) over the coproduct terms of a.
/// f and g must be linear (caller contract).
Element convolve(const LinearMap& f, const LinearMap& g, const Element& a);

}  // namespace fna
