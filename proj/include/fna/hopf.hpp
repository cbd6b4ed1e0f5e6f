#pragma once

#include <map>

#include "fna/coalgebra.hpp"
#include "fna/element.hpp"
#include "fna/report.hpp"

namespace fna {

/// Homogeneous components keyed by degree; summing them reproduces the input.
using GradedDecomposition = std::map<unsigned, Element>;

GradedDecomposition homogeneous_components(const Element& a);

/// The right antipode, solved degree by degree from id * S = u∘counit:
/// S(1) = 1, and for a word w of degree n > 0 with
/// D(w) = 1 (x) w + sum c_i (u_i (x) v_i), deg u_i > 0,
///   S(w) = - sum c_i u_i <> S(v_i).
/// Mixed-degree inputs are decomposed first and handled linearly.
/// Throws NonGradedCoproductError if a coproduct term violates the grading
/// shape the recursion relies on (a kernel bug, surfaced loudly).
Element antipode(const Element& a);

/// Verifies connectedness of the grading over a finite alphabet: the degree-0
/// slice is spanned by the identity word alone and every enumerated word of
/// positive degree has counit zero.
LawReport check_connected(const std::vector<Letter>& alphabet, unsigned max_degree);

}  // namespace fna
