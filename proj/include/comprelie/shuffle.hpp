#pragma once

#include <vector>

#include "comprelie/elem.hpp"

namespace comprelie {

// The bialgebra (T(V), sh, Delta): shuffle product, half-shuffle, and the
// deconcatenation coproduct. All operations are pure; memo tables are local
// to each top-level call, so concurrent use is safe.

// Bilinear extension of  1 sh v = v,  u sh 1 = u,
// xu sh yv = x(u sh yv) + y(xu sh v).
Elem shuffle(const Elem& a, const Elem& b);

// Half-shuffle: 1 < yv = 0, xu < v = x(u sh v), extended to the unit by
// a < 1 = a and 1 < a = 0. Throws Undefined11 when both arguments carry a
// nonzero unit component.
Elem half_shuffle(const Elem& a, const Elem& b);

// Deconcatenation: Delta(x_1...x_n) = sum_i x_1...x_i (x) x_{i+1}...x_n.
Tensor2 deconcat(const Elem& a);

// Coefficient of the empty word.
Rat counit(const Elem& a);

// Delta(a) - a (x) 1 - 1 (x) a. Requires counit(a) == 0.
Tensor2 reduced_coproduct(const Elem& a);

// T(F): x_1...x_n -> F(x_1)...F(x_n), a bialgebra morphism.
Elem tensor_map(const LinMap& f, const Elem& a);

// Shuffle of the listed letters; the image of a symmetric-algebra monomial
// in coS(V). An empty list gives the unit.
Elem symmetrize(int dim, const std::vector<Letter>& letters);

// True iff Delta(a) = a (x) 1 + 1 (x) a.
bool is_primitive(const Elem& a);

// Componentwise shuffle on tensors: (a (x) b) sh (c (x) d) = (a sh c) (x) (b sh d).
Tensor2 tensor_shuffle(const Tensor2& a, const Tensor2& b);

} // namespace comprelie
