#pragma once

#include <map>

#include "comprelie/shuffle.hpp"

namespace comprelie {

// The three preLie products on T(V).

// T(V, f) for an endomorphism f:
//   1 . w = 0,   xv . w = x(v . w) + f(x)(v sh w).
Elem tvf_product(const LinMap& f, const Elem& u, const Elem& v);

// Maps behind T(V, f, lambda):
//   partial(x_1...x_n) = f(x_1) x_2...x_n
//   phi(x_1...x_n)     = sum_{i=0}^{n-1} lambda^i f(x_1)...f(x_i) x_{i+1}...x_n
Elem tvfl_partial(const LinForm& f, const Elem& u);
Elem tvfl_phi(const LinForm& f, const Rat& lambda, const Elem& u);

// u . v = partial(u) sh phi(v).
Elem tvfl_product(const LinForm& f, const Rat& lambda, const Elem& u, const Elem& v);

// x^m . x^n on a one-letter alphabet with f(x) = nu:
// coefficient of x^j is nu * mu^{m+n-j-1} * C(j, m-1) for m <= j <= m+n-1.
std::map<long, Rat> lemma8_closed_form(const Rat& nu, const Rat& mu, long m, long n);

// T(V, star) for a preLie product star on V:
//   x_1...x_k . y_1...y_l
//     = sum_i x_1...x_{i-1} (x_i star y_1) (x_{i+1}...x_k sh y_2...y_l),
// zero when either factor is the unit.
Elem tvstar_product(const PreLieConsts& star, const Elem& u, const Elem& v);

// C(j-l,k-1) C(j-1,j-l-1) + C(j-k,l-1) C(j-1,k-1) = C(j,k+l-1) C(k+l-1,k-1)
// for all 1 <= k,l with k+l <= j <= jmax.
bool binomial_identity_check(long jmax);

} // namespace comprelie
