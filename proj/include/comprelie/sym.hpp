#pragma once

#include <string>
#include <vector>

#include "comprelie/elem.hpp"

namespace comprelie {

// Commutative monomial as a dense exponent vector over the basis of V.
// The all-zero vector is the unit of S(V).
using Monomial = std::vector<int>;

struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        long da = 0, db = 0;
        for (int e : a) da += e;
        for (int e : b) db += e;
        if (da != db) return da < db;
        return a < b;
    }
};

// Element of S(V).
class SElem : public LinComb<SElem, Monomial, MonomialLess> {
public:
    explicit SElem(int dim = 1) : LinComb(dim) {}

    static SElem zero(int dim) { return SElem(dim); }
    static SElem unit(int dim) { return monomial(dim, Monomial(dim, 0)); }
    static SElem generator(int dim, Letter x) {
        Monomial m(dim, 0);
        m.at(static_cast<std::size_t>(x)) = 1;
        return monomial(dim, m);
    }
    static SElem monomial(int dim, Monomial m) {
        SElem e(dim);
        e.add_term(m, Rat(1));
        return e;
    }
    static SElem basis_value(int dim, const Monomial& m) { return monomial(dim, m); }

    static void check_key(int dim, const Monomial& m) {
        if (m.size() != static_cast<std::size_t>(dim))
            throw DimensionMismatch("monomial does not match the ambient dimension");
        for (int e : m)
            if (e < 0) throw InvalidParam("negative exponent in monomial");
    }
    static long key_degree(const Monomial& m) {
        long d = 0;
        for (int e : m) d += e;
        return d;
    }
    static std::string render_key(const Monomial& m) {
        std::string s;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!s.empty()) s += " ";
            s += "x" + std::to_string(i);
            if (m[i] > 1) s += "^" + std::to_string(m[i]);
        }
        return s.empty() ? "1" : s;
    }

    // Sorted letter expansion x0 x0 x1 ... of a monomial.
    static std::vector<Letter> letters_of(const Monomial& m) {
        std::vector<Letter> ls;
        for (std::size_t i = 0; i < m.size(); ++i)
            for (int k = 0; k < m[i]; ++k) ls.push_back(static_cast<Letter>(i));
        return ls;
    }
};

// Product of S(V): exponentwise sum, extended bilinearly.
SElem selem_mul(const SElem& a, const SElem& b);

// Coproduct making the generators primitive:
// Delta(x^e) = sum_i C(e,i) x^i (x) x^{e-i} per letter, multiplicatively.
TensorOf<SElem> selem_coproduct(const SElem& a);

Rat selem_counit(const SElem& a);

// The preLie product of S(V, f, lambda):
//   1 . b = 0,
//   x . x_1...x_k = sum over proper sub-multisets I of the letters of b of
//       |I|! lambda^{|I|} f(x) prod_{i in I} f(x_i) prod_{i not in I} x_i,
//   extended to general first arguments by the derivation rule and
//   bilinearly in both slots.
SElem sfl_product(const LinForm& f, const Rat& lambda, const SElem& a, const SElem& b);

} // namespace comprelie
