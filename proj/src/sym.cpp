#include "comprelie/sym.hpp"

namespace comprelie {

namespace {

Monomial mon_add(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

// x . (monomial e) for a single generator x, per the proper-sub-multiset sum.
// Sub-multisets are walked with an odometer over the exponents; each sigma
// accounts for prod_j C(e_j, sigma_j) position choices.
SElem generator_dot(const LinForm& f, const Rat& lambda, Letter x, const Monomial& e) {
    int dim = f.dim();
    SElem r(dim);
    Rat fx = f.apply(x);
    if (fx.is_zero()) {
        // only the sigma = 0 term could survive, and it is scaled by f(x)
        return r;
    }
    Monomial sigma(e.size(), 0);
    while (true) {
        bool proper = sigma != e;
        if (proper) {
            long size = 0;
            Rat c = fx;
            for (std::size_t j = 0; j < e.size(); ++j) {
                size += sigma[j];
                if (sigma[j] > 0)
                    c *= binomial(e[j], sigma[j]) * f.apply(static_cast<Letter>(j)).pow(
                                                        static_cast<unsigned long>(sigma[j]));
            }
            c *= factorial(size) * lambda.pow(static_cast<unsigned long>(size));
            Monomial rest = e;
            for (std::size_t j = 0; j < e.size(); ++j) rest[j] -= sigma[j];
            r.add_term(rest, c);
        }
        // odometer step
        std::size_t j = 0;
        while (j < sigma.size() && sigma[j] == e[j]) {
            sigma[j] = 0;
            ++j;
        }
        if (j == sigma.size()) break;
        ++sigma[j];
    }
    return r;
}

} // namespace

SElem selem_mul(const SElem& a, const SElem& b) {
    if (a.dim() != b.dim())
        throw DimensionMismatch("product arguments live in different ambient spaces");
    SElem r(a.dim());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) r.add_term(mon_add(ma, mb), ca * cb);
    return r;
}

TensorOf<SElem> selem_coproduct(const SElem& a) {
    TensorOf<SElem> r(a.dim());
    for (const auto& [m, c] : a.terms()) {
        Monomial sigma(m.size(), 0);
        while (true) {
            Rat w = c;
            for (std::size_t j = 0; j < m.size(); ++j)
                if (sigma[j] > 0) w *= binomial(m[j], sigma[j]);
            Monomial rest = m;
            for (std::size_t j = 0; j < m.size(); ++j) rest[j] -= sigma[j];
            r.add_term(sigma, rest, w);
            std::size_t j = 0;
            while (j < sigma.size() && sigma[j] == m[j]) {
                sigma[j] = 0;
                ++j;
            }
            if (j == sigma.size()) break;
            ++sigma[j];
        }
    }
    return r;
}

Rat selem_counit(const SElem& a) { return a.coeff(Monomial(a.dim(), 0)); }

SElem sfl_product(const LinForm& f, const Rat& lambda, const SElem& a, const SElem& b) {
    if (f.dim() != a.dim() || a.dim() != b.dim())
        throw DimensionMismatch("sfl product arguments live in different ambient spaces");
    int dim = a.dim();
    SElem r(dim);
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            Rat c = ca * cb;
            // derivation rule over the letters of the first factor
            for (std::size_t j = 0; j < ma.size(); ++j) {
                if (ma[j] == 0) continue;
                Monomial rest = ma;
                rest[j] -= 1;
                SElem img = generator_dot(f, lambda, static_cast<Letter>(j), mb);
                for (const auto& [mi, ci] : img.terms())
                    r.add_term(mon_add(rest, mi), Rat(ma[j]) * c * ci);
            }
        }
    }
    return r;
}

} // namespace comprelie
