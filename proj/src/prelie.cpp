#include "comprelie/prelie.hpp"

namespace comprelie {

namespace {

Elem tvf_words(const LinMap& f, const Word& u, const Word& w) {
    int dim = f.dim();
    Elem r(dim);
    if (u.empty()) return r; // 1 . w = 0
    Word rest(u.begin() + 1, u.end());
    r += left_concat(u[0], tvf_words(f, rest, w));
    r += left_concat(f.apply(u[0]), shuffle(Elem::word(dim, rest), Elem::word(dim, w)));
    return r;
}

} // namespace

Elem tvf_product(const LinMap& f, const Elem& u, const Elem& v) {
    if (f.dim() != u.dim() || u.dim() != v.dim())
        throw DimensionMismatch("tvf product arguments live in different ambient spaces");
    Elem r(u.dim());
    for (const auto& [wu, cu] : u.terms())
        for (const auto& [wv, cv] : v.terms())
            r += cu * cv * tvf_words(f, wu, wv);
    return r;
}

Elem tvfl_partial(const LinForm& f, const Elem& u) {
    if (f.dim() != u.dim())
        throw DimensionMismatch("linear form does not match the ambient space");
    Elem r(u.dim());
    for (const auto& [w, c] : u.terms()) {
        if (w.empty()) continue;
        Word rest(w.begin() + 1, w.end());
        r.add_term(rest, c * f.apply(w[0]));
    }
    return r;
}

Elem tvfl_phi(const LinForm& f, const Rat& lambda, const Elem& u) {
    if (f.dim() != u.dim())
        throw DimensionMismatch("linear form does not match the ambient space");
    Elem r(u.dim());
    for (const auto& [w, c] : u.terms()) {
        Rat scale = c; // lambda^i f(x_1)...f(x_i), built incrementally
        for (std::size_t i = 0; i + 1 <= w.size(); ++i) {
            if (scale.is_zero()) break;
            r.add_term(Word(w.begin() + i, w.end()), scale);
            scale *= lambda * f.apply(w[i]);
        }
    }
    return r;
}

Elem tvfl_product(const LinForm& f, const Rat& lambda, const Elem& u, const Elem& v) {
    return shuffle(tvfl_partial(f, u), tvfl_phi(f, lambda, v));
}

std::map<long, Rat> lemma8_closed_form(const Rat& nu, const Rat& mu, long m, long n) {
    std::map<long, Rat> r;
    if (m < 0 || n < 0) throw InvalidParam("lemma8_closed_form needs m, n >= 0");
    for (long j = m; j <= m + n - 1; ++j) {
        Rat c = nu * mu.pow(static_cast<unsigned long>(m + n - j - 1)) * binomial(j, m - 1);
        if (!c.is_zero()) r[j] = c;
    }
    return r;
}

Elem tvstar_product(const PreLieConsts& star, const Elem& u, const Elem& v) {
    if (star.dim() != u.dim() || u.dim() != v.dim())
        throw DimensionMismatch("tvstar product arguments live in different ambient spaces");
    int dim = u.dim();
    Elem r(dim);
    for (const auto& [x, cx] : u.terms()) {
        if (x.empty()) continue;
        for (const auto& [y, cy] : v.terms()) {
            if (y.empty()) continue;
            Word ytail(y.begin() + 1, y.end());
            Rat c = cx * cy;
            for (std::size_t i = 0; i < x.size(); ++i) {
                Word tail(x.begin() + i + 1, x.end());
                Elem mid = star.product(x[i], y[0]);
                Elem right = shuffle(Elem::word(dim, tail), Elem::word(dim, ytail));
                for (const auto& [mw, mc] : mid.terms()) {
                    for (const auto& [rw, rc] : right.terms()) {
                        Word out(x.begin(), x.begin() + i);
                        out.push_back(mw[0]);
                        out.insert(out.end(), rw.begin(), rw.end());
                        r.add_term(out, c * mc * rc);
                    }
                }
            }
        }
    }
    return r;
}

bool binomial_identity_check(long jmax) {
    if (jmax < 2) throw InvalidParam("binomial_identity_check needs jmax >= 2");
    for (long j = 2; j <= jmax; ++j)
        for (long k = 1; k < j; ++k)
            for (long l = 1; k + l <= j; ++l) {
                Rat lhs = binomial(j - l, k - 1) * binomial(j - 1, j - l - 1) +
                          binomial(j - k, l - 1) * binomial(j - 1, k - 1);
                Rat rhs = binomial(j, k + l - 1) * binomial(k + l - 1, k - 1);
                if (lhs != rhs) return false;
            }
    return true;
}

} // namespace comprelie
