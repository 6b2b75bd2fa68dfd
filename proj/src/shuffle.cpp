#include "comprelie/shuffle.hpp"

#include <map>
#include <utility>

namespace comprelie {

namespace {

using WordPair = std::pair<Word, Word>;

struct WordPairLess {
    bool operator()(const WordPair& a, const WordPair& b) const {
        WordLess less;
        if (less(a.first, b.first)) return true;
        if (less(b.first, a.first)) return false;
        return less(a.second, b.second);
    }
};

using ShuffleMemo = std::map<WordPair, Elem, WordPairLess>;

const Elem& shuffle_words(int dim, const Word& u, const Word& v, ShuffleMemo& memo) {
    // the product is commutative; normalize the key
    WordLess less;
    const Word& s = less(v, u) ? v : u;
    const Word& t = less(v, u) ? u : v;
    auto it = memo.find({s, t});
    if (it != memo.end()) return it->second;

    Elem r(dim);
    if (s.empty()) {
        r.add_term(t, Rat(1));
    } else {
        Word srest(s.begin() + 1, s.end());
        Word trest(t.begin() + 1, t.end());
        r += left_concat(s[0], shuffle_words(dim, srest, t, memo));
        r += left_concat(t[0], shuffle_words(dim, s, trest, memo));
    }
    return memo.emplace(WordPair{s, t}, std::move(r)).first->second;
}

} // namespace

Elem shuffle(const Elem& a, const Elem& b) {
    if (a.dim() != b.dim())
        throw DimensionMismatch("shuffle arguments live in different ambient spaces");
    Elem r(a.dim());
    ShuffleMemo memo;
    for (const auto& [u, cu] : a.terms())
        for (const auto& [v, cv] : b.terms())
            r += cu * cv * shuffle_words(a.dim(), u, v, memo);
    return r;
}

Elem half_shuffle(const Elem& a, const Elem& b) {
    if (a.dim() != b.dim())
        throw DimensionMismatch("half-shuffle arguments live in different ambient spaces");
    if (!counit(a).is_zero() && !counit(b).is_zero())
        throw Undefined11("1 < 1 is not defined");
    Elem r(a.dim());
    ShuffleMemo memo;
    for (const auto& [u, cu] : a.terms()) {
        if (u.empty()) continue; // 1 < v = 0
        for (const auto& [v, cv] : b.terms()) {
            // xu' < v = x(u' sh v); covers v = 1 since u' sh 1 = u'
            Word urest(u.begin() + 1, u.end());
            r += cu * cv * left_concat(u[0], shuffle_words(a.dim(), urest, v, memo));
        }
    }
    return r;
}

Tensor2 deconcat(const Elem& a) {
    Tensor2 r(a.dim());
    for (const auto& [w, c] : a.terms()) {
        for (std::size_t i = 0; i <= w.size(); ++i) {
            Word pre(w.begin(), w.begin() + i);
            Word suf(w.begin() + i, w.end());
            r.add_term(pre, suf, c);
        }
    }
    return r;
}

Rat counit(const Elem& a) { return a.coeff({}); }

Tensor2 reduced_coproduct(const Elem& a) {
    if (!counit(a).is_zero())
        throw NotAugmentation("reduced coproduct needs a vanishing unit component");
    Tensor2 r = deconcat(a);
    for (const auto& [w, c] : a.terms()) {
        r.add_term(w, {}, -c);
        r.add_term({}, w, -c);
    }
    return r;
}

Elem tensor_map(const LinMap& f, const Elem& a) {
    if (f.dim() != a.dim())
        throw DimensionMismatch("linear map does not match the ambient space");
    Elem r(a.dim());
    for (const auto& [w, c] : a.terms()) {
        // letterwise images, expanded multilinearly
        std::vector<std::pair<Word, Rat>> acc{{Word{}, c}};
        for (Letter x : w) {
            Elem img = f.apply(x);
            std::vector<std::pair<Word, Rat>> next;
            next.reserve(acc.size() * img.term_count());
            for (const auto& [pw, pc] : acc) {
                for (const auto& [iw, ic] : img.terms()) {
                    Word nw = pw;
                    nw.push_back(iw[0]);
                    next.emplace_back(std::move(nw), pc * ic);
                }
            }
            acc = std::move(next);
            if (acc.empty()) break;
        }
        for (auto& [nw, nc] : acc) r.add_term(nw, nc);
    }
    return r;
}

Elem symmetrize(int dim, const std::vector<Letter>& letters) {
    Elem r = Elem::unit(dim);
    for (Letter x : letters) r = shuffle(r, Elem::letter(dim, x));
    return r;
}

bool is_primitive(const Elem& a) {
    if (!counit(a).is_zero()) return false;
    return reduced_coproduct(a).is_zero();
}

Tensor2 tensor_shuffle(const Tensor2& a, const Tensor2& b) {
    return tensor_componentwise(a, b, [](const Elem& u, const Elem& v) { return shuffle(u, v); });
}

} // namespace comprelie
