#pragma once

#include <string>
#include <vector>

#include "comprelie/lincomb.hpp"

namespace comprelie {

using Letter = int;

// A pure tensor x_{i1}...x_{in}; the empty word is the unit of (T(V), sh).
using Word = std::vector<Letter>;

// Canonical ordering: by length, then lexicographically.
struct WordLess {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

// General element of T(V): finite linear combination of words.
class Elem : public LinComb<Elem, Word, WordLess> {
public:
    explicit Elem(int dim = 1) : LinComb(dim) {}

    static Elem zero(int dim) { return Elem(dim); }
    static Elem unit(int dim) { return word(dim, {}); }
    static Elem letter(int dim, Letter x) { return word(dim, {x}); }
    static Elem word(int dim, Word w) {
        Elem e(dim);
        e.add_term(w, Rat(1));
        return e;
    }
    static Elem basis_value(int dim, const Word& w) { return word(dim, w); }

    static void check_key(int dim, const Word& w) {
        for (Letter x : w)
            if (x < 0 || x >= dim)
                throw LetterOutOfRange("letter x" + std::to_string(x) +
                                       " out of range for dim " + std::to_string(dim));
    }
    static long key_degree(const Word& w) { return static_cast<long>(w.size()); }
    static std::string render_key(const Word& w) {
        if (w.empty()) return "1";
        std::string s;
        for (Letter x : w) s += "x" + std::to_string(x);
        return s;
    }
};

using Tensor2 = TensorOf<Elem>;

// Termwise sum; kept as a named operation alongside operator+.
inline Elem elem_add(const Elem& a, const Elem& b) { return a + b; }

inline Elem elem_scale(const Rat& c, const Elem& a) { return c * a; }

// Prefix every word of a with the letter x.
inline Elem left_concat(Letter x, const Elem& a) {
    Elem::check_key(a.dim(), {x});
    Elem r(a.dim());
    for (const auto& [w, c] : a.terms()) {
        Word p;
        p.reserve(w.size() + 1);
        p.push_back(x);
        p.insert(p.end(), w.begin(), w.end());
        r.add_term(p, c);
    }
    return r;
}

// Prefix every word of a with the degree-1 element x (expanded bilinearly).
inline Elem left_concat(const Elem& x, const Elem& a) {
    Elem r(a.dim());
    for (const auto& [w, c] : x.terms()) {
        if (w.size() != 1)
            throw InvalidParam("left_concat prefix must be homogeneous of degree 1");
        r += c * left_concat(w[0], a);
    }
    return r;
}

// d x d matrix over K; column j holds the coordinates of the image of x_j.
class LinMap {
public:
    explicit LinMap(int dim) : dim_(dim), m_(dim, std::vector<Rat>(dim, Rat(0))) {
        if (dim < 1) throw InvalidParam("dimension must be >= 1");
    }
    LinMap(int dim, std::vector<std::vector<Rat>> rows) : dim_(dim), m_(std::move(rows)) {
        if (dim < 1) throw InvalidParam("dimension must be >= 1");
        if (m_.size() != static_cast<std::size_t>(dim))
            throw DimensionMismatch("matrix must be square of the ambient dimension");
        for (const auto& row : m_)
            if (row.size() != static_cast<std::size_t>(dim))
                throw DimensionMismatch("matrix must be square of the ambient dimension");
    }

    static LinMap identity(int dim) {
        LinMap f(dim);
        for (int i = 0; i < dim; ++i) f.m_[i][i] = Rat(1);
        return f;
    }
    static LinMap scalar(int dim, const Rat& c) {
        LinMap f(dim);
        for (int i = 0; i < dim; ++i) f.m_[i][i] = c;
        return f;
    }

    int dim() const { return dim_; }
    const Rat& entry(int i, int j) const { return m_.at(i).at(j); }
    Rat& entry(int i, int j) { return m_.at(i).at(j); }

    // Image of a basis letter as a degree-1 element.
    Elem apply(Letter x) const {
        if (x < 0 || x >= dim_)
            throw LetterOutOfRange("letter x" + std::to_string(x) +
                                   " out of range for dim " + std::to_string(dim_));
        Elem r(dim_);
        for (int i = 0; i < dim_; ++i) r.add_term({i}, m_[i][x]);
        return r;
    }

    friend bool operator==(const LinMap& a, const LinMap& b) {
        return a.dim_ == b.dim_ && a.m_ == b.m_;
    }

private:
    int dim_;
    std::vector<std::vector<Rat>> m_;
};

inline Elem apply_linmap(const LinMap& f, Letter x) { return f.apply(x); }

// Linear form on V as a coordinate vector.
class LinForm {
public:
    explicit LinForm(int dim) : v_(dim, Rat(0)) {
        if (dim < 1) throw InvalidParam("dimension must be >= 1");
    }
    LinForm(std::vector<Rat> v) : v_(std::move(v)) {
        if (v_.empty()) throw InvalidParam("dimension must be >= 1");
    }

    int dim() const { return static_cast<int>(v_.size()); }
    const Rat& operator[](int i) const { return v_.at(i); }
    Rat& operator[](int i) { return v_.at(i); }

    Rat apply(Letter x) const {
        if (x < 0 || x >= dim())
            throw LetterOutOfRange("letter x" + std::to_string(x) +
                                   " out of range for dim " + std::to_string(dim()));
        return v_[x];
    }

private:
    std::vector<Rat> v_;
};

inline Rat apply_linform(const LinForm& f, Letter x) { return f.apply(x); }

// Structure constants of a preLie product on V: e_i * e_j = sum_k c[i][j][k] e_k.
// The preLie identity is verified on all basis triples at construction; a bad
// table is rejected with the first violating triple.
class PreLieConsts {
public:
    PreLieConsts(int dim, std::vector<std::vector<std::vector<Rat>>> c)
        : dim_(dim), c_(std::move(c)) {
        if (dim < 1) throw InvalidParam("dimension must be >= 1");
        if (!shape_ok())
            throw DimensionMismatch("structure constants must form a dim^3 table");
        validate();
    }

    int dim() const { return dim_; }

    Elem product(Letter i, Letter j) const {
        check(i);
        check(j);
        Elem r(dim_);
        for (int k = 0; k < dim_; ++k) r.add_term({k}, c_[i][j][k]);
        return r;
    }

    // Bilinear extension to degree-1 elements.
    Elem product(const Elem& a, const Elem& b) const {
        Elem r(dim_);
        for (const auto& [u, cu] : a.terms()) {
            if (u.size() != 1) throw InvalidParam("star product acts on degree-1 elements");
            for (const auto& [v, cv] : b.terms()) {
                if (v.size() != 1) throw InvalidParam("star product acts on degree-1 elements");
                r += cu * cv * product(u[0], v[0]);
            }
        }
        return r;
    }

private:
    bool shape_ok() const {
        if (c_.size() != static_cast<std::size_t>(dim_)) return false;
        for (const auto& p : c_) {
            if (p.size() != static_cast<std::size_t>(dim_)) return false;
            for (const auto& row : p)
                if (row.size() != static_cast<std::size_t>(dim_)) return false;
        }
        return true;
    }

    void check(Letter x) const {
        if (x < 0 || x >= dim_)
            throw LetterOutOfRange("letter out of range for structure constants");
    }

    void validate() const {
        // associator (e_i * e_j) * e_k - e_i * (e_j * e_k), expanded in the basis
        auto assoc = [this](int i, int j, int k) {
            std::vector<Rat> v(dim_, Rat(0));
            for (int m = 0; m < dim_; ++m) {
                for (int l = 0; l < dim_; ++l) {
                    v[l] += c_[i][j][m] * c_[m][k][l];
                    v[l] -= c_[j][k][m] * c_[i][m][l];
                }
            }
            return v;
        };
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j)
                for (int k = 0; k < dim_; ++k)
                    if (assoc(i, j, k) != assoc(i, k, j))
                        throw NotPreLie("structure constants violate the preLie identity at (" +
                                            std::to_string(i) + "," + std::to_string(j) + "," +
                                            std::to_string(k) + ")",
                                        i, j, k);
    }

    int dim_;
    std::vector<std::vector<std::vector<Rat>>> c_;
};

} // namespace comprelie
