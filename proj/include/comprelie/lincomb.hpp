#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "comprelie/errors.hpp"
#include "comprelie/rational.hpp"

namespace comprelie {

// Normalized linear combination of basis keys with exact rational
// coefficients. Zero coefficients are never stored, so operator== is
// structural equality of values. The ambient dimension travels with the
// value; mixing values from different ambient spaces throws.
//
// Derived must provide:
//   static void check_key(int dim, const Key&);
//   static long key_degree(const Key&);
//   static std::string render_key(const Key&);
template <class Derived, class K, class Less>
class LinComb {
public:
    using Key = K;
    using KeyLess = Less;
    using TermMap = std::map<K, Rat, Less>;

    explicit LinComb(int dim = 1) : dim_(dim) {
        if (dim < 1) throw InvalidParam("dimension must be >= 1");
    }

    int dim() const { return dim_; }
    const TermMap& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    std::size_t term_count() const { return t_.size(); }

    Rat coeff(const K& k) const {
        auto it = t_.find(k);
        return it == t_.end() ? Rat(0) : it->second;
    }

    void add_term(const K& k, const Rat& c) {
        if (c.is_zero()) return;
        Derived::check_key(dim_, k);
        auto [it, inserted] = t_.emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    Derived& operator+=(const Derived& o) {
        require_same_dim(o);
        for (const auto& [k, c] : o.t_) add_term(k, c);
        return self();
    }
    Derived& operator-=(const Derived& o) {
        require_same_dim(o);
        for (const auto& [k, c] : o.t_) add_term(k, -c);
        return self();
    }
    Derived& operator*=(const Rat& c) {
        if (c.is_zero()) {
            t_.clear();
        } else {
            for (auto& [k, v] : t_) v *= c;
        }
        return self();
    }

    friend Derived operator+(Derived a, const Derived& b) { return a += b; }
    friend Derived operator-(Derived a, const Derived& b) { return a -= b; }
    friend Derived operator*(const Rat& c, Derived a) { return a *= c; }
    friend Derived operator-(Derived a) { return a *= Rat(-1); }

    friend bool operator==(const Derived& a, const Derived& b) {
        return a.dim_ == b.dim_ && a.t_ == b.t_;
    }
    friend bool operator!=(const Derived& a, const Derived& b) { return !(a == b); }

    // Terms whose key degree is exactly n.
    Derived degree_project(long n) const {
        Derived r(dim_);
        for (const auto& [k, c] : t_)
            if (Derived::key_degree(k) == n) r.add_term(k, c);
        return r;
    }

    long max_degree() const {
        long m = 0;
        for (const auto& [k, c] : t_) {
            long d = Derived::key_degree(k);
            if (d > m) m = d;
        }
        return m;
    }

    // Deterministic text form: terms in canonical key order, coefficients
    // rendered only when they are not +-1, the unit key rendered as "1".
    std::string str() const {
        if (t_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [k, c] : t_) {
            Rat mag = c.sign() < 0 ? -c : c;
            if (first) {
                if (c.sign() < 0) out += "-";
                first = false;
            } else {
                out += c.sign() < 0 ? " - " : " + ";
            }
            std::string ks = Derived::render_key(k);
            if (!mag.is_one()) {
                out += mag.str();
                if (!ks.empty() && ks != "1") out += " ";
            }
            if (mag.is_one() || ks != "1") out += ks;
        }
        return out;
    }

protected:
    void require_same_dim(const LinComb& o) const {
        if (dim_ != o.dim_)
            throw DimensionMismatch("elements live in different ambient spaces");
    }

private:
    Derived& self() { return static_cast<Derived&>(*this); }

    int dim_;
    TermMap t_;
};

// Linear combination of ordered key pairs; the codomain of coproducts.
template <class V>
class TensorOf {
public:
    using Key = typename V::Key;
    using PairKey = std::pair<Key, Key>;
    struct PairLess {
        bool operator()(const PairKey& a, const PairKey& b) const {
            typename V::KeyLess less;
            if (less(a.first, b.first)) return true;
            if (less(b.first, a.first)) return false;
            return less(a.second, b.second);
        }
    };
    using TermMap = std::map<PairKey, Rat, PairLess>;

    explicit TensorOf(int dim = 1) : dim_(dim) {}

    int dim() const { return dim_; }
    const TermMap& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    Rat coeff(const Key& l, const Key& r) const {
        auto it = t_.find({l, r});
        return it == t_.end() ? Rat(0) : it->second;
    }

    void add_term(const Key& l, const Key& r, const Rat& c) {
        if (c.is_zero()) return;
        V::check_key(dim_, l);
        V::check_key(dim_, r);
        auto [it, inserted] = t_.emplace(PairKey{l, r}, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    TensorOf& operator+=(const TensorOf& o) {
        if (dim_ != o.dim_)
            throw DimensionMismatch("tensors live in different ambient spaces");
        for (const auto& [k, c] : o.t_) add_term(k.first, k.second, c);
        return *this;
    }
    TensorOf& operator-=(const TensorOf& o) {
        if (dim_ != o.dim_)
            throw DimensionMismatch("tensors live in different ambient spaces");
        for (const auto& [k, c] : o.t_) add_term(k.first, k.second, -c);
        return *this;
    }
    TensorOf& operator*=(const Rat& c) {
        if (c.is_zero()) {
            t_.clear();
        } else {
            for (auto& [k, v] : t_) v *= c;
        }
        return *this;
    }

    friend TensorOf operator+(TensorOf a, const TensorOf& b) { return a += b; }
    friend TensorOf operator-(TensorOf a, const TensorOf& b) { return a -= b; }
    friend TensorOf operator*(const Rat& c, TensorOf a) { return a *= c; }

    friend bool operator==(const TensorOf& a, const TensorOf& b) {
        return a.dim_ == b.dim_ && a.t_ == b.t_;
    }
    friend bool operator!=(const TensorOf& a, const TensorOf& b) { return !(a == b); }

    std::string str() const {
        if (t_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [k, c] : t_) {
            Rat mag = c.sign() < 0 ? -c : c;
            if (first) {
                if (c.sign() < 0) out += "-";
                first = false;
            } else {
                out += c.sign() < 0 ? " - " : " + ";
            }
            if (!mag.is_one()) out += mag.str() + " ";
            out += V::render_key(k.first) + "⊗" + V::render_key(k.second);
        }
        return out;
    }

private:
    int dim_;
    TermMap t_;
};

// (a (x) b) . (c (x) d) = prod(a, c) (x) prod(b, d), extended bilinearly.
template <class V, class F>
TensorOf<V> tensor_componentwise(const TensorOf<V>& a, const TensorOf<V>& b, F&& prod) {
    TensorOf<V> r(a.dim());
    for (const auto& [ka, ca] : a.terms()) {
        for (const auto& [kb, cb] : b.terms()) {
            V left = prod(V::basis_value(a.dim(), ka.first), V::basis_value(a.dim(), kb.first));
            V right = prod(V::basis_value(a.dim(), ka.second), V::basis_value(a.dim(), kb.second));
            Rat c = ca * cb;
            for (const auto& [kl, cl] : left.terms())
                for (const auto& [kr, cr] : right.terms())
                    r.add_term(kl, kr, c * cl * cr);
        }
    }
    return r;
}

// k1 (x) f(k2), extended linearly over the tensor.
template <class V, class F>
TensorOf<V> tensor_map_right(const TensorOf<V>& a, F&& f) {
    TensorOf<V> r(a.dim());
    for (const auto& [k, c] : a.terms()) {
        V img = f(V::basis_value(a.dim(), k.second));
        for (const auto& [ki, ci] : img.terms()) r.add_term(k.first, ki, c * ci);
    }
    return r;
}

// f(k1) (x) k2, extended linearly over the tensor.
template <class V, class F>
TensorOf<V> tensor_map_left(const TensorOf<V>& a, F&& f) {
    TensorOf<V> r(a.dim());
    for (const auto& [k, c] : a.terms()) {
        V img = f(V::basis_value(a.dim(), k.first));
        for (const auto& [ki, ci] : img.terms()) r.add_term(ki, k.second, c * ci);
    }
    return r;
}

template <class V>
TensorOf<V> tensor_of(const V& a, const V& b) {
    TensorOf<V> r(a.dim());
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) r.add_term(ka, kb, ca * cb);
    return r;
}

} // namespace comprelie
