#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

#include "comprelie/errors.hpp"

namespace comprelie {

// Exact rational scalar. Thin wrapper over GMP's mpq_class that keeps the
// value canonical (reduced, positive denominator) at all times and pins the
// "p/q" text format used everywhere in this project. There is no floating
// point anywhere in the library.
class Rat {
public:
    Rat() : q_(0) {}
    Rat(long n) : q_(n) {}
    Rat(long num, long den) {
        if (den == 0) throw InvalidParam("rational with zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }
    explicit Rat(const mpz_class& z) : q_(z) {}
    explicit Rat(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    // Accepts "p" or "p/q" with an optional leading sign on p.
    static Rat parse(std::string_view text) {
        std::string s(text);
        if (s.empty()) throw InvalidParam("empty rational literal");
        std::size_t slash = s.find('/');
        std::string num = slash == std::string::npos ? s : s.substr(0, slash);
        std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
        if (!valid_int(num, true) || !valid_int(den, false))
            throw InvalidParam("bad rational literal: '" + s + "'");
        mpq_class q(mpz_class(num), mpz_class(den));
        if (q.get_den() == 0) throw InvalidParam("rational with zero denominator: '" + s + "'");
        q.canonicalize();
        return Rat(std::move(q));
    }

    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }

    bool is_zero() const { return q_ == 0; }
    bool is_one() const { return q_ == 1; }
    int sign() const { return sgn(q_); }

    // Reduced "p" or "p/q".
    std::string str() const { return q_.get_str(); }

    Rat operator-() const { return Rat(mpq_class(-q_)); }
    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw InvalidParam("division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.q_ >= b.q_; }

    Rat pow(unsigned long e) const {
        mpq_class r;
        mpz_pow_ui(r.get_num_mpz_t(), q_.get_num_mpz_t(), e);
        mpz_pow_ui(r.get_den_mpz_t(), q_.get_den_mpz_t(), e);
        return Rat(std::move(r));
    }

    // True when the value is an integer <= 0.
    bool is_nonpositive_integer() const { return q_.get_den() == 1 && q_ <= 0; }
    bool is_negative_integer() const { return q_.get_den() == 1 && q_ < 0; }
    bool is_integer() const { return q_.get_den() == 1; }

private:
    explicit Rat(mpq_class&& q) : q_(std::move(q)) {}

    static bool valid_int(const std::string& s, bool allow_sign) {
        std::size_t i = 0;
        if (allow_sign && i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    }

    mpq_class q_;
};

inline Rat binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return Rat(0);
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rat(r);
}

inline Rat factorial(long n) {
    if (n < 0) return Rat(0);
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return Rat(r);
}

} // namespace comprelie
