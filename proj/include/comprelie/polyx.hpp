#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "comprelie/elem.hpp"
#include "comprelie/lincomb.hpp"

namespace comprelie {

// Element of K[X].
class Poly : public LinComb<Poly, long, std::less<long>> {
public:
    Poly() : LinComb(1) {}

    static Poly zero() { return Poly(); }
    static Poly unit() { return power(0); }
    static Poly power(long n) {
        Poly p;
        p.add_term(n, Rat(1));
        return p;
    }
    static Poly basis_value(int, long n) { return power(n); }

    static void check_key(int, long n) {
        if (n < 0) throw InvalidParam("negative exponent in polynomial");
    }
    static long key_degree(long n) { return n; }
    static std::string render_key(long n) {
        if (n == 0) return "1";
        if (n == 1) return "X";
        return "X^" + std::to_string(n);
    }
};

// Parameter record naming one of the products on K[X].
//
// lambda is always the j = 0 scalar (X^i . 1 = i lambda X^i) for the graded
// families; for gprime it is the global scale of the product.
struct FamilySpec {
    enum class Tag { G1, G2, G3, G4, GPrime };

    Tag tag;
    long N = 1;
    Rat lambda;
    Rat a;  // G1
    Rat b;  // G1
    Rat mu; // G2, G3, GPrime

    static FamilySpec g1(long N, Rat lambda, Rat a, Rat b);
    static FamilySpec g2(long N, Rat lambda, Rat mu);
    static FamilySpec g3(long N, Rat lambda, Rat mu);
    static FamilySpec g4(Rat lambda);
    static FamilySpec gprime(Rat lambda, Rat mu);

    bool graded() const { return tag != Tag::GPrime; }
    std::string name() const;

    friend bool operator==(const FamilySpec& x, const FamilySpec& y);
};

// lambda_j of a graded family; throws NotGraded for gprime.
Rat lambda_of(const FamilySpec& spec, long j);

// A lambda-sequence: either an explicit finite prefix (lambda_0..lambda_M)
// or generated from a graded FamilySpec.
class LambdaSeq {
public:
    static LambdaSeq explicit_prefix(std::vector<Rat> values);
    static LambdaSeq family(const FamilySpec& spec);

    Rat at(long j) const; // IndexBeyondPrefix past an explicit prefix
    bool is_explicit() const { return !spec_.has_value(); }
    long max_index() const; // M for explicit prefixes

private:
    LambdaSeq() = default;
    std::optional<FamilySpec> spec_;
    std::vector<Rat> prefix_;
};

// X^i . X^j = i lambda_j X^{i+j}, extended bilinearly.
Poly graded_product(const LambdaSeq& seq, const Poly& p, const Poly& q);

// X^k . X^l = lambda k l! sum_{i=k}^{k+l-1} mu^{k+l-i-1} / (i-k+1)! X^i.
Poly gprime_product(const Rat& lambda, const Rat& mu, long k, long l);
Poly gprime_product(const Rat& lambda, const Rat& mu, const Poly& p, const Poly& q);

// Violations (j, k), j <= k <= maxidx, of
// (j lambda_k - k lambda_j) lambda_{j+k} = (j - k) lambda_j lambda_k.
std::vector<std::pair<long, long>> prelie_condition_check(const LambdaSeq& seq, long maxidx);

struct ClassifyResult {
    enum class Outcome { Family, Inconsistent, InsufficientData };
    Outcome outcome;
    std::optional<FamilySpec> family; // Family
    long witness_j = 0, witness_k = 0; // Inconsistent
    long need = 0;                     // InsufficientData: index required
};

// Identify the graded family matching an explicit prefix, or report a
// concrete violating pair / the prefix length needed to decide.
ClassifyResult classify(const std::vector<Rat>& prefix);

// Binomial coproduct: Delta(X^n) = sum_i C(n,i) X^i (x) X^{n-i}.
TensorOf<Poly> binom_coproduct(const Poly& p);

Rat poly_counit(const Poly& p);

Poly poly_mul(const Poly& p, const Poly& q);

// X^i < X^j = i/(i+j) X^{i+j}; throws Undefined11 at (0,0).
Poly half_shuffle_kx(long i, long j);
Poly half_shuffle_kx(const Poly& p, const Poly& q);

// Theta(X^n) = n! x^n in the one-letter tensor algebra.
Elem theta_iso(long n);

} // namespace comprelie
