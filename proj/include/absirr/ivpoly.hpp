#pragma once

// Exact rational polynomials, integer-valued polynomials Int(Z), fixed
// divisors and the divisibility witnesses for Int(Z) and R(p).

#include <gmpxx.h>

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "absirr/abgroup.hpp"

namespace absirr {

using Rational = mpq_class;

/// Dense polynomial over Q, coefficients by ascending degree, no trailing zeros.
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rational> coefficients);
    RatPoly(std::initializer_list<Rational> coefficients);

    static RatPoly constant(const Rational& c);
    static RatPoly x();
    /// (x - r_1) ... (x - r_k).
    static RatPoly from_roots(const std::vector<Integer>& roots);

    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    const std::vector<Rational>& coefficients() const noexcept { return c_; }
    Rational coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

    Rational operator()(const Rational& x) const;
    bool has_integer_coefficients() const;
    /// Positive lcm of the coefficient denominators (1 for the zero polynomial).
    Integer denominator() const;

    RatPoly operator-() const;
    friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator*(const Rational& s, const RatPoly& a);
    RatPoly pow(unsigned n) const;

    /// Euclidean division over Q. InvalidArgument on a zero divisor.
    static std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);

    friend bool operator==(const RatPoly&, const RatPoly&) = default;
    friend std::ostream& operator<<(std::ostream& os, const RatPoly& p);
    std::string str() const;

private:
    void trim();
    std::vector<Rational> c_;
};

/// f(k) in Z for k = 0..deg f.
bool is_integer_valued(const RatPoly& f);
/// Coefficients c_k of f = sum c_k binom(x, k), via forward differences at 0.
std::vector<Rational> binomial_coefficients(const RatPoly& f);
/// Integer-valuedness read off the binomial basis (all c_k integral).
bool is_integer_valued_binomial(const RatPoly& f);

/// gcd of f(0), ..., f(deg f): the positive generator of the ideal generated
/// by f(Z). ZeroPolynomial for f = 0, NotIntegerValued if f is not in Int(Z).
Integer fixed_divisor(const RatPoly& f);

/// g / f if it is a polynomial in Int(Z). NotIntegerValued if f or g is not
/// integer-valued, InvalidArgument for f = 0.
std::optional<RatPoly> intz_quotient(const RatPoly& f, const RatPoly& g);
bool divides_in_intz(const RatPoly& f, const RatPoly& g);

/// x(x-1)...(x-n+1)/n!.
RatPoly binomial_poly(unsigned long n);

/// sum_{i>=1} floor(n / p^i). NotPrime unless p is prime; InvalidArgument for n < 0.
Integer legendre_vp_factorial(const Integer& p, const Integer& n);

/// f in R(p): integer-valued and the coefficient denominators are a power of p.
bool rp_membership(const RatPoly& f, const Integer& p);

/// The divisibility contradiction showing that a non-constant G in Int(Z)
/// is not prime: with h the product of (x - r) over the residues r where the
/// numerator g of G is nonzero mod p, G | (G+p) h G / p but G divides neither
/// factor.
struct NoPrimeWitness {
    RatPoly g;           // numerator, G = g / d
    Integer d;
    Integer p;
    std::vector<Integer> residues;  // r_1, ..., r_k
    RatPoly h;
    bool hg_over_p_integer_valued = false;      // (i)
    bool gp_h_over_p_integer_valued = false;    // (ii)
    bool g_does_not_divide_g_plus_p = false;    // (iii), over Q
    bool h_over_p_not_integer_valued = false;   // (iv)

    bool verified() const noexcept {
        return hg_over_p_integer_valued && gp_h_over_p_integer_valued && g_does_not_divide_g_plus_p &&
               h_over_p_not_integer_valued;
    }
};

/// PreconditionFailed naming the failing clause: "G non-constant",
/// "G integer-valued", "p prime", "g has a root mod p", "g not identically 0 mod p".
NoPrimeWitness verify_no_prime_witness(const RatPoly& G, const Integer& p);

/// A nonzero nonunit constant c divides prod (x - r) over a complete residue
/// system mod |c| but no single factor.
struct ConstantNoPrimeWitness {
    Integer c;
    RatPoly product;
    bool divides_product = false;
    bool divides_no_factor = false;
    bool verified() const noexcept { return divides_product && divides_no_factor; }
};

/// ZeroOrUnit for c in {0, 1, -1}.
ConstantNoPrimeWitness verify_constant_no_prime_witness(const Integer& c);

/// f = x(x^2+3)/2 with f^2 = (x^2(x^2+3)/4) * (x^2+3).
struct SquareSplitWitness {
    RatPoly f;
    RatPoly a;
    RatPoly b;
    bool all_integer_valued = false;
    bool product_is_square = false;
    bool essentially_different = false;  // neither cofactor is a rational multiple of f
    bool verified() const noexcept { return all_integer_valued && product_is_square && essentially_different; }
};

SquareSplitWitness intz_square_split_witness();

/// R(p): f = prod (x - r_i) / p over 0..p-1 lies in R(p) and divides the
/// product of its linear factors but none of them.
struct RpNonPrimeWitness {
    Integer p;
    RatPoly f;
    bool in_rp = false;
    bool divides_product = false;
    bool divides_no_factor = false;
    bool verified() const noexcept { return in_rp && divides_product && divides_no_factor; }
};

RpNonPrimeWitness rp_nonprime_witness(const Integer& p);

/// R(p): f = g (x - c1)(x - c2)^(e-1) / p^e with e = v_p(p^2!) = p + 1 and
/// f^2 = a * b, a = g (x - c1)^2 (x - c2)^(e-2) / p^e, b = g (x - c2)^e / p^e.
/// Uses c1 = 0, c2 = p^2 and g the product of (x - b) over 1 <= b < p^2, p not | b.
struct RpSquareSplitWitness {
    Integer p;
    Integer e;
    RatPoly f;
    RatPoly a;
    RatPoly b;
    bool all_in_rp = false;
    bool product_is_square = false;
    bool essentially_different = false;
    bool verified() const noexcept { return all_in_rp && product_is_square && essentially_different; }
};

RpSquareSplitWitness rp_square_split_witness(const Integer& p);

}  // namespace absirr
