#pragma once

// Imaginary quadratic rings Z[sqrt d] (d < 0 squarefree, d = 2, 3 mod 4):
// norms, irreducibility, primality witnesses and brute-force factorization.

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "absirr/abgroup.hpp"

namespace absirr {

/// a + b sqrt(d).
struct QuadInt {
    Integer a = 0;
    Integer b = 0;

    bool is_zero() const { return a == 0 && b == 0; }
    friend bool operator==(const QuadInt&, const QuadInt&) = default;
    /// Order by (a, b); used for canonical listings.
    friend std::strong_ordering operator<=>(const QuadInt& x, const QuadInt& y);
};

class QuadRing {
public:
    /// InvalidArgument unless d < 0, squarefree and d = 2 or 3 mod 4.
    explicit QuadRing(Integer d);

    const Integer& d() const noexcept { return d_; }

    QuadInt sqrt_d() const { return {0, 1}; }
    QuadInt add(const QuadInt& x, const QuadInt& y) const { return {x.a + y.a, x.b + y.b}; }
    QuadInt negate(const QuadInt& x) const { return {-x.a, -x.b}; }
    QuadInt mul(const QuadInt& x, const QuadInt& y) const;
    QuadInt pow(const QuadInt& x, unsigned n) const;
    QuadInt conj(const QuadInt& x) const { return {x.a, -x.b}; }
    /// a^2 - d b^2.
    Integer norm(const QuadInt& x) const;
    /// Units are exactly +-1.
    bool is_unit(const QuadInt& x) const { return norm(x) == 1; }
    /// z / w if it lies in the ring. ZeroDivisor for w = 0.
    std::optional<QuadInt> exact_div(const QuadInt& z, const QuadInt& w) const;
    /// Associate with first nonzero coordinate positive.
    QuadInt canonical(const QuadInt& x) const;

    std::string format(const QuadInt& x) const;

    friend bool operator==(const QuadRing&, const QuadRing&) = default;

private:
    Integer d_;
};

/// All x with N(x) = m, ascending by (a, b). InvalidArgument for m < 0.
std::vector<QuadInt> elements_of_norm(const QuadRing& r, const Integer& m);

/// ZeroDivisor for w = 0.
bool quad_divides(const QuadRing& r, const QuadInt& w, const QuadInt& z);

/// No divisor of intermediate norm. ZeroOrUnit for zero or units.
bool quad_is_irreducible(const QuadRing& r, const QuadInt& z);

struct PrimeReport {
    enum class Kind { NonPrimeWitness, PrimeByEuler, Unknown };
    Kind kind = Kind::Unknown;
    std::optional<QuadInt> x;  // z | xy, z does not divide x or y
    std::optional<QuadInt> y;
};

std::string prime_report_kind_name(PrimeReport::Kind k);

/// Tries the recipes for even z (x = y = sqrt d for d = 2 mod 4,
/// x = 1 + sqrt d, y = 1 - sqrt d for d = 3 mod 4), then Euler's criterion for
/// odd rational primes. ZeroDivisor for z = 0.
PrimeReport quad_is_prime_witness(const QuadRing& r, const QuadInt& z);

/// A factorization into irreducibles: unit * product of canonical factors.
struct QuadFactorization {
    QuadInt unit;                  // +-1
    std::vector<QuadInt> factors;  // canonical, ascending by (norm, a, b)
    friend bool operator==(const QuadFactorization&, const QuadFactorization&) = default;
};

/// Every factorization of z into irreducibles, up to units and order, in
/// canonical order. ZeroOrUnit for zero or units; BudgetExceeded past the budget.
std::vector<QuadFactorization> quad_factorizations(const QuadRing& r, const QuadInt& z,
                                                   std::uint64_t budget = 10'000'000);

struct QuadAbsirredResult {
    bool absolutely_irreducible = true;  // within n <= n_max
    unsigned n_max = 0;
    std::optional<unsigned> n;                 // exponent of the witness
    std::optional<QuadFactorization> witness;  // factorization of z^n other than z...z
};

/// Brute force over n = 1..n_max. InvalidArgument if z is not irreducible or n_max < 1.
QuadAbsirredResult quad_brute_absirred(const QuadRing& r, const QuadInt& z, unsigned n_max,
                                       std::uint64_t budget = 10'000'000);

struct HalfFactorialCheck {
    bool holds = true;
    Integer max_norm;
    std::size_t elements_checked = 0;
    std::optional<QuadInt> counterexample;
};

/// Every nonzero nonunit z with N(z) <= max_norm has factorizations of one length.
HalfFactorialCheck quad_half_factorial_check(const QuadRing& r, const Integer& max_norm,
                                             std::uint64_t budget = 10'000'000);

}  // namespace absirr
