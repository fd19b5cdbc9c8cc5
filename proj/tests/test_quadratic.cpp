#include <doctest.h>

#include <random>
#include <set>

#include "absirr/errors.hpp"
#include "absirr/krull.hpp"
#include "absirr/quadratic.hpp"

using namespace absirr;

namespace {

const QuadRing R14(-14);
const QuadInt S14{0, 1};  // sqrt(-14)

// Irreducible iff no element of norm strictly between 1 and N(z) divides z;
// scans a coordinate box rather than norm divisors.
bool oracle_irreducible(const QuadRing& r, const QuadInt& z) {
    const Integer n = r.norm(z);
    for (Integer a = -n; a <= n; ++a)
        for (Integer b = -n; b <= n; ++b) {
            const QuadInt w{a, b};
            const Integer nw = r.norm(w);
            if (nw <= 1 || nw >= n) continue;
            if (r.exact_div(z, w)) return false;
        }
    return true;
}

QuadInt product(const QuadRing& r, const QuadFactorization& f) {
    QuadInt p = f.unit;
    for (const auto& w : f.factors) p = r.mul(p, w);
    return p;
}

}  // namespace

TEST_CASE("ring construction") {
    CHECK_NOTHROW(QuadRing(-14));
    CHECK_NOTHROW(QuadRing(-5));
    CHECK_NOTHROW(QuadRing(-1));
    CHECK_NOTHROW(QuadRing(-13));  // -13 = 3 mod 4
    CHECK_THROWS_AS(QuadRing(-3), InvalidArgument);  // 1 mod 4
    CHECK_THROWS_AS(QuadRing(-15), InvalidArgument);
    CHECK_THROWS_AS(QuadRing(-12), InvalidArgument);
    CHECK_THROWS_AS(QuadRing(14), InvalidArgument);
    CHECK_THROWS_AS(QuadRing(-18), InvalidArgument);
}

TEST_CASE("arithmetic and norms") {
    CHECK(R14.norm(S14) == 14);
    CHECK(R14.mul(S14, S14) == QuadInt{-14, 0});
    CHECK(R14.format(QuadInt{1, -2}) == "1 - 2*sqrt(-14)");
    CHECK(R14.format(R14.negate(S14)) == "-sqrt(-14)");
    CHECK(R14.format(QuadInt{7, 0}) == "7");
    CHECK(R14.canonical(QuadInt{0, -3}) == QuadInt{0, 3});
    CHECK(R14.canonical(QuadInt{-2, 5}) == QuadInt{2, -5});
    CHECK_THROWS_AS(R14.exact_div(S14, QuadInt{}), ZeroDivisor);

    std::mt19937 rng(9);
    std::uniform_int_distribution<long> c(-30, 30);
    for (long d : {-1, -2, -5, -6, -14}) {
        const QuadRing r(d);
        for (int i = 0; i < 200; ++i) {
            const QuadInt x{c(rng), c(rng)}, y{c(rng), c(rng)};
            CHECK(r.norm(r.mul(x, y)) == r.norm(x) * r.norm(y));
            CHECK((r.norm(x) == 0) == x.is_zero());
            if (!y.is_zero()) CHECK(r.exact_div(r.mul(x, y), y) == x);
        }
        if (d <= -2) CHECK(elements_of_norm(r, 1) == std::vector<QuadInt>{{-1, 0}, {1, 0}});
    }
}

TEST_CASE("elements of given norm") {
    CHECK(elements_of_norm(R14, 2).empty());
    CHECK(elements_of_norm(R14, 4) == std::vector<QuadInt>{{-2, 0}, {2, 0}});
    CHECK(elements_of_norm(R14, 14) == std::vector<QuadInt>{{0, -1}, {0, 1}});
    CHECK(elements_of_norm(R14, 0) == std::vector<QuadInt>{{0, 0}});
    CHECK_THROWS_AS(elements_of_norm(R14, -1), InvalidArgument);
    for (long m = 0; m <= 100; ++m)
        for (const auto& z : elements_of_norm(QuadRing(-5), m)) CHECK(QuadRing(-5).norm(z) == m);
}

TEST_CASE("irreducibility") {
    CHECK(quad_is_irreducible(R14, {2, 0}));
    CHECK(quad_is_irreducible(R14, S14));
    CHECK_FALSE(quad_is_irreducible(R14, {-14, 0}));
    CHECK_THROWS_AS(quad_is_irreducible(R14, {1, 0}), ZeroOrUnit);
    CHECK_THROWS_AS(quad_is_irreducible(R14, {0, 0}), ZeroOrUnit);
    for (long d : {-5, -14})
        for (long a = -6; a <= 6; ++a)
            for (long b = -3; b <= 3; ++b) {
                const QuadRing r(d);
                const QuadInt z{a, b};
                if (r.norm(z) <= 1) continue;
                CHECK(quad_is_irreducible(r, z) == oracle_irreducible(r, z));
            }
}

TEST_CASE("primality witnesses") {
    CHECK(quad_divides(R14, {2, 0}, R14.mul(S14, S14)));
    CHECK_FALSE(quad_divides(R14, {2, 0}, S14));
    CHECK_THROWS_AS(quad_divides(R14, {}, S14), ZeroDivisor);

    const auto two = quad_is_prime_witness(R14, {2, 0});
    CHECK(two.kind == PrimeReport::Kind::NonPrimeWitness);
    CHECK(two.x == S14);
    CHECK(two.y == S14);

    const auto eleven = quad_is_prime_witness(R14, {11, 0});
    CHECK(eleven.kind == PrimeReport::Kind::PrimeByEuler);
    // x^2 + 14 has no root mod 11.
    for (int x = 0; x < 11; ++x) CHECK((x * x + 14) % 11 != 0);

    CHECK(quad_is_prime_witness(R14, {3, 0}).kind == PrimeReport::Kind::Unknown);
    CHECK(quad_is_prime_witness(R14, {7, 0}).kind == PrimeReport::Kind::Unknown);
    CHECK_THROWS_AS(quad_is_prime_witness(R14, {}), ZeroDivisor);

    // d = 3 mod 4: 2 | (1 + sqrt d)(1 - sqrt d).
    const QuadRing r5(-5);
    const auto w5 = quad_is_prime_witness(r5, {2, 0});
    REQUIRE(w5.kind == PrimeReport::Kind::NonPrimeWitness);
    CHECK(w5.x == QuadInt{1, 1});
    CHECK(w5.y == QuadInt{1, -1});
}

TEST_CASE("factorization enumeration") {
    const auto fs = quad_factorizations(R14, {-14, 0});
    REQUIRE(fs.size() == 2);
    for (const auto& f : fs) {
        CHECK(product(R14, f) == QuadInt{-14, 0});
        for (const auto& w : f.factors) CHECK(oracle_irreducible(R14, w));
    }
    const QuadRing r5(-5);
    // 6 = 2 * 3 = (1 + sqrt(-5))(1 - sqrt(-5)).
    CHECK(quad_factorizations(r5, {6, 0}).size() == 2);
    CHECK_THROWS_AS(quad_factorizations(R14, {-1, 0}), ZeroOrUnit);
    CHECK_THROWS_AS(quad_factorizations(R14, {64, 0}, 2), BudgetExceeded);
}

TEST_CASE("absolute irreducibility by brute force") {
    const auto s = quad_brute_absirred(R14, S14, 2);
    CHECK_FALSE(s.absolutely_irreducible);
    REQUIRE(s.witness);
    CHECK(*s.n == 2);
    CHECK(s.witness->unit == QuadInt{-1, 0});
    CHECK(s.witness->factors == std::vector<QuadInt>{{2, 0}, {7, 0}});
    CHECK(product(R14, *s.witness) == R14.pow(S14, 2));

    CHECK(quad_brute_absirred(R14, {2, 0}, 3).absolutely_irreducible);
    CHECK(quad_brute_absirred(R14, {11, 0}, 2).absolutely_irreducible);
    CHECK_THROWS_AS(quad_brute_absirred(R14, {-14, 0}, 2), InvalidArgument);
}

TEST_CASE("Z[sqrt(-5)] is half-factorial up to norm 200") {
    const auto h = quad_half_factorial_check(QuadRing(-5), 200);
    CHECK(h.holds);
    CHECK(h.elements_checked > 50);
    // Z[sqrt(-14)] is not half-factorial: 81 = 3^4 = (5 + 2 sqrt(-14))(5 - 2 sqrt(-14)).
    std::set<std::size_t> lengths;
    for (const auto& f : quad_factorizations(R14, {81, 0})) lengths.insert(f.factors.size());
    CHECK(lengths == std::set<std::size_t>{2, 4});
    CHECK_FALSE(quad_half_factorial_check(R14, 6561).holds);
}

TEST_CASE("agreement with the class-group model") {
    const auto g = FinGenAbelianGroup::cyclic(2);
    const KrullSpec spec(ClassSet(g, {g.element({0}), g.element({1})}, {"0", "g"}),
                         {Multiplicity::infinite(), Multiplicity::finite(2)});
    const auto rep = classify_scenario(spec);
    CHECK(rep.row_label == "(+, +, +)");
    // The ring realizes the same three columns.
    CHECK_FALSE(quad_brute_absirred(R14, S14, 2).absolutely_irreducible);
    CHECK(quad_brute_absirred(R14, {2, 0}, 3).absolutely_irreducible);
    CHECK(quad_is_prime_witness(R14, {2, 0}).kind == PrimeReport::Kind::NonPrimeWitness);
    CHECK(quad_is_prime_witness(R14, {11, 0}).kind == PrimeReport::Kind::PrimeByEuler);
}
