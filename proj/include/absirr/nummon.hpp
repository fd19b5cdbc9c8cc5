#pragma once

// Numerical monoids: the intervals M_n = {0} u {n, n+1, ...} and monoids
// generated by finitely many positive integers with gcd 1.

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace absirr {

class NumericalMonoid {
public:
    enum class Kind { Interval, Generated };

    /// M_n. InvalidArgument unless n >= 1.
    static NumericalMonoid interval(std::int64_t n);
    /// InvalidArgument on an empty list, a nonpositive generator or gcd != 1.
    static NumericalMonoid generated(std::vector<std::int64_t> generators);

    Kind kind() const noexcept { return kind_; }
    /// The n of M_n (Interval only).
    std::int64_t n() const;
    /// Sorted, deduplicated generators as given (Generated only).
    const std::vector<std::int64_t>& generators() const;

    bool contains(std::int64_t x) const;
    /// Every x >= this bound is a member.
    std::int64_t conductor_bound() const noexcept;
    std::string describe() const;

    friend bool operator==(const NumericalMonoid&, const NumericalMonoid&) = default;

private:
    NumericalMonoid() = default;

    Kind kind_ = Kind::Interval;
    std::int64_t n_ = 1;
    std::vector<std::int64_t> gens_;
};

/// Ascending atoms: {n, ..., 2n-1} for M_n, the minimal generators otherwise.
std::vector<std::int64_t> nm_atoms(const NumericalMonoid& m);

/// A factorization as a nondecreasing list of atoms.
using NmFactorization = std::vector<std::int64_t>;

/// All factorizations of x in lexicographic order. NotMember if x is not in
/// the monoid; x = 0 has the single empty factorization.
std::vector<NmFactorization> nm_factorizations(const NumericalMonoid& m, std::int64_t x,
                                               std::uint64_t budget = 10'000'000);
std::set<std::size_t> nm_length_set(const NumericalMonoid& m, std::int64_t x,
                                    std::uint64_t budget = 10'000'000);

/// m * t written as t copies of m and as m copies of t.
struct NmWitness {
    std::int64_t m = 0;
    std::int64_t t = 0;
    std::int64_t element = 0;
    NmFactorization trivial;
    NmFactorization other;
};

/// Smallest t != m among the atoms of M_n. NoWitness for n = 1, InvalidArgument
/// for Generated monoids, AtomNotInSet if m is not an atom.
NmWitness nm_witness_non_absirred(const NumericalMonoid& m, std::int64_t atom);

}  // namespace absirr
