#pragma once

// Absolute irreducibility in Krull monoids presented by class data: the
// support and kernel criteria, witnesses of non-absolute irreducibility, the
// "every atom is absolutely irreducible" criterion, and the scenario table.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "absirr/zsm.hpp"

namespace absirr {

/// Number of prime divisors in a class: a positive count or infinitely many.
struct Multiplicity {
    std::optional<std::uint64_t> count;  // nullopt: infinite

    static Multiplicity finite(std::uint64_t n) { return {n}; }
    static Multiplicity infinite() { return {std::nullopt}; }

    bool is_infinite() const noexcept { return !count.has_value(); }
    bool is_one() const noexcept { return count && *count == 1; }
    /// min(count, cap), with infinity mapped to cap.
    std::uint64_t capped(std::uint64_t cap) const noexcept { return count ? std::min(*count, cap) : cap; }
    std::string str() const { return count ? std::to_string(*count) : "inf"; }

    friend bool operator==(const Multiplicity&, const Multiplicity&) = default;
};

/// A Krull monoid given by its class group G, the classes G0 containing prime
/// divisors, and the number of prime divisors in each of them.
class KrullSpec {
public:
    KrullSpec(ClassSet classes, std::vector<Multiplicity> mult);
    /// All multiplicities 1.
    explicit KrullSpec(ClassSet classes);

    const FinGenAbelianGroup& group() const noexcept { return classes_.group(); }
    const ClassSet& class_set() const noexcept { return classes_; }
    const std::vector<Multiplicity>& multiplicities() const noexcept { return mult_; }
    const Multiplicity& mult(std::size_t i) const { return mult_.at(i); }

    /// Indices of G1: classes holding exactly one prime divisor.
    std::vector<std::size_t> g1() const;
    bool in_g1(std::size_t i) const { return mult_.at(i).is_one(); }

    friend bool operator==(const KrullSpec&, const KrullSpec&) = default;

private:
    ClassSet classes_;
    std::vector<Multiplicity> mult_;
};

/// Z^n with G0 = {+-e_i, +-f}, f = e_1 + ... + e_n (no prime element).
KrullSpec r1_spec(std::size_t n);
/// The same with 0, and -f written as the sum of the -e_i (has a prime).
KrullSpec r2_spec(std::size_t n);

// --- criteria on atoms of B(G0) -------------------------------------------

/// No other atom has support contained in supp(U). AtomNotInSet if U is not an atom.
bool is_absirred_support(const Sequence& u, const AtomSet& atoms);

/// The family is Z>=0-dependent and each proper subfamily is Z-independent.
/// Repeated values are allowed (distinct prime divisors in one class).
bool is_absirred_kernel(const FinGenAbelianGroup& group, const std::vector<GroupElement>& family);

/// Two essentially different factorizations of U^n.
struct NonAbsWitness {
    Exponent n = 0;
    std::size_t atom = 0;        // index of U
    std::size_t divisor = 0;     // index of the atom V != U with supp V inside supp U
    Factorization trivial;       // U * ... * U
    Factorization other;         // contains V
};

std::optional<NonAbsWitness> witness_non_absirred(const Sequence& u, const AtomSet& atoms,
                                                  const FactorOptions& options = {});

/// Oracle: for 1 <= n <= n_max the only factorization of U^n is U...U.
bool brute_force_absirred(const Sequence& u, const AtomSet& atoms, Exponent n_max,
                          const FactorOptions& options = {});

// --- all atoms absolutely irreducible ---------------------------------------

/// The lifted construction for a failure of the multiplicity condition: with
/// p != q prime divisors of class g and U = g^k T, a = p^k T and
/// b = p^(k-1) q T satisfy a | b^2, so b is not absolutely irreducible.
struct LiftedWitness {
    std::size_t atom = 0;    // U in the atoms of B(G0)
    std::size_t cls = 0;     // g in G0 \ G1 with v_g(U) >= 2
    ClassSet divisors;       // supp(U) plus a second symbol of class g
    Sequence a;
    Sequence b;
    AtomSet divisor_atoms;
    NonAbsWitness b_witness;  // over divisor_atoms
};

struct AllAbsirredResult {
    enum class Failure { None, NotAbsolutelyIrreducible, RepeatedClassOutsideG1 };

    AtomSet atoms;
    bool holds = true;
    Failure failure = Failure::None;
    std::optional<std::size_t> failing_atom;   // index into atoms
    std::optional<std::size_t> failing_class;  // for RepeatedClassOutsideG1
};

AllAbsirredResult all_irreducibles_absirred(const KrullSpec& spec, const CompletionOptions& options = {});

/// Builds and verifies the LiftedWitness for a RepeatedClassOutsideG1 failure.
LiftedWitness lift_repeated_class_witness(const KrullSpec& spec, const AllAbsirredResult& result,
                                          const FactorOptions& options = {});

// --- B(G) for a whole group -------------------------------------------------

struct BgWitness {
    enum class Kind { OrderAtLeastThree, TwoIndependentInvolutions, InfiniteOrder };
    Kind kind;
    ClassSet classes;
    std::vector<Sequence> factors;  // S, S' [, S'']
    Sequence t;
    Exponent n;
};

struct BgResult {
    bool all_absirred;
    std::optional<BgWitness> witness;
};

/// Every atom of B(G) is absolutely irreducible iff |G| <= 2.
BgResult check_bg_all_absirred(const FinGenAbelianGroup& group);

/// Multiplies out and re-checks a witness: factors and t are atoms, product = t^n.
bool verify_bg_witness(const BgWitness& w);

// --- primes and absolutely irreducible non-primes ----------------------------

bool has_prime_element(const KrullSpec& spec);

/// A family of prime divisors: class indices (repeats allowed) with copy numbers.
struct DivisorFamily {
    std::vector<std::size_t> classes;
    std::vector<std::uint64_t> copies;
    IntVector kernel_vector;  // positive generator: exponents of the element
};

struct FamilySearch {
    bool found = false;
    bool exhaustive = false;  // the bound covered every family
    std::size_t support_bound = 0;
    std::uint64_t mult_cap = 2;
    std::optional<DivisorFamily> witness;
};

FamilySearch exists_absirred_nonprime(const KrullSpec& spec, std::size_t support_bound);
std::vector<DivisorFamily> absirred_families(const KrullSpec& spec, std::size_t support_bound);

// --- scenario table -----------------------------------------------------------

enum class Presence { Present, Absent, NotFoundWithinBound, Undecided };
std::string presence_symbol(Presence p);
std::string presence_name(Presence p);

struct ScenarioBounds {
    std::size_t support_bound = 4;
    CompletionOptions completion{};
    FactorOptions factor{};
};

struct ScenarioReport {
    Presence has_nonabsirred = Presence::Undecided;
    Presence has_absirred_nonprime = Presence::Undecided;
    Presence has_prime = Presence::Undecided;

    std::optional<DivisorFamily> absirred_nonprime_witness;
    std::optional<NonAbsWitness> block_witness;   // failure of the atom criterion
    std::optional<LiftedWitness> lifted_witness;  // failure of the multiplicity condition

    std::string row_label;  // "(nonabs, abs-nonprime, prime)", e.g. "(-, +, -)"
    ScenarioBounds bounds;
    std::uint64_t mult_cap = 2;
    bool mult_capped = false;
    std::string family_semantics = "multiset over classes";
    std::vector<std::string> notes;
};

ScenarioReport classify_scenario(const KrullSpec& spec, const ScenarioBounds& bounds = {});

struct AngermuellerCheck {
    bool absirred_are_prime = false;  // within bounds
    bool factorial = false;           // G0 inside {0}
    bool consistent() const noexcept { return absirred_are_prime == factorial; }
};

AngermuellerCheck angermueller_check(const KrullSpec& spec, const ScenarioBounds& bounds = {});

}  // namespace absirr
