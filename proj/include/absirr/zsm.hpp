#pragma once

// Zero-sum sequences over a finite class set G0, the block monoid B(G0),
// complete atom enumeration and factorization enumeration.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "absirr/abgroup.hpp"
#include "absirr/hilbert.hpp"

namespace absirr {

using Exponent = std::int64_t;

/// An ordered list of group elements G0. Normally duplicate-free; the
/// repeated-values variant models several prime divisors in one class.
class ClassSet {
public:
    ClassSet(FinGenAbelianGroup group, std::vector<GroupElement> classes,
             std::vector<std::string> labels = {});

    /// Symbols may share a group value (distinct prime divisors of one class).
    static ClassSet with_repeated_values(FinGenAbelianGroup group, std::vector<GroupElement> classes,
                                         std::vector<std::string> labels = {});

    const FinGenAbelianGroup& group() const noexcept { return group_; }
    const std::vector<GroupElement>& classes() const noexcept { return classes_; }
    const GroupElement& operator[](std::size_t i) const { return classes_.at(i); }
    std::size_t size() const noexcept { return classes_.size(); }
    bool has_repeated_values() const noexcept { return repeated_; }

    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::string& label(std::size_t i) const { return labels_.at(i); }

    std::optional<std::size_t> index_of(const GroupElement& g) const;
    std::optional<std::size_t> index_of_label(const std::string& label) const;

    /// Machine-word coordinates (free part, then torsion residues).
    const std::vector<SmallVector>& coordinates() const noexcept { return coords_; }
    /// Per coordinate: 0 for free coordinates, d_i for torsion ones.
    const SmallVector& moduli() const noexcept { return moduli_; }

    friend bool operator==(const ClassSet& a, const ClassSet& b) {
        return a.group_ == b.group_ && a.classes_ == b.classes_;
    }

private:
    ClassSet(FinGenAbelianGroup group, std::vector<GroupElement> classes, std::vector<std::string> labels,
             bool allow_repeats);

    FinGenAbelianGroup group_;
    std::vector<GroupElement> classes_;
    std::vector<std::string> labels_;
    std::vector<SmallVector> coords_;
    SmallVector moduli_;
    bool repeated_ = false;
};

/// Element of the free abelian monoid F(G0): exponents v_g(S) indexed
/// parallel to ClassSet::classes. The all-zero vector is the identity.
class Sequence {
public:
    Sequence() = default;
    explicit Sequence(std::vector<Exponent> exponents);

    static Sequence empty(std::size_t n) { return Sequence(std::vector<Exponent>(n, 0)); }
    static Sequence single(std::size_t n, std::size_t index, Exponent count = 1);

    const std::vector<Exponent>& exponents() const noexcept { return exps_; }
    Exponent operator[](std::size_t i) const { return exps_.at(i); }
    std::size_t size() const noexcept { return exps_.size(); }

    Exponent length() const;
    std::vector<std::size_t> support() const;
    bool is_empty() const;

    /// *this divides other in F(G0).
    bool divides(const Sequence& other) const;
    Sequence operator*(const Sequence& other) const;
    /// other must divide *this.
    Sequence quotient(const Sequence& other) const;
    Sequence pow(Exponent n) const;

    friend bool operator==(const Sequence&, const Sequence&) = default;
    friend auto operator<=>(const Sequence& a, const Sequence& b) { return a.exps_ <=> b.exps_; }

private:
    std::vector<Exponent> exps_;
};

GroupElement sigma(const ClassSet& c, const Sequence& s);
inline Exponent length(const Sequence& s) { return s.length(); }
inline std::vector<std::size_t> support(const Sequence& s) { return s.support(); }
bool is_zero_sum(const ClassSet& c, const Sequence& s);
bool is_minimal_zero_sum(const ClassSet& c, const Sequence& s);

/// Human form such as "e1 e2 -f" or "g^3"; "1" for the empty sequence.
std::string format_sequence(const ClassSet& c, const Sequence& s);

struct AtomCertificate {
    std::string method;
    std::size_t unknowns = 0;       // classes plus slack columns
    std::size_t slack_columns = 0;  // one per torsion component
    std::size_t levels = 0;
    long long nodes = 0;
};

/// The complete set of minimal zero-sum sequences over a class set,
/// sorted lexicographically by exponent vector.
class AtomSet {
public:
    AtomSet(ClassSet class_set, std::vector<Sequence> atoms, AtomCertificate certificate);

    const ClassSet& class_set() const noexcept { return class_set_; }
    const std::vector<Sequence>& atoms() const noexcept { return atoms_; }
    const Sequence& operator[](std::size_t i) const { return atoms_.at(i); }
    std::size_t size() const noexcept { return atoms_.size(); }
    const AtomCertificate& certificate() const noexcept { return certificate_; }

    std::optional<std::size_t> index_of(const Sequence& s) const;
    /// Throws AtomNotInSet.
    std::size_t require_index(const Sequence& s) const;

private:
    ClassSet class_set_;
    std::vector<Sequence> atoms_;
    AtomCertificate certificate_;
};

AtomSet enumerate_atoms(const ClassSet& c, const CompletionOptions& options = {});

/// |G| for finite G (or |torsion| when every class has zero free part);
/// a valid bound on atom length via D(G) <= |G|.
Integer atom_length_bound(const ClassSet& c);

/// Multiset of atom indices, nondecreasing.
struct Factorization {
    std::vector<std::size_t> atoms;

    std::size_t length() const noexcept { return atoms.size(); }
    Sequence product(const AtomSet& a) const;

    friend bool operator==(const Factorization&, const Factorization&) = default;
    friend auto operator<=>(const Factorization& a, const Factorization& b) { return a.atoms <=> b.atoms; }
};

std::string format_factorization(const AtomSet& a, const Factorization& f);

struct FactorOptions {
    long long budget = 10'000'000;
    std::size_t max_results = std::numeric_limits<std::size_t>::max();
    bool parallel = false;
};

/// All factorizations of a zero-sum sequence, sorted. NotZeroSum otherwise.
std::vector<Factorization> factorizations(const Sequence& b, const AtomSet& a, const FactorOptions& options = {});

std::set<std::size_t> length_set(const Sequence& b, const AtomSet& a, const FactorOptions& options = {});
mpq_class elasticity(const Sequence& b, const AtomSet& a, const FactorOptions& options = {});

}  // namespace absirr
