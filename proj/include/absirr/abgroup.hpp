#pragma once

// Finitely generated abelian groups Z^r + Z/d1 + ... + Z/dk and the exact
// integer linear algebra used by every classification criterion.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace absirr {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

/// Dense integer matrix with exact entries.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntVector column(std::size_t j) const;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

    /// Exact determinant by fraction-free elimination; square matrices only.
    Integer determinant() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

/// U * A * V == D with U, V unimodular and D diagonal, d_i | d_{i+1}, d_i >= 0.
struct SmithForm {
    IntMatrix U;
    IntMatrix D;
    IntMatrix V;
};

SmithForm smith_normal_form(const IntMatrix& a);

/// Row-style Hermite normal form of a lattice basis: echelon, positive
/// pivots, entries above each pivot reduced into [0, pivot). Zero rows dropped.
std::vector<IntVector> hermite_rows(std::vector<IntVector> rows);

/// Membership of v in the lattice spanned by an HNF basis (as returned by
/// hermite_rows).
bool lattice_contains(const std::vector<IntVector>& hnf_basis, IntVector v);

class FinGenAbelianGroup;

/// Element of a FinGenAbelianGroup in its presentation coordinates. Torsion
/// residues are always stored reduced; construct through the group.
class GroupElement {
public:
    GroupElement() = default;

    const IntVector& free_part() const noexcept { return free_; }
    const IntVector& torsion_part() const noexcept { return torsion_; }

    bool is_zero() const;

    friend bool operator==(const GroupElement&, const GroupElement&) = default;
    friend std::strong_ordering operator<=>(const GroupElement& a, const GroupElement& b);

private:
    friend class FinGenAbelianGroup;
    GroupElement(IntVector free, IntVector torsion)
        : free_(std::move(free)), torsion_(std::move(torsion)) {}

    IntVector free_;
    IntVector torsion_;
};

std::ostream& operator<<(std::ostream& os, const GroupElement& g);

/// Z^r + Z/d1 + ... + Z/dk. Elements use the coordinates of the given
/// presentation; equality of groups goes through invariant factors.
class FinGenAbelianGroup {
public:
    FinGenAbelianGroup() = default;
    FinGenAbelianGroup(std::size_t free_rank, std::vector<Integer> torsion);

    static FinGenAbelianGroup cyclic(long n);
    static FinGenAbelianGroup free(std::size_t rank) { return {rank, {}}; }

    std::size_t free_rank() const noexcept { return free_rank_; }
    const std::vector<Integer>& torsion() const noexcept { return torsion_; }
    /// Invariant factors d1 | d2 | ... of the torsion subgroup (all >= 2).
    const std::vector<Integer>& invariant_factors() const noexcept { return invariants_; }
    /// Number of coordinates: free_rank + number of torsion components.
    std::size_t dimension() const noexcept { return free_rank_ + torsion_.size(); }

    bool is_finite() const noexcept { return free_rank_ == 0; }
    /// Cardinality; nullopt for infinite groups.
    std::optional<Integer> cardinality() const;

    GroupElement zero() const;
    /// Reduces torsion coordinates; throws DimensionMismatch on bad lengths.
    GroupElement element(IntVector free, IntVector torsion) const;
    /// Coordinates laid out as free part followed by torsion part.
    GroupElement element(const IntVector& coords) const;
    GroupElement element(std::initializer_list<long> coords) const;
    /// Standard generator i (0-based over free then torsion coordinates).
    GroupElement basis_element(std::size_t i) const;

    bool contains(const GroupElement& g) const;
    GroupElement add(const GroupElement& a, const GroupElement& b) const;
    GroupElement negate(const GroupElement& a) const;
    GroupElement scale(const Integer& n, const GroupElement& a) const;

    /// All elements of a finite group in lexicographic coordinate order.
    std::vector<GroupElement> elements() const;

    friend bool operator==(const FinGenAbelianGroup& a, const FinGenAbelianGroup& b) {
        return a.free_rank_ == b.free_rank_ && a.invariants_ == b.invariants_;
    }

    std::string describe() const;

private:
    std::size_t free_rank_ = 0;
    std::vector<Integer> torsion_;
    std::vector<Integer> invariants_;
};

/// Order of g; nullopt means infinite order.
std::optional<Integer> order(const FinGenAbelianGroup& group, const GroupElement& g);

/// Integer relation matrix of a family: one row per group coordinate, one
/// column per family member, plus one slack column -d_j per torsion component.
IntMatrix augmented_relation_matrix(const FinGenAbelianGroup& group,
                                    const std::vector<GroupElement>& family);

/// HNF basis of { a in Z^m : sum a_i g_i = 0 }.
std::vector<IntVector> kernel_lattice(const FinGenAbelianGroup& group,
                                      const std::vector<GroupElement>& family);

bool is_z_independent(const FinGenAbelianGroup& group, const std::vector<GroupElement>& family);

/// Some a >= 0, a != 0 with sum a_i g_i = 0, or nullopt. When the kernel has
/// rank one this is the nonnegative generator.
std::optional<IntVector> positive_kernel_vector(const FinGenAbelianGroup& group,
                                                const std::vector<GroupElement>& family);

/// Abelian groups of order n up to isomorphism, as invariant-factor chains.
std::vector<FinGenAbelianGroup> abelian_groups_of_order(long n);

}  // namespace absirr
