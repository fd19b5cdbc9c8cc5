#include "absirr/abgroup.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "absirr/errors.hpp"
#include "absirr/hilbert.hpp"

namespace absirr {

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw DimensionMismatch("ragged matrix literal");
        for (long v : row) data_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntVector IntMatrix::column(std::size_t j) const {
    IntVector c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product dimensions");
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Integer& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

Integer IntMatrix::determinant() const {
    if (rows_ != cols_) throw DimensionMismatch("determinant of non-square matrix");
    const std::size_t n = rows_;
    if (n == 0) return 1;
    // Bareiss fraction-free elimination.
    IntMatrix m = *this;
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t swap = k + 1;
            while (swap < n && m(swap, k) == 0) ++swap;
            if (swap == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(swap, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                m(i, j) = t;
            }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
    os << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
        os << ']';
    }
    return os << ']';
}

// ---------------------------------------------------------------------------
// Smith normal form

namespace {

Integer floor_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

struct SmithWork {
    IntMatrix U, D, V;

    void swap_rows(std::size_t i, std::size_t k) {
        for (std::size_t j = 0; j < D.cols(); ++j) std::swap(D(i, j), D(k, j));
        for (std::size_t j = 0; j < U.cols(); ++j) std::swap(U(i, j), U(k, j));
    }
    void swap_cols(std::size_t i, std::size_t k) {
        for (std::size_t r = 0; r < D.rows(); ++r) std::swap(D(r, i), D(r, k));
        for (std::size_t r = 0; r < V.rows(); ++r) std::swap(V(r, i), V(r, k));
    }
    // row_i -= q * row_k
    void sub_row(std::size_t i, std::size_t k, const Integer& q) {
        if (q == 0) return;
        for (std::size_t j = 0; j < D.cols(); ++j) D(i, j) -= q * D(k, j);
        for (std::size_t j = 0; j < U.cols(); ++j) U(i, j) -= q * U(k, j);
    }
    // col_i -= q * col_k
    void sub_col(std::size_t i, std::size_t k, const Integer& q) {
        if (q == 0) return;
        for (std::size_t r = 0; r < D.rows(); ++r) D(r, i) -= q * D(r, k);
        for (std::size_t r = 0; r < V.rows(); ++r) V(r, i) -= q * V(r, k);
    }
    void negate_row(std::size_t i) {
        for (std::size_t j = 0; j < D.cols(); ++j) D(i, j) = -D(i, j);
        for (std::size_t j = 0; j < U.cols(); ++j) U(i, j) = -U(i, j);
    }
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    SmithWork w{IntMatrix::identity(m), a, IntMatrix::identity(n)};
    IntMatrix& D = w.D;

    for (std::size_t t = 0; t < std::min(m, n); ++t) {
        // Pivot: smallest nonzero absolute value in the trailing block.
        auto bring_min_to_pivot = [&]() -> bool {
            std::size_t bi = m, bj = n;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j)
                    if (D(i, j) != 0 && (bi == m || abs(D(i, j)) < abs(D(bi, bj)))) {
                        bi = i;
                        bj = j;
                    }
            if (bi == m) return false;
            if (bi != t) w.swap_rows(t, bi);
            if (bj != t) w.swap_cols(t, bj);
            return true;
        };
        if (!bring_min_to_pivot()) break;

        for (;;) {
            bool dirty = false;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (D(i, t) == 0) continue;
                w.sub_row(i, t, floor_div(D(i, t), D(t, t)));
                if (D(i, t) != 0) dirty = true;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (D(t, j) == 0) continue;
                w.sub_col(j, t, floor_div(D(t, j), D(t, t)));
                if (D(t, j) != 0) dirty = true;
            }
            if (dirty) {
                bring_min_to_pivot();
                continue;
            }
            // Row and column clear; enforce divisibility of the trailing block.
            bool fixed = false;
            for (std::size_t i = t + 1; i < m && !fixed; ++i)
                for (std::size_t j = t + 1; j < n && !fixed; ++j)
                    if (D(i, j) % D(t, t) != 0) {
                        w.sub_row(t, i, Integer(-1));
                        fixed = true;
                    }
            if (!fixed) break;
        }
        if (D(t, t) < 0) w.negate_row(t);
    }
    return {std::move(w.U), std::move(w.D), std::move(w.V)};
}

// ---------------------------------------------------------------------------
// Hermite normal form of row lattices

std::vector<IntVector> hermite_rows(std::vector<IntVector> rows) {
    if (rows.empty()) return rows;
    const std::size_t n = rows.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
        // Euclid on column c among rows r..end.
        for (;;) {
            std::size_t best = rows.size();
            for (std::size_t i = r; i < rows.size(); ++i)
                if (rows[i][c] != 0 && (best == rows.size() || abs(rows[i][c]) < abs(rows[best][c])))
                    best = i;
            if (best == rows.size()) break;
            std::swap(rows[r], rows[best]);
            bool done = true;
            for (std::size_t i = r + 1; i < rows.size(); ++i) {
                if (rows[i][c] == 0) continue;
                Integer q = floor_div(rows[i][c], rows[r][c]);
                for (std::size_t j = c; j < n; ++j) rows[i][j] -= q * rows[r][j];
                if (rows[i][c] != 0) done = false;
            }
            if (done) break;
        }
        if (rows[r][c] == 0) continue;
        if (rows[r][c] < 0)
            for (auto& x : rows[r]) x = -x;
        for (std::size_t i = 0; i < r; ++i) {
            Integer q = floor_div(rows[i][c], rows[r][c]);
            if (q != 0)
                for (std::size_t j = c; j < n; ++j) rows[i][j] -= q * rows[r][j];
        }
        ++r;
    }
    rows.resize(r);
    return rows;
}

bool lattice_contains(const std::vector<IntVector>& hnf_basis, IntVector v) {
    for (const auto& row : hnf_basis) {
        std::size_t c = 0;
        while (c < row.size() && row[c] == 0) ++c;
        if (c == row.size()) continue;
        for (std::size_t j = 0; j < c; ++j)
            if (v[j] != 0) return false;
        if (v[c] % row[c] != 0) return false;
        Integer q = v[c] / row[c];
        for (std::size_t j = c; j < v.size(); ++j) v[j] -= q * row[j];
    }
    return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

// ---------------------------------------------------------------------------
// Groups and elements

namespace {

Integer reduce_mod(const Integer& x, const Integer& d) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
    return r;
}

int compare_vectors(const IntVector& a, const IntVector& b) {
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        int c = cmp(a[i], b[i]);
        if (c != 0) return c < 0 ? -1 : 1;
    }
    if (a.size() == b.size()) return 0;
    return a.size() < b.size() ? -1 : 1;
}

}  // namespace

bool GroupElement::is_zero() const {
    auto zero = [](const Integer& x) { return x == 0; };
    return std::all_of(free_.begin(), free_.end(), zero) &&
           std::all_of(torsion_.begin(), torsion_.end(), zero);
}

std::strong_ordering operator<=>(const GroupElement& a, const GroupElement& b) {
    int c = compare_vectors(a.free_, b.free_);
    if (c == 0) c = compare_vectors(a.torsion_, b.torsion_);
    return c <=> 0;
}

std::ostream& operator<<(std::ostream& os, const GroupElement& g) {
    os << '(';
    bool first = true;
    for (const auto& x : g.free_part()) {
        os << (first ? "" : ",") << x;
        first = false;
    }
    if (!g.torsion_part().empty()) {
        os << (first ? "" : ";");
        first = true;
        for (const auto& x : g.torsion_part()) {
            os << (first ? "" : ",") << x;
            first = false;
        }
    }
    return os << ')';
}

FinGenAbelianGroup::FinGenAbelianGroup(std::size_t free_rank, std::vector<Integer> torsion)
    : free_rank_(free_rank), torsion_(std::move(torsion)) {
    for (const auto& d : torsion_)
        if (d < 2) throw InvalidArgument("torsion orders must be >= 2, got " + d.get_str());
    IntMatrix rel(torsion_.size(), torsion_.size());
    for (std::size_t i = 0; i < torsion_.size(); ++i) rel(i, i) = torsion_[i];
    const SmithForm snf = smith_normal_form(rel);
    for (std::size_t i = 0; i < torsion_.size(); ++i)
        if (snf.D(i, i) != 1) invariants_.push_back(snf.D(i, i));
}

FinGenAbelianGroup FinGenAbelianGroup::cyclic(long n) {
    if (n == 1) return {};
    return {0, {Integer(n)}};
}

std::optional<Integer> FinGenAbelianGroup::cardinality() const {
    if (free_rank_ > 0) return std::nullopt;
    Integer c = 1;
    for (const auto& d : torsion_) c *= d;
    return c;
}

GroupElement FinGenAbelianGroup::zero() const {
    return {IntVector(free_rank_, Integer(0)), IntVector(torsion_.size(), Integer(0))};
}

GroupElement FinGenAbelianGroup::element(IntVector free, IntVector torsion) const {
    if (free.size() != free_rank_ || torsion.size() != torsion_.size())
        throw DimensionMismatch("element coordinates do not match group " + describe());
    for (std::size_t i = 0; i < torsion.size(); ++i) torsion[i] = reduce_mod(torsion[i], torsion_[i]);
    return {std::move(free), std::move(torsion)};
}

GroupElement FinGenAbelianGroup::element(const IntVector& coords) const {
    if (coords.size() != dimension())
        throw DimensionMismatch("element has " + std::to_string(coords.size()) +
                                " coordinates, group " + describe() + " needs " +
                                std::to_string(dimension()));
    IntVector f(coords.begin(), coords.begin() + static_cast<std::ptrdiff_t>(free_rank_));
    IntVector t(coords.begin() + static_cast<std::ptrdiff_t>(free_rank_), coords.end());
    return element(std::move(f), std::move(t));
}

GroupElement FinGenAbelianGroup::element(std::initializer_list<long> coords) const {
    IntVector v;
    for (long c : coords) v.emplace_back(c);
    return element(v);
}

GroupElement FinGenAbelianGroup::basis_element(std::size_t i) const {
    IntVector v(dimension(), Integer(0));
    v.at(i) = 1;
    return element(v);
}

bool FinGenAbelianGroup::contains(const GroupElement& g) const {
    if (g.free_.size() != free_rank_ || g.torsion_.size() != torsion_.size()) return false;
    for (std::size_t i = 0; i < torsion_.size(); ++i)
        if (g.torsion_[i] < 0 || g.torsion_[i] >= torsion_[i]) return false;
    return true;
}

GroupElement FinGenAbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
    if (!contains(a) || !contains(b)) throw DimensionMismatch("element not in group " + describe());
    IntVector f(free_rank_), t(torsion_.size());
    for (std::size_t i = 0; i < free_rank_; ++i) f[i] = a.free_[i] + b.free_[i];
    for (std::size_t i = 0; i < torsion_.size(); ++i) t[i] = reduce_mod(a.torsion_[i] + b.torsion_[i], torsion_[i]);
    return {std::move(f), std::move(t)};
}

GroupElement FinGenAbelianGroup::negate(const GroupElement& a) const { return scale(-1, a); }

GroupElement FinGenAbelianGroup::scale(const Integer& n, const GroupElement& a) const {
    if (!contains(a)) throw DimensionMismatch("element not in group " + describe());
    IntVector f(free_rank_), t(torsion_.size());
    for (std::size_t i = 0; i < free_rank_; ++i) f[i] = n * a.free_[i];
    for (std::size_t i = 0; i < torsion_.size(); ++i) t[i] = reduce_mod(n * a.torsion_[i], torsion_[i]);
    return {std::move(f), std::move(t)};
}

std::vector<GroupElement> FinGenAbelianGroup::elements() const {
    if (!is_finite()) throw InfiniteGroupNoBound();
    std::vector<GroupElement> out;
    IntVector t(torsion_.size(), Integer(0));
    for (;;) {
        out.push_back(GroupElement({}, t));
        std::size_t i = torsion_.size();
        while (i > 0) {
            --i;
            if (++t[i] < torsion_[i]) break;
            t[i] = 0;
            if (i == 0) return out;
        }
        if (torsion_.empty()) return out;
    }
}

std::string FinGenAbelianGroup::describe() const {
    std::ostringstream os;
    bool first = true;
    if (free_rank_ > 0) {
        os << "Z^" << free_rank_;
        first = false;
    }
    for (const auto& d : torsion_) {
        os << (first ? "" : "+") << "Z/" << d;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

std::optional<Integer> order(const FinGenAbelianGroup& group, const GroupElement& g) {
    if (!group.contains(g)) throw DimensionMismatch("element not in group " + group.describe());
    for (const auto& x : g.free_part())
        if (x != 0) return std::nullopt;
    Integer n = 1;
    for (std::size_t i = 0; i < g.torsion_part().size(); ++i) {
        Integer gcd_val;
        const Integer& d = group.torsion()[i];
        mpz_gcd(gcd_val.get_mpz_t(), d.get_mpz_t(), g.torsion_part()[i].get_mpz_t());
        Integer component = d / gcd_val;
        mpz_lcm(n.get_mpz_t(), n.get_mpz_t(), component.get_mpz_t());
    }
    return n;
}

// ---------------------------------------------------------------------------
// Kernel computations

IntMatrix augmented_relation_matrix(const FinGenAbelianGroup& group,
                                    const std::vector<GroupElement>& family) {
    const std::size_t m = family.size();
    const std::size_t r = group.free_rank();
    const std::size_t k = group.torsion().size();
    IntMatrix a(r + k, m + k);
    for (std::size_t j = 0; j < m; ++j) {
        if (!group.contains(family[j]))
            throw DimensionMismatch("family member not in group " + group.describe());
        for (std::size_t i = 0; i < r; ++i) a(i, j) = family[j].free_part()[i];
        for (std::size_t i = 0; i < k; ++i) a(r + i, j) = family[j].torsion_part()[i];
    }
    for (std::size_t i = 0; i < k; ++i) a(r + i, m + i) = -group.torsion()[i];
    return a;
}

std::vector<IntVector> kernel_lattice(const FinGenAbelianGroup& group,
                                      const std::vector<GroupElement>& family) {
    const std::size_t m = family.size();
    if (m == 0) return {};
    const IntMatrix a = augmented_relation_matrix(group, family);
    const SmithForm snf = smith_normal_form(a);
    std::size_t rank = 0;
    while (rank < std::min(a.rows(), a.cols()) && snf.D(rank, rank) != 0) ++rank;
    std::vector<IntVector> basis;
    for (std::size_t j = rank; j < a.cols(); ++j) {
        IntVector v(m);
        for (std::size_t i = 0; i < m; ++i) v[i] = snf.V(i, j);
        basis.push_back(std::move(v));
    }
    return hermite_rows(std::move(basis));
}

bool is_z_independent(const FinGenAbelianGroup& group, const std::vector<GroupElement>& family) {
    return kernel_lattice(group, family).empty();
}

std::optional<IntVector> positive_kernel_vector(const FinGenAbelianGroup& group,
                                                const std::vector<GroupElement>& family) {
    const auto basis = kernel_lattice(group, family);
    if (basis.empty()) return std::nullopt;
    if (basis.size() == 1) {
        IntVector v = basis.front();
        const bool nonneg = std::all_of(v.begin(), v.end(), [](const Integer& x) { return x >= 0; });
        const bool nonpos = std::all_of(v.begin(), v.end(), [](const Integer& x) { return x <= 0; });
        if (nonneg) return v;
        if (nonpos) {
            for (auto& x : v) x = -x;
            return v;
        }
        return std::nullopt;
    }
    // Higher rank: a Hilbert basis element of the augmented system, if any.
    const IntMatrix a = augmented_relation_matrix(group, family);
    std::vector<SmallVector> columns(a.cols(), SmallVector(a.rows()));
    for (std::size_t j = 0; j < a.cols(); ++j)
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (!a(i, j).fits_slong_p()) throw ArithmeticOverflow("coefficient exceeds 64 bits");
            columns[j][i] = a(i, j).get_si();
        }
    CompletionOptions opts;
    opts.first_only = true;
    const auto sols = minimal_nonnegative_solutions(columns, opts);
    if (sols.empty()) return std::nullopt;
    IntVector v(family.size());
    for (std::size_t i = 0; i < family.size(); ++i) v[i] = static_cast<long>(sols.front()[i]);
    return v;
}

// ---------------------------------------------------------------------------

std::vector<FinGenAbelianGroup> abelian_groups_of_order(long n) {
    if (n < 1) throw InvalidArgument("group order must be positive");
    // Invariant-factor chains d1 | d2 | ... | dk with product n, all di >= 2.
    std::vector<FinGenAbelianGroup> out;
    std::vector<long> chain;
    auto rec = [&](auto&& self, long remaining) -> void {
        if (remaining == 1) {
            std::vector<Integer> t;
            for (long d : chain) t.emplace_back(d);
            out.emplace_back(0, std::move(t));
            return;
        }
        for (long d = 2; d <= remaining; ++d) {
            if (remaining % d != 0) continue;
            if (!chain.empty() && d % chain.back() != 0) continue;
            // Every later factor is a multiple of d, so d^k must divide n.
            long rest = remaining / d;
            if (rest != 1 && rest % d != 0) continue;
            chain.push_back(d);
            self(self, rest);
            chain.pop_back();
        }
    };
    rec(rec, n);
    return out;
}

}  // namespace absirr
