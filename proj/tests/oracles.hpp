#pragma once

// Brute-force oracles used only by the tests. Nothing here calls into the
// algorithms it checks beyond plain group arithmetic.

#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "absirr/abgroup.hpp"

namespace oracle {

using absirr::FinGenAbelianGroup;
using absirr::GroupElement;
using absirr::IntMatrix;
using absirr::Integer;
using absirr::IntVector;

inline Integer laplace_det(const std::vector<std::vector<Integer>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    Integer det = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j] == 0) continue;
        std::vector<std::vector<Integer>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<Integer> row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(m[i][c]);
            minor.push_back(std::move(row));
        }
        Integer term = m[0][j] * laplace_det(minor);
        det += (j % 2 == 0) ? term : Integer(-term);
    }
    return det;
}

inline void subsets(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
    std::vector<std::size_t> idx;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (idx.size() == k) {
            f(idx);
            return;
        }
        for (std::size_t i = start; i < n; ++i) {
            idx.push_back(i);
            rec(i + 1);
            idx.pop_back();
        }
    };
    rec(0);
}

/// gcd of all k x k minors, via cofactor expansion.
inline Integer gcd_of_minors(const IntMatrix& a, std::size_t k) {
    Integer g = 0;
    subsets(a.rows(), k, [&](const std::vector<std::size_t>& rs) {
        subsets(a.cols(), k, [&](const std::vector<std::size_t>& cs) {
            std::vector<std::vector<Integer>> m;
            for (auto r : rs) {
                std::vector<Integer> row;
                for (auto c : cs) row.push_back(a(r, c));
                m.push_back(std::move(row));
            }
            Integer d = laplace_det(m);
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
        });
    });
    return g;
}

inline GroupElement weighted_sum(const FinGenAbelianGroup& group, const std::vector<GroupElement>& family,
                                 const IntVector& coeffs) {
    GroupElement acc = group.zero();
    for (std::size_t i = 0; i < family.size(); ++i) acc = group.add(acc, group.scale(coeffs[i], family[i]));
    return acc;
}

/// Visits every vector in [lo, hi]^m; stops when f returns true.
inline bool for_each_box(std::size_t m, long lo, long hi, const std::function<bool(const IntVector&)>& f) {
    IntVector v(m, Integer(lo));
    for (;;) {
        if (f(v)) return true;
        std::size_t i = m;
        for (;;) {
            if (i == 0) return false;
            --i;
            if (v[i] < hi) {
                ++v[i];
                break;
            }
            v[i] = lo;
        }
    }
}

inline std::vector<IntVector> brute_kernel_vectors(const FinGenAbelianGroup& group,
                                                   const std::vector<GroupElement>& family, long bound) {
    std::vector<IntVector> out;
    for_each_box(family.size(), -bound, bound, [&](const IntVector& v) {
        if (weighted_sum(group, family, v).is_zero()) out.push_back(v);
        return false;
    });
    return out;
}

inline bool brute_has_nonzero_kernel(const FinGenAbelianGroup& group, const std::vector<GroupElement>& family,
                                     long bound) {
    return for_each_box(family.size(), -bound, bound, [&](const IntVector& v) {
        bool nonzero = false;
        for (const auto& x : v) nonzero = nonzero || x != 0;
        return nonzero && weighted_sum(group, family, v).is_zero();
    });
}

inline std::optional<IntVector> brute_positive_kernel_vector(const FinGenAbelianGroup& group,
                                                             const std::vector<GroupElement>& family,
                                                             long bound) {
    std::optional<IntVector> found;
    for_each_box(family.size(), 0, bound, [&](const IntVector& v) {
        bool nonzero = false;
        for (const auto& x : v) nonzero = nonzero || x != 0;
        if (nonzero && weighted_sum(group, family, v).is_zero()) {
            found = v;
            return true;
        }
        return false;
    });
    return found;
}

inline std::vector<GroupElement> random_family(std::mt19937& rng, const FinGenAbelianGroup& group, std::size_t m,
                                               long free_range) {
    std::uniform_int_distribution<long> fr(-free_range, free_range);
    std::vector<GroupElement> out;
    for (std::size_t k = 0; k < m; ++k) {
        IntVector f(group.free_rank()), t(group.torsion().size());
        for (auto& x : f) x = fr(rng);
        for (std::size_t i = 0; i < t.size(); ++i) {
            std::uniform_int_distribution<long> td(0, group.torsion()[i].get_si() - 1);
            t[i] = td(rng);
        }
        out.push_back(group.element(std::move(f), std::move(t)));
    }
    return out;
}

}  // namespace oracle
