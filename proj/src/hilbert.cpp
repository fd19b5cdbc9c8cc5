#include "absirr/hilbert.hpp"

#include <algorithm>
#include <set>

#include "absirr/errors.hpp"

namespace absirr {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("64-bit addition overflow");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("64-bit multiplication overflow");
    return r;
}

namespace {

// A frontier vector x together with its image A x.
struct Node {
    SmallVector x;
    SmallVector image;
    bool operator<(const Node& o) const { return x < o.x; }
};

bool dominates(const SmallVector& big, const SmallVector& small) {
    for (std::size_t i = 0; i < big.size(); ++i)
        if (big[i] < small[i]) return false;
    return true;
}

bool is_zero(const SmallVector& v) {
    return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
}

std::int64_t dot(const SmallVector& a, const SmallVector& b) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s = checked_add(s, checked_mul(a[i], b[i]));
    return s;
}

}  // namespace

std::vector<SmallVector> minimal_nonnegative_solutions(const std::vector<SmallVector>& columns,
                                                       const CompletionOptions& options,
                                                       CompletionStats* stats) {
    const std::size_t n = columns.size();
    if (n == 0) return {};
    const std::size_t rows = columns.front().size();
    for (const auto& c : columns)
        if (c.size() != rows) throw DimensionMismatch("columns of unequal length");

    std::vector<SmallVector> basis;
    std::set<Node> frontier;
    for (std::size_t j = 0; j < n; ++j) {
        SmallVector x(n, 0);
        x[j] = 1;
        frontier.insert(Node{std::move(x), columns[j]});
    }

    CompletionStats local;
    while (!frontier.empty()) {
        ++local.levels;
        // Solutions on this level all have the same total degree, so they are
        // pairwise incomparable and were already checked against `basis`.
        for (const auto& node : frontier)
            if (is_zero(node.image)) basis.push_back(node.x);
        if (options.first_only && !basis.empty()) break;

        std::set<Node> next;
        for (const auto& node : frontier) {
            if (++local.nodes > options.budget) {
                if (stats) *stats = local;
                throw BudgetExceeded("Hilbert basis completion", options.budget);
            }
            if (is_zero(node.image)) continue;
            for (std::size_t j = 0; j < n; ++j) {
                // Contejean-Devie: only move towards the origin.
                if (dot(node.image, columns[j]) >= 0) continue;
                SmallVector y = node.x;
                y[j] = checked_add(y[j], 1);
                const bool subsumed = std::any_of(basis.begin(), basis.end(),
                                                  [&](const SmallVector& b) { return dominates(y, b); });
                if (subsumed) continue;
                SmallVector image(rows);
                for (std::size_t i = 0; i < rows; ++i) image[i] = checked_add(node.image[i], columns[j][i]);
                next.insert(Node{std::move(y), std::move(image)});
            }
        }
        frontier = std::move(next);
    }
    if (stats) *stats = local;
    std::sort(basis.begin(), basis.end());
    return basis;
}

}  // namespace absirr
