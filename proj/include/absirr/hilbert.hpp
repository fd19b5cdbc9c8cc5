#pragma once

// Minimal nonzero nonnegative solutions (the Hilbert basis) of a homogeneous
// integer system A x = 0, by the Contejean-Devie completion procedure.

#include <cstdint>
#include <vector>

namespace absirr {

using SmallVector = std::vector<std::int64_t>;

struct CompletionOptions {
    /// Maximum number of frontier vectors examined; BudgetExceeded beyond it.
    long long budget = 10'000'000;
    /// Stop as soon as one solution is found.
    bool first_only = false;
};

struct CompletionStats {
    std::size_t levels = 0;
    long long nodes = 0;
};

/// `columns[j]` is A e_j; all columns must have the same length. Returns the
/// solutions sorted lexicographically.
std::vector<SmallVector> minimal_nonnegative_solutions(const std::vector<SmallVector>& columns,
                                                       const CompletionOptions& options = {},
                                                       CompletionStats* stats = nullptr);

/// a + b, a * b with overflow detection (throws ArithmeticOverflow).
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

}  // namespace absirr
