#pragma once

#include <cstdint>
#include <vector>

namespace ratseq {

/// 2-adic valuation: the largest v with 2^v dividing i. Requires i >= 1.
int nu2(std::int64_t i);

/// Coefficient of the three-term recurrence x_i = c*x_{i-1} - x_{i-2} shared
/// by the Stern-Brocot and Calkin-Wilf kernels: 2*nu2(i) + 1. Requires i >= 1.
std::int64_t step_coeff(std::int64_t i);

/// The same coefficient values generated by an index-doubling recurrence
/// instead of the valuation: c(1) = 1, c(odd) = 1, c(2j) = c(j) + 2.
/// Kept as a separate route so the two can be cross-checked.
std::int64_t step_coeff_doubling(std::int64_t i);

/// Stern diatomic value at index i >= -1, with stern(-1) = 0, stern(0) = 1,
/// stern(2j-1) = stern(j-1), stern(2j) = stern(j-1) + stern(j). Evaluated by
/// iterative index halving, O(log i) per query.
std::int64_t stern(std::int64_t i);

/// Largest m accepted by the hyperbinary counters; beyond this the exhaustive
/// table no longer fits a sensible time/memory budget.
inline constexpr std::int64_t kHyperbinaryMax = std::int64_t{1} << 20;

/// ways[v] = number of multisets of powers of two, each power used at most
/// twice, summing to v, for 0 <= v <= max. Computed by a bounded-knapsack
/// sweep over the powers; deliberately shares nothing with stern() so it can
/// serve as an independent oracle.
std::vector<std::int64_t> hyperbinary_table(std::int64_t max);

/// hyperbinary_table(m)[m]; prefer the table for sweeps.
std::int64_t hyperbinary_count(std::int64_t m);

} // namespace ratseq
