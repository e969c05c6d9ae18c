#pragma once

#include "ratseq/fraction.hpp"
#include "ratseq/recurrence.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace ratseq {

/// Guards against materializing rows or trees that cannot fit in memory.
/// The streaming kernels carry O(1) state and take no limit.
struct RowLimits {
    int max_order = 30;                 // sb/cw rows and tree depth (2^n entries)
    std::int64_t max_farey_order = 2000; // materialized Farey oracles only
};

/// One Stern-Brocot sequence row: 2^order + 1 fractions from 0/1 to 1/0,
/// strictly increasing. coeffs holds the step coefficients consumed while
/// building the row left to right (2^order - 1 of them); rows built by
/// mediant insertion leave it empty.
struct SbRow {
    int order = 0;
    std::vector<Fraction> entries;
    std::vector<std::int64_t> coeffs;
};

/// Builds the row left to right from the twin recurrences over numerators
/// and denominators, seeds (0, 1) and (1, order). Order 0 falls out of the
/// seeds with an empty loop.
SbRow sb_row(int order, const RowLimits& limits = {});

/// The same row built by repeated mediant insertion starting from
/// [0/1, 1/0]; the independent oracle for sb_row.
SbRow sb_row_topdown(int order, const RowLimits& limits = {});

/// Unbounded Calkin-Wilf enumeration. Emits fraction t = x_t/x_{t+1} of the
/// chained sequence, 0-based, where x is driven by the same three-term
/// recurrence as the Stern-Brocot numerators. State is three integers;
/// resumable and cheap to copy.
class CwStream {
public:
    CwStream() : window_{0, 1, 1} {}

    /// Next fraction; its denominator becomes the next fraction's numerator.
    Fraction next();

    /// 0-based position of the fraction the next call will emit.
    std::int64_t position() const { return window_.index - 1; }

    /// Coefficient consumed by the most recent next(); 0 before the first.
    std::int64_t last_coeff() const { return last_coeff_; }

    RecurrenceState state() const { return window_; }
    static CwStream resume(const RecurrenceState& state);

private:
    RecurrenceState window_;
    std::int64_t last_coeff_ = 0;
};

/// First count fractions of the stream, consuming it.
std::vector<Fraction> take(CwStream& stream, std::int64_t count);

/// Fraction at the given 0-based position of a fresh stream; O(position).
Fraction cw_nth(std::int64_t position);

/// Row of 2^(order-1) fractions at the given depth of the Calkin-Wilf tree,
/// computed left to right with denominator seeds (1, order).
std::vector<Fraction> cw_row(int order, const RowLimits& limits = {});

/// Breadth-first rows 1..depth of the Calkin-Wilf tree rooted at 1/1, child
/// rule p/q -> p/(p+q), (p+q)/q; the independent oracle for cw_row and for
/// stream prefixes.
std::vector<std::vector<Fraction>> cw_tree_topdown(int depth, const RowLimits& limits = {});

/// Streaming Farey enumeration of a fixed order. Emits 0/1, 1/n, then each
/// next term from the floor-coefficient recurrence, and finishes after
/// emitting 1/1. State is two recurrence windows.
class FareyStream {
public:
    explicit FareyStream(std::int64_t order);

    std::int64_t order() const { return order_; }
    bool done() const { return done_; }
    std::int64_t emitted() const { return emitted_; }

    /// Coefficient consumed by the most recent next(); empty for the two
    /// seed terms.
    std::optional<std::int64_t> last_coeff() const { return last_coeff_; }

    /// Next fraction; throws std::out_of_range once done.
    Fraction next();

private:
    std::int64_t order_;
    RecurrenceState nums_{0, 1, 1};
    RecurrenceState dens_{1, 0, 1};
    std::int64_t emitted_ = 0;
    std::optional<std::int64_t> last_coeff_;
    bool done_ = false;
};

/// The whole Farey sequence of the given order, via FareyStream.
std::vector<Fraction> farey_stream(std::int64_t order);

/// All reduced p/q with 0 <= p <= q <= order, generated exhaustively and
/// sorted by value. Independent oracle; materializes the full sequence.
std::vector<Fraction> farey_bruteforce(std::int64_t order, const RowLimits& limits = {});

/// One refinement round: inserts the mediant between consecutive entries
/// exactly where it lands on the given denominator.
void farey_refine(std::vector<Fraction>& row, std::int64_t next_order);

/// Farey sequence built by refining [0/1, 1/1] one order at a time, keeping
/// only mediants whose denominator matches the round. The Stern-Brocot
/// filter oracle: the fractions are the den <= order, value <= 1 subsequence
/// of the mediant tree.
std::vector<Fraction> farey_mediant_filter(std::int64_t order, const RowLimits& limits = {});

} // namespace ratseq
