#pragma once

#include "ratseq/checked.hpp"

#include <cstdint>

namespace ratseq {

/// Sliding window of a three-term recurrence x_i = c_i*x_{i-1} - x_{i-2}.
/// Seeded with the two pre-terms; index is the subscript the next step will
/// produce. Three integers of state, trivially copyable and serializable.
struct RecurrenceState {
    std::int64_t prev2 = 0; // x_{i-2}
    std::int64_t prev1 = 0; // x_{i-1}
    std::int64_t index = 1; // i of the next term

    /// Produces x_i for the given coefficient, slides the window, and
    /// advances the index.
    std::int64_t step(std::int64_t coeff) {
        const std::int64_t next = checked_sub(checked_mul(coeff, prev1), prev2);
        prev2 = prev1;
        prev1 = next;
        ++index;
        return next;
    }

    friend bool operator==(const RecurrenceState&, const RecurrenceState&) = default;
};

} // namespace ratseq
