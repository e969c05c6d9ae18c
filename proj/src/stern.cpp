#include "ratseq/stern.hpp"

#include "ratseq/checked.hpp"

#include <bit>
#include <stdexcept>

namespace ratseq {

int nu2(std::int64_t i) {
    if (i < 1) {
        throw std::domain_error("nu2 requires a positive index");
    }
    return std::countr_zero(static_cast<std::uint64_t>(i));
}

std::int64_t step_coeff(std::int64_t i) {
    return 2 * static_cast<std::int64_t>(nu2(i)) + 1;
}

std::int64_t step_coeff_doubling(std::int64_t i) {
    if (i < 1) {
        throw std::domain_error("step_coeff_doubling requires a positive index");
    }
    if (i == 1) {
        return 1;
    }
    if (i % 2 == 1) {
        return 1;
    }
    return step_coeff_doubling(i / 2) + 2;
}

std::int64_t stern(std::int64_t i) {
    if (i < -1) {
        throw std::domain_error("stern index must be >= -1");
    }
    if (i == -1) {
        return 0;
    }
    if (i == 0) {
        return 1;
    }
    // Walk the bits of i from the top, carrying the window
    // (stern(j-1), stern(j)) for the prefix j read so far.
    const auto bits = static_cast<std::uint64_t>(i);
    std::int64_t below = 0;
    std::int64_t at = 1;
    for (int bit = std::bit_width(bits) - 1; bit >= 0; --bit) {
        if ((bits >> bit) & 1U) {
            below = checked_add(below, at);
        } else {
            at = checked_add(below, at);
        }
    }
    return at;
}

std::vector<std::int64_t> hyperbinary_table(std::int64_t max) {
    if (max < 0) {
        throw std::domain_error("hyperbinary bound must be non-negative");
    }
    if (max > kHyperbinaryMax) {
        throw limit_error("hyperbinary bound exceeds the exhaustive-search limit");
    }
    std::vector<std::int64_t> ways(static_cast<std::size_t>(max) + 1, 0);
    ways[0] = 1;
    for (std::int64_t power = 1; power <= max; power *= 2) {
        std::vector<std::int64_t> next(ways.size(), 0);
        for (std::int64_t v = 0; v <= max; ++v) {
            std::int64_t total = ways[static_cast<std::size_t>(v)];
            if (v >= power) {
                total = checked_add(total, ways[static_cast<std::size_t>(v - power)]);
            }
            if (v >= 2 * power) {
                total = checked_add(total, ways[static_cast<std::size_t>(v - 2 * power)]);
            }
            next[static_cast<std::size_t>(v)] = total;
        }
        ways = std::move(next);
    }
    return ways;
}

std::int64_t hyperbinary_count(std::int64_t m) {
    return hyperbinary_table(m).back();
}

} // namespace ratseq
