#include "ratseq/enumerate.hpp"

#include "ratseq/stern.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace ratseq {

namespace {

void check_order(int order, int min_order, const RowLimits& limits, const char* what) {
    if (order < min_order) {
        throw std::invalid_argument(std::string(what) + " requires order >= " +
                                    std::to_string(min_order));
    }
    if (order > limits.max_order) {
        throw limit_error(std::string(what) + " order " + std::to_string(order) +
                          " exceeds the materialization limit " +
                          std::to_string(limits.max_order));
    }
}

} // namespace

SbRow sb_row(int order, const RowLimits& limits) {
    check_order(order, 0, limits, "sb_row");
    const std::int64_t count = std::int64_t{1} << order; // N = 2^order
    SbRow row;
    row.order = order;
    row.entries.reserve(static_cast<std::size_t>(count) + 1);
    row.coeffs.reserve(static_cast<std::size_t>(count) - 1);
    RecurrenceState nums{0, 1, 1};
    RecurrenceState dens{1, order, 1};
    row.entries.emplace_back(nums.prev2, dens.prev2);
    row.entries.emplace_back(nums.prev1, dens.prev1);
    for (std::int64_t i = 1; i < count; ++i) {
        const std::int64_t coeff = step_coeff(i);
        row.coeffs.push_back(coeff);
        row.entries.emplace_back(nums.step(coeff), dens.step(coeff));
    }
    return row;
}

SbRow sb_row_topdown(int order, const RowLimits& limits) {
    check_order(order, 0, limits, "sb_row_topdown");
    std::vector<Fraction> current{Fraction(0, 1), Fraction(1, 0)};
    for (int round = 1; round <= order; ++round) {
        std::vector<Fraction> refined;
        refined.reserve(current.size() * 2 - 1);
        for (std::size_t j = 0; j + 1 < current.size(); ++j) {
            refined.push_back(current[j]);
            refined.push_back(mediant(current[j], current[j + 1]));
        }
        refined.push_back(current.back());
        current = std::move(refined);
    }
    SbRow row;
    row.order = order;
    row.entries = std::move(current);
    return row;
}

Fraction CwStream::next() {
    last_coeff_ = step_coeff(window_.index);
    const std::int64_t numerator = window_.prev1;
    const std::int64_t denominator = window_.step(last_coeff_);
    return Fraction(numerator, denominator);
}

CwStream CwStream::resume(const RecurrenceState& state) {
    if (state.index < 1) {
        throw std::invalid_argument("cw stream state index must be >= 1");
    }
    CwStream stream;
    stream.window_ = state;
    return stream;
}

std::vector<Fraction> take(CwStream& stream, std::int64_t count) {
    if (count < 0) {
        throw std::invalid_argument("take requires a non-negative count");
    }
    std::vector<Fraction> out;
    out.reserve(static_cast<std::size_t>(count));
    for (std::int64_t i = 0; i < count; ++i) {
        out.push_back(stream.next());
    }
    return out;
}

Fraction cw_nth(std::int64_t position) {
    if (position < 0) {
        throw std::invalid_argument("cw_nth requires a non-negative position");
    }
    CwStream stream;
    Fraction f;
    for (std::int64_t i = 0; i <= position; ++i) {
        f = stream.next();
    }
    return f;
}

std::vector<Fraction> cw_row(int order, const RowLimits& limits) {
    check_order(order, 1, limits, "cw_row");
    const std::int64_t count = std::int64_t{1} << (order - 1); // N = 2^(order-1)
    std::vector<Fraction> row;
    row.reserve(static_cast<std::size_t>(count));
    RecurrenceState dens{1, order, 1};
    row.emplace_back(dens.prev2, dens.prev1);
    for (std::int64_t i = 1; i < count; ++i) {
        const std::int64_t numerator = dens.prev1;
        row.emplace_back(numerator, dens.step(step_coeff(i)));
    }
    return row;
}

std::vector<std::vector<Fraction>> cw_tree_topdown(int depth, const RowLimits& limits) {
    check_order(depth, 1, limits, "cw_tree_topdown");
    std::vector<std::vector<Fraction>> rows;
    rows.push_back({Fraction(1, 1)});
    for (int level = 2; level <= depth; ++level) {
        const auto& parents = rows.back();
        std::vector<Fraction> children;
        children.reserve(parents.size() * 2);
        for (const Fraction& f : parents) {
            const std::int64_t sum = checked_add(f.num, f.den);
            children.emplace_back(f.num, sum);
            children.emplace_back(sum, f.den);
        }
        rows.push_back(std::move(children));
    }
    return rows;
}

FareyStream::FareyStream(std::int64_t order) : order_(order) {
    if (order < 1) {
        throw std::invalid_argument("farey order must be >= 1");
    }
    dens_.prev1 = order;
}

Fraction FareyStream::next() {
    if (done_) {
        throw std::out_of_range("farey stream is exhausted");
    }
    Fraction f;
    if (emitted_ == 0) {
        f = Fraction(nums_.prev2, dens_.prev2); // 0/1
    } else if (emitted_ == 1) {
        f = Fraction(nums_.prev1, dens_.prev1); // 1/order
    } else {
        const std::int64_t coeff = checked_add(dens_.prev2, order_) / dens_.prev1;
        last_coeff_ = coeff;
        f = Fraction(nums_.step(coeff), dens_.step(coeff));
    }
    ++emitted_;
    if (f.num == f.den) {
        done_ = true; // reached 1/1
    }
    return f;
}

std::vector<Fraction> farey_stream(std::int64_t order) {
    FareyStream stream(order);
    std::vector<Fraction> out;
    while (!stream.done()) {
        out.push_back(stream.next());
    }
    return out;
}

std::vector<Fraction> farey_bruteforce(std::int64_t order, const RowLimits& limits) {
    if (order < 1) {
        throw std::invalid_argument("farey order must be >= 1");
    }
    if (order > limits.max_farey_order) {
        throw limit_error("farey_bruteforce order " + std::to_string(order) +
                          " exceeds the materialization limit " +
                          std::to_string(limits.max_farey_order));
    }
    std::vector<Fraction> out;
    for (std::int64_t q = 1; q <= order; ++q) {
        for (std::int64_t p = 0; p <= q; ++p) {
            if (std::gcd(p, q) == 1) {
                out.emplace_back(p, q);
            }
        }
    }
    std::sort(out.begin(), out.end(), value_less);
    return out;
}

void farey_refine(std::vector<Fraction>& row, std::int64_t next_order) {
    std::vector<Fraction> refined;
    refined.reserve(row.size() + row.size() / 2);
    for (std::size_t j = 0; j + 1 < row.size(); ++j) {
        refined.push_back(row[j]);
        if (checked_add(row[j].den, row[j + 1].den) == next_order) {
            refined.push_back(mediant(row[j], row[j + 1]));
        }
    }
    refined.push_back(row.back());
    row = std::move(refined);
}

std::vector<Fraction> farey_mediant_filter(std::int64_t order, const RowLimits& limits) {
    if (order < 1) {
        throw std::invalid_argument("farey order must be >= 1");
    }
    if (order > limits.max_farey_order) {
        throw limit_error("farey_mediant_filter order " + std::to_string(order) +
                          " exceeds the materialization limit " +
                          std::to_string(limits.max_farey_order));
    }
    std::vector<Fraction> row{Fraction(0, 1), Fraction(1, 1)};
    for (std::int64_t m = 2; m <= order; ++m) {
        farey_refine(row, m);
    }
    return row;
}

} // namespace ratseq
