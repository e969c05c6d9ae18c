#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace ratseq {

/// gcd over non-negative integers with gcd(x, 0) = x. Rejects (0, 0).
std::int64_t gcd(std::int64_t a, std::int64_t b);

/// A non-negative rational p/q. The sequence kernels only ever produce
/// reduced values, and the two boundary values 0/1 and 1/0 are ordinary
/// fractions here: q == 0 compares greater than every finite value.
///
/// Equality is memberwise (2/4 != 1/2), so sequence comparisons cannot be
/// fooled by an unreduced entry; ordering compares values by
/// cross-multiplication.
struct Fraction {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Fraction() = default;
    Fraction(std::int64_t n, std::int64_t d);

    bool is_finite() const { return den != 0; }
    bool is_reduced() const;

    /// Renders as "p/q"; 1/0 stays "1/0", never "inf".
    std::string str() const;

    /// Parses "p/q" with both parts unsigned decimal. Throws
    /// std::invalid_argument on anything else. Does not reduce.
    static Fraction parse(std::string_view text);

    friend bool operator==(const Fraction&, const Fraction&) = default;
};

/// Value order: a/b < c/d iff a*d < c*b (exact, widened internally).
bool value_less(const Fraction& lhs, const Fraction& rhs);

inline bool operator<(const Fraction& lhs, const Fraction& rhs) {
    return value_less(lhs, rhs);
}

/// True iff lo < hi and den(lo)*num(hi) - num(lo)*den(hi) == 1.
/// Adjacent fractions are automatically reduced.
bool is_adjacent(const Fraction& lo, const Fraction& hi);

/// (a+c)/(b+d) for lo = a/b < c/d = hi. No reduction is applied; when the
/// inputs are adjacent the result is guaranteed reduced and strictly between
/// them, and masking a violation of that by reducing would hide kernel bugs.
Fraction mediant(const Fraction& lo, const Fraction& hi);

} // namespace ratseq
