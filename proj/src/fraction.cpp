#include "ratseq/fraction.hpp"

#include "ratseq/checked.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace ratseq {

std::int64_t gcd(std::int64_t a, std::int64_t b) {
    if (a < 0 || b < 0) {
        throw std::domain_error("gcd requires non-negative arguments");
    }
    if (a == 0 && b == 0) {
        throw std::domain_error("gcd(0, 0) is undefined");
    }
    return std::gcd(a, b);
}

Fraction::Fraction(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (n < 0 || d < 0) {
        throw std::domain_error("fraction parts must be non-negative");
    }
    if (n == 0 && d == 0) {
        throw std::domain_error("0/0 is not a fraction");
    }
}

bool Fraction::is_reduced() const {
    return gcd(num, den) == 1;
}

std::string Fraction::str() const {
    return std::to_string(num) + "/" + std::to_string(den);
}

namespace {

std::int64_t parse_part(std::string_view text) {
    std::int64_t value = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || text.empty()) {
        throw std::invalid_argument("malformed fraction part: '" + std::string(text) + "'");
    }
    return value;
}

} // namespace

Fraction Fraction::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        throw std::invalid_argument("fraction must be written p/q: '" + std::string(text) + "'");
    }
    const std::int64_t n = parse_part(text.substr(0, slash));
    const std::int64_t d = parse_part(text.substr(slash + 1));
    if (n == 0 && d == 0) {
        throw std::invalid_argument("0/0 is not a fraction");
    }
    return Fraction(n, d);
}

bool value_less(const Fraction& lhs, const Fraction& rhs) {
    using wide = __int128;
    return static_cast<wide>(lhs.num) * rhs.den < static_cast<wide>(rhs.num) * lhs.den;
}

bool is_adjacent(const Fraction& lo, const Fraction& hi) {
    if (!value_less(lo, hi)) {
        throw std::domain_error("adjacency is defined for lo < hi");
    }
    using wide = __int128;
    return static_cast<wide>(lo.den) * hi.num - static_cast<wide>(lo.num) * hi.den == 1;
}

Fraction mediant(const Fraction& lo, const Fraction& hi) {
    if (!value_less(lo, hi)) {
        throw std::domain_error("mediant requires lo < hi");
    }
    return Fraction(checked_add(lo.num, hi.num), checked_add(lo.den, hi.den));
}

} // namespace ratseq
