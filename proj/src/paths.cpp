#include "ratseq/paths.hpp"

#include "ratseq/checked.hpp"

#include <algorithm>
#include <stdexcept>

namespace ratseq {

PathString PathString::parse(std::string_view text) {
    PathString path;
    for (char move : text) {
        path.push(move);
    }
    return path;
}

void PathString::push(char move) {
    if (move != 'L' && move != 'R') {
        throw std::invalid_argument(std::string("path moves are 'L' or 'R', got '") + move + "'");
    }
    moves_.push_back(move);
}

PathString PathString::reversed() const {
    PathString out;
    out.moves_.assign(moves_.rbegin(), moves_.rend());
    return out;
}

namespace {

void check_tree_fraction(const Fraction& f, const char* what) {
    if (!f.is_finite() || f.num < 1) {
        throw std::domain_error(std::string(what) + " is defined for finite positive fractions");
    }
    if (!f.is_reduced()) {
        throw std::domain_error(std::string(what) + " requires a reduced fraction");
    }
}

} // namespace

PathString sb_path(const Fraction& f) {
    check_tree_fraction(f, "sb_path");
    PathString path;
    Fraction lo(0, 1);
    Fraction hi(1, 0);
    for (;;) {
        const Fraction mid = mediant(lo, hi);
        if (f == mid) {
            return path;
        }
        if (value_less(f, mid)) {
            path.push('L');
            hi = mid;
        } else {
            path.push('R');
            lo = mid;
        }
    }
}

PathString cw_path(const Fraction& f) {
    check_tree_fraction(f, "cw_path");
    std::string climb;
    std::int64_t p = f.num;
    std::int64_t q = f.den;
    while (p != q) {
        if (p < q) {
            climb.push_back('L');
            q -= p;
        } else {
            climb.push_back('R');
            p -= q;
        }
    }
    std::reverse(climb.begin(), climb.end());
    return PathString::parse(climb);
}

Fraction sb_fraction_at(const PathString& path) {
    Fraction lo(0, 1);
    Fraction hi(1, 0);
    for (char move : path.str()) {
        const Fraction mid = mediant(lo, hi);
        if (move == 'L') {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return mediant(lo, hi);
}

Fraction cw_fraction_at(const PathString& path) {
    Fraction f(1, 1);
    for (char move : path.str()) {
        if (move == 'L') {
            f = Fraction(f.num, checked_add(f.num, f.den));
        } else {
            f = Fraction(checked_add(f.num, f.den), f.den);
        }
    }
    return f;
}

} // namespace ratseq
