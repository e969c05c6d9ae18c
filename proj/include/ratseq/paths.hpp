#pragma once

#include "ratseq/fraction.hpp"

#include <cstddef>
#include <string>
#include <string_view>

namespace ratseq {

/// A word over {L, R} locating a positive rational in a binary tree of
/// fractions, read root to node. The empty path is the root 1/1 in both the
/// Stern-Brocot and the Calkin-Wilf tree; L always means the smaller child.
class PathString {
public:
    PathString() = default;

    /// Validates that text uses only 'L' and 'R'.
    static PathString parse(std::string_view text);

    /// Appends one move; accepts only 'L' or 'R'.
    void push(char move);

    const std::string& str() const { return moves_; }
    std::size_t size() const { return moves_.size(); }
    bool empty() const { return moves_.empty(); }

    PathString reversed() const;

    friend bool operator==(const PathString&, const PathString&) = default;

private:
    std::string moves_;
};

/// Position of f in the Stern-Brocot tree, found by mediant bisection from
/// the bounds (0/1, 1/0): L narrows to the lower interval, R to the upper.
/// Requires f finite, positive, and reduced.
PathString sb_path(const Fraction& f);

/// Position of f in the Calkin-Wilf tree, found by walking from f up to the
/// root (a left child p/q came from p/(q-p), a right child from (p-q)/q) and
/// reversing the climb. Requires f finite, positive, and reduced.
PathString cw_path(const Fraction& f);

/// Fraction at the given Stern-Brocot tree position; inverse of sb_path.
Fraction sb_fraction_at(const PathString& path);

/// Fraction at the given Calkin-Wilf tree position; inverse of cw_path.
Fraction cw_fraction_at(const PathString& path);

} // namespace ratseq
