#pragma once

#include <cstdint>
#include <vector>

namespace ratseq {

/// Euler's totient by trial factorization. Requires n >= 1; totient(1) = 1.
std::int64_t totient(std::int64_t n);

/// phi(1..n) as a sieve; slot 0 is unused. Requires n >= 1.
std::vector<std::int64_t> totient_sieve(std::int64_t n);

/// Number of fractions in the Farey sequence of order n: 1 + sum of phi(j)
/// for j <= n.
std::int64_t farey_size(std::int64_t n);

} // namespace ratseq
